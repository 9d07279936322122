//! Reduced simplicial homology over `GF(p)` or `Q`.
//!
//! Betti numbers come from the augmented chain complex: the empty face spans
//! `C_{-1}`, so `{∅}` has `b_{-1} = 1` and every other non-void complex has
//! `b_{-1} = 0`. The void complex has no chain groups at all; its Betti vector
//! is all zeros and carries a flag.

mod chain;
pub mod rank;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use chain::SparseMatrix;

use crate::complexes::{Complex, FaceCensus};
use crate::error::{Error, Result};

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// `GF(p)`, `p` prime with `2 <= p < 2^31`.
    Prime(u32),
    /// Exact rationals.
    Rational,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn prime(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::domain(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Image of an integer in the stored coefficient representation.
    pub fn reduce(self, v: i64) -> i64 {
        match self {
            FieldSpec::Prime(p) => v.rem_euclid(p as i64),
            FieldSpec::Rational => v,
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rational => 0,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
            FieldSpec::Rational => f.write_str("rational"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `gf<p>` and `rational` (or `q`), case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "rational" || lower == "q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = lower
            .strip_prefix("gf")
            .ok_or_else(|| Error::domain(format!("unknown field `{s}`; expected gf<p> or rational")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::domain(format!("unknown field `{s}`; expected gf<p> or rational")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced Betti numbers `b_{-1}, b_0, ..., b_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    field: FieldSpec,
    // values[i + 1] = b_i
    values: Vec<u64>,
    void: bool,
}

impl BettiVector {
    /// All zeros, for the void complex.
    pub fn void(field: FieldSpec) -> Self {
        BettiVector { field, values: vec![0], void: true }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// `b_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    /// Highest degree stored (the dimension of the complex).
    pub fn max_degree(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// `(i, b_i)` for every stored degree, starting at `-1`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.values.iter().enumerate().map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `Σ (-1)^i b_i`.
    pub fn euler(&self) -> i64 {
        self.iter()
            .map(|(i, b)| if i.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Largest `i` with `b_i != 0`.
    pub fn top_degree(&self) -> Option<isize> {
        self.iter().filter(|&(_, b)| b != 0).map(|(i, _)| i).last()
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Degrees<'a>(&'a BettiVector);
        impl Serialize for Degrees<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.values.len()))?;
                for (i, b) in self.0.iter() {
                    m.serialize_entry(&i.to_string(), &b)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("betti", &Degrees(self))?;
        m.serialize_entry("total", &self.total())?;
        m.serialize_entry("field", &self.field)?;
        if self.void {
            m.serialize_entry("void", &true)?;
        }
        m.end()
    }
}

/// Boundary maps `∂_0, ..., ∂_dim` of the augmented chain complex, using the
/// default face cap.
pub fn boundary_matrices(k: &Complex, field: FieldSpec) -> Result<Vec<SparseMatrix>> {
    boundary_matrices_capped(k, field, crate::Limits::default().face_cap)
}

pub fn boundary_matrices_capped(k: &Complex, field: FieldSpec, face_cap: usize) -> Result<Vec<SparseMatrix>> {
    let census = k.face_census(face_cap)?;
    Ok(chain::boundaries(&census, field))
}

/// Reduced Betti numbers with the default face cap.
pub fn betti(k: &Complex, field: FieldSpec) -> Result<BettiVector> {
    betti_capped(k, field, crate::Limits::default().face_cap)
}

pub fn betti_capped(k: &Complex, field: FieldSpec, face_cap: usize) -> Result<BettiVector> {
    if k.is_void() {
        return Ok(BettiVector::void(field));
    }
    let census = k.face_census(face_cap)?;
    betti_of_census(&census, field)
}

pub(crate) fn betti_of_census(census: &FaceCensus, field: FieldSpec) -> Result<BettiVector> {
    let dims = census.f_vector();
    // ranks[s] = rank of ∂ from size-s faces; ranks[0] and ranks[top+1] are 0
    let mut ranks = vec![0usize; dims.len() + 1];
    for (s, w) in census.by_size.windows(2).enumerate() {
        let m = chain::boundary_level(&w[0], &w[1], field);
        ranks[s + 1] = rank::rank(&m, field)?;
    }
    let values = (0..dims.len())
        .map(|s| (dims[s] - ranks[s] - ranks[s + 1]) as u64)
        .collect();
    Ok(BettiVector { field, values, void: false })
}

/// `b(K)`, the sum of all reduced Betti numbers.
pub fn total_betti(k: &Complex, field: FieldSpec) -> Result<u64> {
    Ok(betti(k, field)?.total())
}

/// `χ̃(K) = Σ_{i >= -1} (-1)^i f_i`.
pub fn reduced_euler(k: &Complex) -> Result<i64> {
    Ok(k.face_census(crate::Limits::default().face_cap)?.reduced_euler())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{independence_complex, skeleton_simplex};
    use crate::graphs::{complete, copies, cycle};

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational];

    fn fano() -> Complex {
        Complex::from_lists(
            7,
            &[&[0, 3, 4], &[0, 2, 5], &[0, 1, 6], &[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]],
        )
        .unwrap()
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("GF7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("gf4".parse::<FieldSpec>().is_err());
        assert!("gf2147483648".parse::<FieldSpec>().is_err());
        assert!("gf2147483647".parse::<FieldSpec>().is_ok());
        assert!("real".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(3).to_string(), "gf3");
    }

    #[test]
    fn s0_boundary_is_all_ones() {
        let m = boundary_matrices(&Complex::sphere0(), FieldSpec::Rational).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for k in [Complex::simplex(2).unwrap(), Complex::simplex(5).unwrap(), fano(), skeleton_simplex(6, 2).unwrap()] {
            for f in FIELDS {
                let m = boundary_matrices(&k, f).unwrap();
                for w in m.windows(2) {
                    assert!(w[0].product_is_zero(&w[1], f));
                }
            }
        }
    }

    #[test]
    fn triangle_boundary_ranks() {
        let m = boundary_matrices(&skeleton_simplex(2, 1).unwrap(), FieldSpec::Rational).unwrap();
        assert_eq!(rank::rank(&m[0], FieldSpec::Rational).unwrap(), 1);
        assert_eq!(rank::rank(&m[1], FieldSpec::Rational).unwrap(), 2);
        // hand elimination of the 3x3 edge-vertex matrix
        assert_eq!(m[1].to_dense(), vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
    }

    #[test]
    fn empty_complex_has_degree_minus_one_class() {
        for f in FIELDS {
            let b = betti(&Complex::empty(3), f).unwrap();
            assert_eq!(b.get(-1), 1);
            assert_eq!(b.total(), 1);
            assert_eq!(b.euler(), -1);
        }
        assert_eq!(reduced_euler(&Complex::empty(0)).unwrap(), -1);
    }

    #[test]
    fn void_is_flagged_zero() {
        let b = betti(&Complex::void(3), FieldSpec::GF2).unwrap();
        assert!(b.is_void());
        assert_eq!(b.total(), 0);
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["void"], true);
    }

    #[test]
    fn golden_betti_numbers() {
        for f in FIELDS {
            let b = betti(&independence_complex(&complete(5).unwrap()), f).unwrap();
            assert_eq!((b.get(0), b.total()), (4, 4));
            let b = betti(&fano(), f).unwrap();
            assert_eq!((b.get(1), b.total()), (8, 8));
            let k2 = complete(2).unwrap();
            assert_eq!(total_betti(&independence_complex(&k2.disjoint_union(&k2).unwrap()), f).unwrap(), 1);
            assert_eq!(total_betti(&independence_complex(&cycle(5).unwrap()), f).unwrap(), 1);
            let g = copies(2, &complete(5).unwrap()).unwrap();
            assert_eq!(total_betti(&independence_complex(&g), f).unwrap(), 16);
        }
    }

    #[test]
    fn json_shape() {
        let b = betti(&independence_complex(&complete(5).unwrap()), FieldSpec::GF2).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"betti":{"-1":0,"0":4},"total":4,"field":"gf2"}"#);
    }

    #[test]
    fn reduced_euler_examples() {
        assert_eq!(reduced_euler(&Complex::sphere0()).unwrap(), 1);
        assert_eq!(reduced_euler(&fano()).unwrap().abs(), 8);
        let cone = Complex::from_lists(4, &[&[0, 1, 3], &[1, 2, 3]]).unwrap();
        assert_eq!(reduced_euler(&cone).unwrap(), 0);
    }

    #[test]
    fn real_projective_plane_shows_field_dependence() {
        // six-vertex triangulation of RP^2
        let rp2 = Complex::from_lists(
            6,
            &[
                &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5],
                &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[1, 3, 5], &[2, 4, 5],
            ],
        )
        .unwrap();
        let gf2 = betti(&rp2, FieldSpec::GF2).unwrap();
        assert_eq!((gf2.get(1), gf2.get(2)), (1, 1));
        assert_eq!(betti(&rp2, FieldSpec::Rational).unwrap().total(), 0);
        assert_eq!(betti(&rp2, FieldSpec::Prime(3)).unwrap().total(), 0);
        for f in FIELDS {
            assert_eq!(betti(&rp2, f).unwrap().euler(), reduced_euler(&rp2).unwrap());
        }
    }

    #[test]
    fn face_cap_is_enforced() {
        assert!(matches!(
            betti_capped(&Complex::simplex(12).unwrap(), FieldSpec::GF2, 100),
            Err(Error::CapExceeded { .. })
        ));
    }
}
