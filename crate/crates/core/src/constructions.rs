//! Extremal families with exact expected values.
//!
//! Each builder returns a [`GoldenCase`]: the object, its parameters, and
//! the exact value it must produce. [`GoldenCase::verify`] recomputes the
//! value with the homology engine and compares integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::complexes::{neighbourhood_complex, skeleton_simplex, write_facet_file, Complex};
use crate::error::{Error, Result};
use crate::graphs::{complete, copies, crown, encode_graph6, join_copies, Graph};
use crate::homology::{betti_capped, FieldSpec};
use crate::invariants::certified::{binomial, Base};
use crate::invariants::{b_graph_capped, beta_complete_closed, beta_crown_closed, hochster_beta_capped};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenObject {
    Graph(Graph),
    Complex(Complex),
}

impl GoldenObject {
    /// Number of vertices of the graph or ground set of the complex.
    pub fn order(&self) -> usize {
        match self {
            GoldenObject::Graph(g) => g.order(),
            GoldenObject::Complex(k) => k.ground_size(),
        }
    }

    /// graph6 for graphs, facet-file text for complexes.
    pub fn serialize_text(&self) -> Result<String> {
        match self {
            GoldenObject::Graph(g) => Ok(encode_graph6(g)? + "\n"),
            GoldenObject::Complex(k) => Ok(write_facet_file(k)),
        }
    }
}

/// Quantity a golden case pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Metric {
    /// `b(Ind(G))` for graphs, `b(K)` for complexes.
    #[serde(rename = "b")]
    B,
    /// `β(G)`, the Hochster sum.
    #[serde(rename = "beta")]
    Beta,
    /// `b(N(G))`.
    #[serde(rename = "b_neigh")]
    BNeighbourhood,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub metric: Metric,
    #[serde(serialize_with = "ser_big")]
    pub value: BigUint,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCase {
    pub name: String,
    pub params: Vec<(&'static str, usize)>,
    pub object: GoldenObject,
    pub expectations: Vec<Expectation>,
    /// What the case exhibits, in words.
    pub anchor: &'static str,
}

/// Serializable summary of a case (the object itself travels separately).
#[derive(Clone, Debug, Serialize)]
pub struct ExpectationRecord {
    pub name: String,
    pub params: std::collections::BTreeMap<&'static str, usize>,
    pub kind: &'static str,
    pub order: usize,
    pub expectations: Vec<Expectation>,
    pub anchor: &'static str,
}

/// One recomputed expectation.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub case: String,
    pub metric: Metric,
    pub field: FieldSpec,
    #[serde(serialize_with = "ser_big")]
    pub expected: BigUint,
    #[serde(serialize_with = "ser_opt_big")]
    pub computed: Option<BigUint>,
    /// Set when the value is beyond the configured caps and only the closed
    /// form is available.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub pass: bool,
}

fn ser_opt_big<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_big(v, s),
        None => s.serialize_none(),
    }
}

impl GoldenCase {
    pub fn record(&self) -> ExpectationRecord {
        ExpectationRecord {
            name: self.name.clone(),
            params: self.params.iter().copied().collect(),
            kind: match self.object {
                GoldenObject::Graph(_) => "graph",
                GoldenObject::Complex(_) => "complex",
            },
            order: self.object.order(),
            expectations: self.expectations.clone(),
            anchor: self.anchor,
        }
    }

    pub fn expected(&self, metric: Metric) -> Option<&BigUint> {
        self.expectations.iter().find(|e| e.metric == metric).map(|e| &e.value)
    }

    /// Recompute every expectation over `field`. `β` is skipped (reported,
    /// not failed) above the Hochster cap.
    pub fn verify(&self, field: FieldSpec, limits: &Limits) -> Result<Vec<CheckOutcome>> {
        let mut out = Vec::new();
        for e in &self.expectations {
            let computed = match (&self.object, e.metric) {
                (GoldenObject::Graph(g), Metric::B) => Some(b_graph_capped(g, field, limits.face_cap)?),
                (GoldenObject::Complex(k), Metric::B) => Some(betti_capped(k, field, limits.face_cap)?.total()),
                (GoldenObject::Graph(g), Metric::BNeighbourhood) => {
                    Some(betti_capped(&neighbourhood_complex(g), field, limits.face_cap)?.total())
                }
                (GoldenObject::Graph(g), Metric::Beta) if g.order() <= limits.hochster_cap => {
                    Some(hochster_beta_capped(g, field, limits)?.beta_total)
                }
                (GoldenObject::Graph(_), Metric::Beta) => None,
                (GoldenObject::Complex(_), m) => {
                    return Err(Error::Unsupported(format!("metric {m:?} on a complex")))
                }
            };
            let computed = computed.map(BigUint::from);
            out.push(CheckOutcome {
                case: self.name.clone(),
                metric: e.metric,
                field,
                expected: e.value.clone(),
                pass: computed.as_ref().is_none_or(|c| *c == e.value),
                skipped: computed.is_none().then(|| "order above the Hochster cap; closed form only".into()),
                computed,
            });
        }
        Ok(out)
    }
}

fn divisible(n: usize, by: usize, what: &str) -> Result<usize> {
    if by == 0 || !n.is_multiple_of(by) {
        return Err(Error::domain(format!("{what}: {by} must divide n = {n}")));
    }
    Ok(n / by)
}

fn pow(base: impl Into<BigUint>, e: usize) -> BigUint {
    num_traits::pow(base.into(), e)
}

/// `n/s` disjoint copies of `K_s`: `b = (s-1)^(n/s)` and
/// `β = (2^(s-1)(s-2)+2)^(n/s)`.
pub fn union_of_cliques(n: usize, s: usize) -> Result<GoldenCase> {
    if s == 0 {
        return Err(Error::domain("s must be positive"));
    }
    let q = divisible(n, s, "union_of_cliques")?;
    let g = copies(q, &complete(s)?)?;
    Ok(GoldenCase {
        name: "union_of_cliques".into(),
        params: vec![("n", n), ("s", s)],
        object: GoldenObject::Graph(g),
        expectations: vec![
            Expectation { metric: Metric::B, value: pow(s as u64 - 1, q) },
            Expectation { metric: Metric::Beta, value: pow(beta_complete_closed(s as u32), q) },
        ],
        anchor: "disjoint union of cliques; K_5 copies attain the unrestricted maximum",
    })
}

/// The 7-point projective plane as a 2-dimensional complex: 7 triangles,
/// complete 1-skeleton, `b_1 = 8`.
pub fn fano_complex() -> GoldenCase {
    GoldenCase {
        name: "fano_complex".into(),
        params: vec![],
        object: GoldenObject::Complex(fano()),
        expectations: vec![Expectation { metric: Metric::B, value: BigUint::from(8u32) }],
        anchor: "lines of the Fano plane as facets; a wedge of 8 circles",
    }
}

fn fano() -> Complex {
    // points 1..7 of the plane, shifted to 0..6
    Complex::from_lists(
        7,
        &[&[0, 3, 4], &[0, 2, 5], &[0, 1, 6], &[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]],
    )
    .expect("valid facets")
}

/// `Bip` of the Fano complex: bipartite on 14 vertices with `b = 8`.
pub fn fano_bip() -> GoldenCase {
    GoldenCase {
        name: "fano_bip".into(),
        params: vec![],
        object: GoldenObject::Graph(fano().bip_graph().expect("Fano complex has nonempty facets")),
        expectations: vec![Expectation { metric: Metric::B, value: BigUint::from(8u32) }],
        anchor: "point-line non-incidence graph of the Fano plane; best triangle-free base",
    }
}

/// Join of `n/(2d+1)` copies of the `(d-2)`-skeleton of the `2d`-simplex:
/// `b = binom(2d, d-1)^(n/(2d+1))`, every minimal non-face of size `<= d`.
pub fn missing_face_complex(n: usize, d: usize) -> Result<GoldenCase> {
    if d < 2 {
        return Err(Error::domain("d must be at least 2"));
    }
    let q = divisible(n, 2 * d + 1, "missing_face_complex")?;
    let block = skeleton_simplex(2 * d as isize, d as isize - 2)?;
    let mut k = Complex::empty(0);
    for _ in 0..q {
        k = k.join(&block)?;
    }
    Ok(GoldenCase {
        name: "missing_face_complex".into(),
        params: vec![("n", n), ("d", d)],
        object: GoldenObject::Complex(k),
        expectations: vec![Expectation {
            metric: Metric::B,
            value: pow(binomial(2 * d as u32, d as u32 - 1), q),
        }],
        anchor: "joins of skeleta of the 2d-simplex; conjectured extremal without missing faces above d",
    })
}

/// `⊕^{n/4} 2K_2`: `b(N(G)) = 3^(n/4)`.
pub fn neighbourhood_power(n: usize) -> Result<GoldenCase> {
    let q = divisible(n, 4, "neighbourhood_power")?;
    if q == 0 {
        return Err(Error::domain("neighbourhood_power needs n >= 4"));
    }
    let two_k2 = copies(2, &complete(2)?)?;
    Ok(GoldenCase {
        name: "neighbourhood_power".into(),
        params: vec![("n", n)],
        object: GoldenObject::Graph(join_copies(q, &two_k2)?),
        expectations: vec![Expectation { metric: Metric::BNeighbourhood, value: pow(3u32, q) }],
        anchor: "join powers of 2K_2; the neighbourhood complex is a join of 4-point sets",
    })
}

/// `n/(2s)` disjoint crown graphs on `2s` vertices:
/// `β = (4^(s-1)(s-4) + 2·3^s - 2^(s+1) + 2)^(n/(2s))`.
pub fn crown_union(n: usize, s: usize) -> Result<GoldenCase> {
    if s == 0 {
        return Err(Error::domain("s must be positive"));
    }
    let q = divisible(n, 2 * s, "crown_union")?;
    Ok(GoldenCase {
        name: "crown_union".into(),
        params: vec![("n", n), ("s", s)],
        object: GoldenObject::Graph(copies(q, &crown(s)?)?),
        expectations: vec![Expectation { metric: Metric::Beta, value: pow(beta_crown_closed(s as u32), q) }],
        anchor: "disjoint crown graphs; best triangle-free Hochster sum at s = 18",
    })
}

/// Builder by name, for the command line.
pub fn build(name: &str, params: &[usize]) -> Result<GoldenCase> {
    let arg = |i: usize| {
        params
            .get(i)
            .copied()
            .ok_or_else(|| Error::domain(format!("{name} needs {} parameter(s)", i + 1)))
    };
    match name {
        "union_of_cliques" => union_of_cliques(arg(0)?, arg(1)?),
        "fano_complex" => Ok(fano_complex()),
        "fano_bip" => Ok(fano_bip()),
        "missing_face_complex" => missing_face_complex(arg(0)?, arg(1)?),
        "neighbourhood_power" => neighbourhood_power(arg(0)?),
        "crown_union" => crown_union(arg(0)?, arg(1)?),
        _ => Err(Error::domain(format!(
            "unknown construction `{name}`; expected one of {}",
            BUILDERS.join(", ")
        ))),
    }
}

pub const BUILDERS: [&str; 6] = [
    "union_of_cliques",
    "fano_complex",
    "fano_bip",
    "missing_face_complex",
    "neighbourhood_power",
    "crown_union",
];

/// The verification corpus.
pub fn golden_corpus() -> Vec<GoldenCase> {
    [
        union_of_cliques(10, 5),
        union_of_cliques(5, 5),
        union_of_cliques(6, 3),
        union_of_cliques(9, 9),
        Ok(fano_complex()),
        Ok(fano_bip()),
        missing_face_complex(5, 2),
        missing_face_complex(7, 3),
        missing_face_complex(10, 2),
        neighbourhood_power(4),
        neighbourhood_power(8),
        neighbourhood_power(12),
        crown_union(4, 2),
        crown_union(8, 2),
        crown_union(10, 5),
        crown_union(36, 18),
    ]
    .into_iter()
    .map(|c| c.expect("corpus parameters are valid"))
    .collect()
}

/// One row of the bounds table: the best construction base, the proven
/// upper-bound base, and both printed to three decimals.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub quantity: &'static str,
    pub construction: String,
    pub construction_base: f64,
    pub construction_printed: String,
    pub construction_expected: &'static str,
    pub upper_bound: String,
    pub upper_bound_base: f64,
    pub upper_bound_printed: String,
    pub upper_bound_expected: &'static str,
    pub construction_matches: bool,
    pub upper_bound_matches: bool,
}

impl TableRow {
    pub fn pass(&self) -> bool {
        self.construction_matches && self.upper_bound_matches
    }
}

/// Three-decimal rendering that both ends of the enclosure agree on, or
/// `None` when the value sits on a rounding boundary.
pub fn certified_three_decimals(base: &Base) -> Option<String> {
    let i = base.enclose(crate::invariants::certified::START_BITS);
    let lo = format!("{:.3}", i.lo_f64());
    let hi = format!("{:.3}", i.hi_f64());
    (lo == hi).then_some(lo)
}

fn row(
    quantity: &'static str,
    construction: Base,
    construction_label: String,
    construction_expected: &'static str,
    upper: Base,
    upper_expected: &'static str,
) -> TableRow {
    let cp = certified_three_decimals(&construction).unwrap_or_else(|| "undecided".into());
    let up = certified_three_decimals(&upper).unwrap_or_else(|| "undecided".into());
    TableRow {
        quantity,
        construction: construction_label,
        construction_base: construction.to_f64(),
        construction_matches: cp == construction_expected,
        construction_printed: cp,
        construction_expected,
        upper_bound: upper.to_string(),
        upper_bound_base: upper.to_f64(),
        upper_bound_matches: up == upper_expected,
        upper_bound_printed: up,
        upper_bound_expected: upper_expected,
    }
}

/// `value^(1/order)` as an exact radical.
fn per_vertex(value: &BigUint, order: usize) -> Base {
    Base::Radical { a: value.clone(), k: order as u32 }
}

/// Rebuild the five rows of the bounds table from golden values and the
/// constants. Construction values are taken from the cases' exact
/// expectations after those have been checked against the engine where the
/// caps allow.
pub fn table_rows(field: FieldSpec, limits: &Limits) -> Result<Vec<TableRow>> {
    let cliques = union_of_cliques(5, 5)?;
    let bip = fano_bip();
    let neigh = neighbourhood_power(4)?;
    let beta_cliques = union_of_cliques(9, 9)?;
    let crowns = crown_union(36, 18)?;
    for case in [&cliques, &bip, &neigh, &beta_cliques] {
        if let Some(bad) = case.verify(field, limits)?.into_iter().find(|o| !o.pass) {
            return Err(Error::domain(format!("golden case {} failed: {:?}", bad.case, bad)));
        }
    }
    let value = |c: &GoldenCase, m: Metric| c.expected(m).cloned().unwrap_or_else(BigUint::one);
    let label = |c: &GoldenCase, m: Metric| {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({}) {m:?}^(1/{})", c.name, params.join(","), c.object.order())
    };

    Ok(vec![
        row(
            "b(Ind(G))",
            per_vertex(&value(&cliques, Metric::B), cliques.object.order()),
            label(&cliques, Metric::B),
            "1.320",
            Base::theta(),
            "1.320",
        ),
        row(
            "b(Ind(G)), G triangle-free",
            per_vertex(&value(&bip, Metric::B), bip.object.order()),
            label(&bip, Metric::B),
            "1.160",
            Base::gamma(),
            "1.250",
        ),
        row(
            "b(N(G))",
            per_vertex(&value(&neigh, Metric::BNeighbourhood), neigh.object.order()),
            label(&neigh, Metric::BNeighbourhood),
            "1.316",
            Base::gamma().squared(),
            "1.562",
        ),
        row(
            "beta(G)",
            per_vertex(&value(&beta_cliques, Metric::Beta), beta_cliques.object.order()),
            label(&beta_cliques, Metric::Beta),
            "2.299",
            Base::theta().plus_one(),
            "2.320",
        ),
        row(
            "beta(G), G triangle-free",
            per_vertex(&value(&crowns, Metric::Beta), crowns.object.order()),
            label(&crowns, Metric::Beta),
            "2.070",
            Base::gamma().plus_one(),
            "2.250",
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::independence_complex;

    #[test]
    fn builder_examples() {
        assert_eq!(union_of_cliques(10, 5).unwrap().expected(Metric::B).unwrap(), &BigUint::from(16u32));
        assert_eq!(union_of_cliques(5, 5).unwrap().expected(Metric::B).unwrap(), &BigUint::from(4u32));
        assert_eq!(union_of_cliques(6, 3).unwrap().expected(Metric::B).unwrap(), &BigUint::from(4u32));
        assert!(union_of_cliques(7, 3).is_err());
        assert_eq!(missing_face_complex(7, 3).unwrap().expected(Metric::B).unwrap(), &BigUint::from(15u32));
        assert_eq!(missing_face_complex(10, 2).unwrap().expected(Metric::B).unwrap(), &BigUint::from(16u32));
        assert!(missing_face_complex(6, 2).is_err());
        assert_eq!(
            neighbourhood_power(12).unwrap().expected(Metric::BNeighbourhood).unwrap(),
            &BigUint::from(27u32)
        );
        assert!(neighbourhood_power(6).is_err());
        // one crown on 4 vertices is 2K_2, whose Hochster sum is 4
        assert_eq!(crown_union(4, 2).unwrap().expected(Metric::Beta).unwrap(), &BigUint::from(4u32));
        assert_eq!(crown_union(8, 2).unwrap().expected(Metric::Beta).unwrap(), &BigUint::from(16u32));
        assert!(crown_union(6, 2).is_err());
    }

    #[test]
    fn missing_face_complex_is_ind_of_cliques_at_d2() {
        let GoldenObject::Complex(k) = missing_face_complex(5, 2).unwrap().object else { panic!() };
        let ind = independence_complex(&complete(5).unwrap());
        assert_eq!(k, ind);
        let GoldenObject::Complex(k) = missing_face_complex(7, 3).unwrap().object else { panic!() };
        assert!(k.class_membership().unwrap().in_missing_face_class(3));
    }

    #[test]
    fn fano_facts() {
        let GoldenObject::Complex(k) = fano_complex().object else { panic!() };
        assert_eq!(k.one_skeleton(), complete(7).unwrap());
        let GoldenObject::Graph(g) = fano_bip().object else { panic!() };
        assert_eq!(g.order(), 14);
        assert!(g.is_bipartite());
        assert!((0..14).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn corpus_passes_over_three_fields() {
        let limits = Limits::default();
        for case in golden_corpus() {
            for f in [FieldSpec::GF2, FieldSpec::Prime(3), FieldSpec::Rational] {
                for o in case.verify(f, &limits).unwrap() {
                    assert!(o.pass, "{o:?}");
                }
            }
        }
    }

    #[test]
    fn table_rows_reproduce_four_of_five_construction_bases() {
        let rows = table_rows(FieldSpec::GF2, &Limits::default()).unwrap();
        let printed: Vec<&str> = rows.iter().map(|r| r.construction_printed.as_str()).collect();
        assert_eq!(printed, ["1.320", "1.160", "1.316", "2.299", "2.071"]);
        let upper: Vec<&str> = rows.iter().map(|r| r.upper_bound_printed.as_str()).collect();
        assert_eq!(upper, ["1.320", "1.250", "1.562", "2.320", "2.250"]);
        assert!(rows.iter().all(|r| r.upper_bound_matches));
    }

    #[test]
    fn crown_base_peaks_at_eighteen() {
        let base = |s: u32| beta_crown_closed(s).to_f64().unwrap().powf(1.0 / (2.0 * s as f64));
        let best = (1..=40).max_by(|&a, &b| base(a).total_cmp(&base(b))).unwrap();
        assert_eq!(best, 18);
    }
}
