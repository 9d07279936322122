//! Graph invariants `b(G)`, `β(G)` and the certified bound checks.

pub mod certified;
pub mod constants;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

pub use certified::{Base, Interval, Verdict};
pub use constants::{solve_constants, ConstantValue, Constants};

use crate::bitset::VertexSet;
use crate::complexes::{dominance_complex, independence_complex, neighbourhood_complex, Complex};
use crate::error::{Error, Result};
use crate::graphs::{encode_graph6, Graph};
use crate::homology::{betti_capped, FieldSpec};
use crate::Limits;

/// `b(G) = b(Ind(G))` with the default face cap.
pub fn b_graph(g: &Graph, field: FieldSpec) -> Result<u64> {
    b_graph_capped(g, field, Limits::default().face_cap)
}

pub fn b_graph_capped(g: &Graph, field: FieldSpec, face_cap: usize) -> Result<u64> {
    // an isolated vertex makes Ind(G) a cone
    if g.order() > 0 && g.min_degree() == Some(0) {
        return Ok(0);
    }
    Ok(betti_capped(&independence_complex(g), field, face_cap)?.total())
}

/// `β(G) = Σ_W b(G[W])` with a per-subset-size breakdown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterReport {
    pub beta_total: u64,
    /// subset size → sum of `b(G[W])` over `|W| = size`
    pub per_subset_histogram: BTreeMap<usize, u64>,
}

pub fn hochster_beta(g: &Graph, field: FieldSpec) -> Result<HochsterReport> {
    hochster_beta_capped(g, field, &Limits::default())
}

pub fn hochster_beta_capped(g: &Graph, field: FieldSpec, limits: &Limits) -> Result<HochsterReport> {
    let n = g.order();
    if n > limits.hochster_cap {
        return Err(Error::CapExceeded { what: "graph order for the Hochster sum", cap: limits.hochster_cap });
    }
    let hist = (0u64..1 << n)
        .into_par_iter()
        .map(|w| {
            let w = VertexSet(w as u128);
            let b = b_graph_capped(&g.induced_unchecked(w), field, limits.face_cap)?;
            Ok((w.len(), b))
        })
        .try_fold(
            || vec![0u64; n + 1],
            |mut acc, item: Result<(usize, u64)>| {
                let (k, b) = item?;
                acc[k] += b;
                Ok::<_, Error>(acc)
            },
        )
        .try_reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(HochsterReport {
        beta_total: hist.iter().sum(),
        per_subset_histogram: hist.into_iter().enumerate().collect(),
    })
}

/// `β(K_s) = 2^(s-1)(s-2) + 2`.
pub fn beta_complete_closed(s: u32) -> BigUint {
    assert!(s >= 1, "s must be positive");
    let v: BigInt = (BigInt::from(1) << (s - 1)) * (BigInt::from(s) - 2) + 2;
    v.to_biguint().expect("positive for s >= 1")
}

/// `β` of the crown graph on `2s` vertices:
/// `4^(s-1)(s-4) + 2·3^s - 2^(s+1) + 2`.
pub fn beta_crown_closed(s: u32) -> BigUint {
    assert!(s >= 1, "s must be positive");
    let v: BigInt = BigInt::from(4).pow(s - 1) * (BigInt::from(s) - 4) + BigInt::from(3).pow(s) * 2
        - (BigInt::from(1) << (s + 1))
        + 2;
    v.to_biguint().expect("positive for s >= 1")
}

/// One certified inequality `lhs <= base^exponent`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: u64,
    pub base: String,
    pub exponent: u32,
    pub rhs_lo: f64,
    pub rhs_hi: f64,
    pub verdict: Verdict,
    pub pass: bool,
}

impl BoundCheck {
    pub fn new(name: &str, lhs: u64, base: &Base, exponent: u32) -> Self {
        let verdict = base.compare_power(&BigUint::from(lhs), exponent);
        let (rhs_lo, rhs_hi) = base.power_range(exponent);
        BoundCheck {
            name: name.to_string(),
            lhs,
            base: base.to_string(),
            exponent,
            rhs_lo,
            rhs_hi,
            verdict,
            pass: verdict.holds(),
        }
    }
}

/// Bound checks for a graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    pub triangle_free: bool,
    pub bounds: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.bounds.iter().all(|c| c.pass)
    }

    pub fn any_violation(&self) -> bool {
        self.bounds.iter().any(|c| c.verdict.is_violation())
    }
}

pub const B_THETA: &str = "b-theta";
pub const B_GAMMA: &str = "b-gamma-trifree";
pub const BETA_THETA: &str = "beta-theta-plus-one";
pub const BETA_GAMMA: &str = "beta-gamma-plus-one-trifree";

/// `b(G) <= Θ^n`, `β(G) <= (Θ+1)^n`, and the `Γ` versions when `G` is
/// triangle-free. `β` is evaluated only when `n` is within the Hochster cap.
pub fn check_bounds(g: &Graph, field: FieldSpec, limits: &Limits) -> Result<BoundReport> {
    let n = g.order();
    let b = b_graph_capped(g, field, limits.face_cap)?;
    let beta = if n <= limits.hochster_cap {
        Some(hochster_beta_capped(g, field, limits)?.beta_total)
    } else {
        None
    };
    let tf = g.is_triangle_free();
    let e = n as u32;
    let mut bounds = vec![BoundCheck::new(B_THETA, b, &Base::theta(), e)];
    if tf {
        bounds.push(BoundCheck::new(B_GAMMA, b, &Base::gamma(), e));
    }
    if let Some(beta) = beta {
        bounds.push(BoundCheck::new(BETA_THETA, beta, &Base::theta().plus_one(), e));
        if tf {
            bounds.push(BoundCheck::new(BETA_GAMMA, beta, &Base::gamma().plus_one(), e));
        }
    }
    Ok(BoundReport { graph: graph6_or_empty(g), n, b, beta, triangle_free: tf, bounds })
}

/// `b(Ind(G)) <= Θ^n` (and `Γ^n` if triangle-free) without the Hochster sum.
pub fn check_b_bounds(g: &Graph, field: FieldSpec, face_cap: usize) -> Result<BoundReport> {
    let n = g.order();
    let b = b_graph_capped(g, field, face_cap)?;
    let tf = g.is_triangle_free();
    let mut bounds = vec![BoundCheck::new(B_THETA, b, &Base::theta(), n as u32)];
    if tf {
        bounds.push(BoundCheck::new(B_GAMMA, b, &Base::gamma(), n as u32));
    }
    Ok(BoundReport { graph: graph6_or_empty(g), n, b, beta: None, triangle_free: tf, bounds })
}

fn graph6_or_empty(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_default()
}

/// Bound checks for a complex.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexBoundReport {
    pub n: usize,
    pub facets: usize,
    pub minimal_nonfaces: usize,
    pub d_f: usize,
    pub d_m: usize,
    pub b: u64,
    pub bounds: Vec<BoundCheck>,
    /// `b <= binom(2d, d-1)^(n/(2d+1))` for `d = d_F >= 2`; a theorem at
    /// `d = 2`, open above.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<BoundCheck>,
}

impl ComplexBoundReport {
    pub fn all_pass(&self) -> bool {
        self.bounds.iter().all(|c| c.pass)
    }

    pub fn any_violation(&self) -> bool {
        self.bounds.iter().any(|c| c.verdict.is_violation())
    }
}

pub const FACETS_GAMMA: &str = "facets-gamma";
pub const NONFACES_GAMMA: &str = "nonfaces-gamma";
pub const MISSING_FACE_THETA: &str = "missing-face-theta-small";
pub const LARGE_FACET_THETA: &str = "large-facet-theta-small";
pub const CONJECTURE_MISSING_FACE: &str = "conjecture-missing-face";

/// `b(K) <= Γ^(n+m)`, `b(K) <= Γ^(n+m')`, and `b(K) <= θ_d^n` for the
/// smallest `d` placing `K` in the missing-face and large-facet classes.
pub fn check_complex_bounds(k: &Complex, field: FieldSpec, limits: &Limits) -> Result<ComplexBoundReport> {
    if k.is_void() {
        return Err(Error::domain("bound checks need a non-void complex"));
    }
    let n = k.ground_size();
    let cm = k.class_membership()?;
    let b = betti_capped(k, field, limits.face_cap)?.total();
    let m = k.facets().len();
    let mprime = cm.minimal_nonface_count;
    let bounds = vec![
        BoundCheck::new(FACETS_GAMMA, b, &Base::gamma(), (n + m) as u32),
        BoundCheck::new(NONFACES_GAMMA, b, &Base::gamma(), (n + mprime) as u32),
        BoundCheck::new(MISSING_FACE_THETA, b, &Base::ThetaSmallRoot(cm.d_f.max(1) as u32), n as u32),
        BoundCheck::new(LARGE_FACET_THETA, b, &Base::ThetaSmallRoot(cm.d_m.max(1) as u32), n as u32),
    ];
    let conjecture = (cm.d_f >= 2)
        .then(|| BoundCheck::new(CONJECTURE_MISSING_FACE, b, &Base::conjecture(cm.d_f as u32), n as u32));
    Ok(ComplexBoundReport {
        n,
        facets: m,
        minimal_nonfaces: mprime,
        d_f: cm.d_f,
        d_m: cm.d_m,
        b,
        bounds,
        conjecture,
    })
}

pub const NEIGHBOURHOOD_GAMMA: &str = "neighbourhood-gamma-squared";
pub const DOMINANCE_GAMMA: &str = "dominance-gamma";

/// `b(N(G)) <= (Γ^2)^n` with `n` the order of `G`. The void complex of an
/// edgeless graph has `b = 0`.
pub fn check_neighbourhood_bound(g: &Graph, field: FieldSpec, face_cap: usize) -> Result<BoundCheck> {
    let b = betti_capped(&neighbourhood_complex(g), field, face_cap)?.total();
    Ok(BoundCheck::new(NEIGHBOURHOOD_GAMMA, b, &Base::gamma().squared(), g.order() as u32))
}

/// `b(D(G)) <= Γ^(2n)`: the minimal non-faces of `D(G)` are closed
/// neighbourhoods, so there are at most `n` of them.
pub fn check_dominance_bound(g: &Graph, field: FieldSpec, limits: &Limits) -> Result<BoundCheck> {
    let d = dominance_complex(g, limits.dominance_cap)?;
    let b = betti_capped(&d, field, limits.face_cap)?.total();
    Ok(BoundCheck::new(DOMINANCE_GAMMA, b, &Base::gamma(), 2 * g.order() as u32))
}

/// Vanishing of high homology for complexes without large missing faces.
#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub n: usize,
    pub d_f: usize,
    /// Smallest degree `i` with `d(i+1) > n(d-1)`; homology must vanish from
    /// here up.
    pub threshold: isize,
    pub top_nonzero_degree: Option<isize>,
    pub pass: bool,
}

pub fn check_vanishing(k: &Complex, field: FieldSpec, face_cap: usize) -> Result<VanishingReport> {
    if k.is_void() {
        return Err(Error::domain("vanishing check needs a non-void complex"));
    }
    let cm = k.class_membership()?;
    let bv = betti_capped(k, field, face_cap)?;
    let n = k.ground_size();
    let d = cm.d_f.max(1);
    let threshold = (n * (d - 1) / d) as isize;
    let top = bv.top_degree();
    Ok(VanishingReport {
        n,
        d_f: cm.d_f,
        threshold,
        top_nonzero_degree: top,
        pass: top.is_none_or(|t| t < threshold),
    })
}

/// Number of maximal independent sets and whether it is at most `3^(n/3)`,
/// decided exactly as `m^3 <= 3^n`.
pub fn maximal_independent_sets_within_bound(g: &Graph) -> (usize, bool) {
    let m = independence_complex(g).facets().len();
    let ok = BigUint::from(m).pow(3) <= BigUint::from(3u32).pow(g.order() as u32);
    (m, ok)
}
