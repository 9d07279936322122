//! Exhaustive and streamed extremal search.
//!
//! [`maximize`] evaluates a metric on every graph of a source, keeps the
//! exact maximum with all canonical maximizers, and checks each graph against
//! the applicable growth bound. Graphs are processed in chunks: each chunk is
//! evaluated in parallel and folded into the running state in input order,
//! so reports do not depend on scheduling. After each chunk the running state
//! can be flushed to a checkpoint file, and a run can resume from one.

mod enumerate;
mod stream;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_graphs, enumerate_levels, ClassFilter};
pub use stream::{collect_strict, stream_graph6, Graph6Line, Graph6Stream};

use crate::complexes::{neighbourhood_complex, write_facet_file, Complex};
use crate::error::{Error, Result};
use crate::graphs::{canonical_key_capped, encode_graph6, Graph, CANON_HARD_CAP};
use crate::homology::{betti_capped, FieldSpec};
use crate::invariants::{b_graph_capped, check_complex_bounds, hochster_beta_capped, Base, Verdict};
use crate::Limits;

/// Graphs per evaluation chunk and checkpoint interval.
pub const CHECKPOINT_EVERY: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMetric {
    /// `b(Ind(G))`.
    B,
    /// `β(G)`.
    Beta,
    /// `b(N(G))`.
    BNeighbourhood,
}

impl fmt::Display for SearchMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMetric::B => "b",
            SearchMetric::Beta => "beta",
            SearchMetric::BNeighbourhood => "bneigh",
        })
    }
}

impl FromStr for SearchMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(SearchMetric::B),
            "beta" => Ok(SearchMetric::Beta),
            "bneigh" | "b_neigh" | "b_neighbourhood" => Ok(SearchMetric::BNeighbourhood),
            _ => Err(Error::domain(format!("unknown metric `{s}`; expected b, beta or bneigh"))),
        }
    }
}

impl SearchMetric {
    pub fn evaluate(self, g: &Graph, field: FieldSpec, limits: &Limits) -> Result<u64> {
        match self {
            SearchMetric::B => b_graph_capped(g, field, limits.face_cap),
            SearchMetric::Beta => Ok(hochster_beta_capped(g, field, limits)?.beta_total),
            SearchMetric::BNeighbourhood => Ok(betti_capped(&neighbourhood_complex(g), field, limits.face_cap)?.total()),
        }
    }

    /// The growth bound for this metric; the `Γ` variants need triangle-free
    /// input.
    pub fn bound(self, triangle_free: bool) -> (&'static str, Base) {
        match (self, triangle_free) {
            (SearchMetric::B, false) => (crate::invariants::B_THETA, Base::theta()),
            (SearchMetric::B, true) => (crate::invariants::B_GAMMA, Base::gamma()),
            (SearchMetric::Beta, false) => (crate::invariants::BETA_THETA, Base::theta().plus_one()),
            (SearchMetric::Beta, true) => (crate::invariants::BETA_GAMMA, Base::gamma().plus_one()),
            (SearchMetric::BNeighbourhood, _) => (crate::invariants::NEIGHBOURHOOD_GAMMA, Base::gamma().squared()),
        }
    }
}

/// Where graphs come from.
pub enum Source<'a> {
    /// The internal generator at this order.
    Generated(usize),
    /// Pre-parsed graphs with their offsets (line numbers for streams).
    Graphs(Vec<(usize, Graph)>),
    /// A graph6 line stream.
    Stream(Box<dyn Iterator<Item = Graph6Line> + Send + 'a>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    /// Offset (line number or generator index) of the last graph folded in.
    pub offset: usize,
    pub max_value: Option<u64>,
    pub maximizers: Vec<String>,
    #[serde(default)]
    pub graphs_examined: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub field: FieldSpec,
    pub limits: Limits,
    /// Abort on the first malformed graph6 line.
    pub strict: bool,
    pub checkpoint_path: Option<PathBuf>,
    pub checkpoint_every: usize,
    pub resume: Option<Checkpoint>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            field: FieldSpec::GF2,
            limits: Limits::default(),
            strict: false,
            checkpoint_path: None,
            checkpoint_every: CHECKPOINT_EVERY,
            resume: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundSummary {
    pub name: String,
    pub base: String,
    pub n: usize,
    pub rhs_lo: f64,
    pub rhs_hi: f64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub offset: usize,
    pub value: u64,
    pub bound: String,
}

/// The union-of-`K_5` value `4^(n/5)` when `5 | n`, against the observed
/// maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceValue {
    pub construction: String,
    pub value: u64,
    pub exceeded: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub metric: SearchMetric,
    pub class: ClassFilter,
    pub field: FieldSpec,
    /// Common order of all examined graphs, if there is one.
    pub n: Option<usize>,
    pub graphs_examined: u64,
    /// Streamed graphs outside the class filter.
    pub excluded_by_class: u64,
    /// Malformed lines dropped in non-strict mode.
    pub skipped_lines: u64,
    pub max_value: Option<u64>,
    pub maximizers: Vec<String>,
    /// False when some maximizer was above the canonical labeller's reach
    /// and is reported as given.
    pub maximizers_canonical: bool,
    pub bound: Option<BoundSummary>,
    pub all_within_bound: bool,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl SearchReport {
    pub fn to_tsv(&self) -> String {
        let (lo, hi) = self.bound.as_ref().map_or((f64::NAN, f64::NAN), |b| (b.rhs_lo, b.rhs_hi));
        let n = self.n.map_or("mixed".to_string(), |n| n.to_string());
        let max = self.max_value.map_or("none".to_string(), |m| m.to_string());
        format!("n\tmax\tbound_lo\tbound_hi\tpass\n{n}\t{max}\t{lo}\t{hi}\t{}\n", self.all_within_bound)
    }
}

struct State {
    examined: u64,
    excluded: u64,
    skipped: u64,
    max: Option<u64>,
    maximizers: BTreeSet<String>,
    canonical: bool,
    orders: BTreeSet<usize>,
    violations: Vec<Violation>,
    last_offset: usize,
}

/// Canonical graph6 when the order allows, otherwise the graph as given.
fn maximizer_label(g: &Graph) -> Result<(String, bool)> {
    if g.order() <= CANON_HARD_CAP {
        let key = canonical_key_capped(g, CANON_HARD_CAP)?;
        let c = crate::graphs::canon::graph_from_key(key);
        Ok((encode_graph6(&c)?, true))
    } else {
        Ok((encode_graph6(g)?, false))
    }
}

/// `floor(base^n)` thresholds, computed once per `(name, n)`.
#[derive(Default)]
struct Thresholds(HashMap<(&'static str, usize), (Base, Option<BigUint>)>);

impl Thresholds {
    fn prepare(&mut self, name: &'static str, base: &Base, n: usize) {
        self.0
            .entry((name, n))
            .or_insert_with(|| (base.clone(), base.floor_power(n as u32)));
    }

    fn verdict(&self, name: &'static str, n: usize, value: u64) -> Verdict {
        let (base, floor) = &self.0[&(name, n)];
        match floor {
            Some(f) if BigUint::from(value) <= *f => Verdict::Within,
            Some(_) => Verdict::Exceeds,
            None => base.compare_power(&BigUint::from(value), n as u32),
        }
    }
}

/// Evaluate `metric` on every graph of `source` in `class`.
pub fn maximize(metric: SearchMetric, class: ClassFilter, source: Source<'_>, opts: &SearchOptions) -> Result<SearchReport> {
    if metric == SearchMetric::Beta {
        if let Source::Generated(n) = source {
            if n > opts.limits.hochster_cap {
                return Err(Error::CapExceeded { what: "graph order for the Hochster sum", cap: opts.limits.hochster_cap });
            }
        }
    }
    let resume = opts.resume.clone().unwrap_or_default();
    let mut state = State {
        examined: resume.graphs_examined,
        excluded: 0,
        skipped: 0,
        max: resume.max_value,
        maximizers: resume.maximizers.iter().cloned().collect(),
        canonical: true,
        orders: BTreeSet::new(),
        violations: Vec::new(),
        last_offset: resume.offset,
    };
    let mut thresholds = Thresholds::default();
    let every = opts.checkpoint_every.max(1);

    let mut iter: Box<dyn Iterator<Item = (usize, Result<Graph>)> + Send + '_> = match source {
        Source::Generated(n) => {
            let graphs = enumerate_graphs(n, class, &opts.limits)?;
            Box::new(graphs.into_iter().enumerate().map(|(i, g)| (i + 1, Ok(g))))
        }
        Source::Graphs(v) => Box::new(v.into_iter().map(|(o, g)| (o, Ok(g)))),
        Source::Stream(s) => Box::new(s.map(|l| (l.line, l.graph))),
    };

    loop {
        let mut chunk: Vec<(usize, Graph)> = Vec::with_capacity(every.min(1 << 16));
        let mut exhausted = true;
        for (offset, g) in iter.by_ref() {
            if offset <= resume.offset && opts.resume.is_some() {
                continue;
            }
            state.last_offset = offset;
            match g {
                Ok(g) if class.admits(&g) => chunk.push((offset, g)),
                Ok(_) => state.excluded += 1,
                Err(e) if opts.strict => return Err(e),
                Err(_) => state.skipped += 1,
            }
            if chunk.len() == every {
                exhausted = false;
                break;
            }
        }
        fold_chunk(&mut state, &mut thresholds, metric, class, chunk, opts)?;
        if let Some(path) = &opts.checkpoint_path {
            write_checkpoint(path, &state)?;
        }
        if exhausted {
            break;
        }
    }

    let n = (state.orders.len() == 1).then(|| *state.orders.iter().next().expect("one order"));
    let bound = n.map(|n| {
        let (name, base) = metric.bound(class.is_triangle_free());
        let (rhs_lo, rhs_hi) = base.power_range(n as u32);
        let verdict = state
            .max
            .map_or(Verdict::Within, |m| base.compare_power(&BigUint::from(m), n as u32));
        BoundSummary { name: name.to_string(), base: base.to_string(), n, rhs_lo, rhs_hi, verdict }
    });
    let reference = match (metric, n) {
        (SearchMetric::B, Some(n)) if n > 0 && n % 5 == 0 && n / 5 < 32 => {
            let value = 4u64.pow((n / 5) as u32);
            Some(ReferenceValue {
                construction: format!("union_of_cliques(n={n},s=5)"),
                value,
                exceeded: state.max.is_some_and(|m| m > value),
            })
        }
        _ => None,
    };
    Ok(SearchReport {
        metric,
        class,
        field: opts.field,
        n,
        graphs_examined: state.examined,
        excluded_by_class: state.excluded,
        skipped_lines: state.skipped,
        max_value: state.max,
        maximizers: state.maximizers.into_iter().collect(),
        maximizers_canonical: state.canonical,
        all_within_bound: state.violations.is_empty(),
        violations: state.violations,
        bound,
        reference,
        wall_time_ms: None,
    })
}

fn fold_chunk(
    state: &mut State,
    thresholds: &mut Thresholds,
    metric: SearchMetric,
    class: ClassFilter,
    chunk: Vec<(usize, Graph)>,
    opts: &SearchOptions,
) -> Result<()> {
    let orders: BTreeSet<usize> = chunk.iter().map(|(_, g)| g.order()).collect();
    for &n in &orders {
        for tf in [false, true] {
            let (name, base) = metric.bound(tf);
            thresholds.prepare(name, &base, n);
        }
    }
    let thresholds = &*thresholds;
    let evaluated: Vec<(u64, Vec<&'static str>)> = chunk
        .par_iter()
        .map(|(_, g)| {
            let value = metric.evaluate(g, opts.field, &opts.limits)?;
            let tf = class.is_triangle_free() || g.is_triangle_free();
            let mut broken = Vec::new();
            for t in if tf { vec![false, true] } else { vec![false] } {
                let (name, _) = metric.bound(t);
                if thresholds.verdict(name, g.order(), value).is_violation() {
                    broken.push(name);
                }
            }
            Ok((value, broken))
        })
        .collect::<Result<_>>()?;

    for ((offset, g), (value, broken)) in chunk.iter().zip(evaluated) {
        state.examined += 1;
        state.orders.insert(g.order());
        for name in broken {
            state.violations.push(Violation {
                graph6: encode_graph6(g)?,
                offset: *offset,
                value,
                bound: name.to_string(),
            });
        }
        if state.max.is_none_or(|m| value > m) {
            state.max = Some(value);
            state.maximizers.clear();
        }
        if state.max == Some(value) {
            let (label, canonical) = maximizer_label(g)?;
            state.canonical &= canonical;
            state.maximizers.insert(label);
        }
    }
    Ok(())
}

fn write_checkpoint(path: &std::path::Path, state: &State) -> Result<()> {
    let cp = Checkpoint {
        offset: state.last_offset,
        max_value: state.max,
        maximizers: state.maximizers.iter().cloned().collect(),
        graphs_examined: state.examined,
    };
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec_pretty(&cp).map_err(|e| Error::Io(e.to_string()))?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_checkpoint(path: &std::path::Path) -> Result<Checkpoint> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Io(format!("checkpoint {}: {e}", path.display())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximizerFlag {
    pub graph6: String,
    pub bipartite: bool,
}

/// A complex checked against the missing-face bounds and conjecture.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexCheck {
    pub label: String,
    pub n: usize,
    pub d_f: usize,
    pub d_m: usize,
    pub b: u64,
    /// `θ_{d_F}^n` and `θ_{d_M}^n`.
    pub theorem_pass: bool,
    pub conjecture_verdict: Option<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    /// Maximizers of `b` over triangle-free graphs on `n` vertices.
    pub triangle_free: SearchReport,
    pub maximizer_flags: Vec<MaximizerFlag>,
    pub all_maximizers_bipartite: bool,
    pub complexes: Vec<ComplexCheck>,
    /// A proven bound failed. Expected never.
    pub theorem_violation: bool,
    /// graph6 lines or facet files exhibiting a theorem or conjecture
    /// failure.
    pub certificates: Vec<String>,
}

/// Triangle-free maximizers of `b` at order `n` with bipartiteness flags,
/// plus the missing-face checks on `complexes` (labelled).
pub fn conjecture_checks(n: usize, complexes: &[(String, Complex)], opts: &SearchOptions) -> Result<ConjectureReport> {
    let tf = maximize(SearchMetric::B, ClassFilter::TriangleFree, Source::Generated(n), opts)?;
    let maximizer_flags: Vec<MaximizerFlag> = tf
        .maximizers
        .iter()
        .map(|s| {
            let g = crate::graphs::parse_graph6(s)?;
            Ok(MaximizerFlag { graph6: s.clone(), bipartite: g.is_bipartite() })
        })
        .collect::<Result<_>>()?;
    let mut certificates: Vec<String> = tf.violations.iter().map(|v| v.graph6.clone()).collect();
    let mut theorem_violation = !tf.violations.is_empty();

    let mut checks = Vec::new();
    for (label, k) in complexes {
        let r = check_complex_bounds(k, opts.field, &opts.limits)?;
        let theorem: Vec<&crate::invariants::BoundCheck> = r
            .bounds
            .iter()
            .filter(|c| c.name == crate::invariants::MISSING_FACE_THETA || c.name == crate::invariants::LARGE_FACET_THETA)
            .collect();
        let theorem_pass = theorem.iter().all(|c| !c.verdict.is_violation());
        let conjecture_verdict = r.conjecture.as_ref().map(|c| c.verdict);
        if !theorem_pass || conjecture_verdict.is_some_and(Verdict::is_violation) {
            certificates.push(write_facet_file(k));
        }
        theorem_violation |= !theorem_pass;
        checks.push(ComplexCheck {
            label: label.clone(),
            n: r.n,
            d_f: r.d_f,
            d_m: r.d_m,
            b: r.b,
            theorem_pass,
            conjecture_verdict,
        });
    }

    Ok(ConjectureReport {
        n,
        all_maximizers_bipartite: maximizer_flags.iter().all(|f| f.bipartite),
        maximizer_flags,
        triangle_free: tf,
        complexes: checks,
        theorem_violation,
        certificates,
    })
}
