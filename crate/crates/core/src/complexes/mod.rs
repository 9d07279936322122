//! Simplicial complexes in facet (maximal-face) representation.
//!
//! A [`Complex`] lives on the ground set `0..n`. Two degenerate cases are kept
//! apart:
//!
//! - the *void* complex has no faces at all (empty facet list);
//! - the *empty* complex `{∅}` has exactly one face, the empty set, and is
//!   stored as the single facet `∅`. Its reduced homology is one-dimensional
//!   in degree `-1`.
//!
//! A ground-set vertex lying in no facet is a non-face of size one. It does
//! not change homology but it does count towards `n` for Alexander duality.

mod facet_file;

pub use facet_file::{parse_facet_file, write_facet_file};

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graphs::Graph;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl Complex {
    /// The complex generated by `generators` on the ground set `0..n`.
    /// Non-maximal generators are dropped; an empty generator list gives the
    /// void complex.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, generators: I) -> Result<Self> {
        check_ground(n)?;
        let all = VertexSet::full(n);
        let gens: Vec<VertexSet> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(all)) {
            return Err(Error::domain(format!("facet {bad} has a vertex >= n={n}")));
        }
        Ok(Complex {
            n,
            facets: maximal_sets(gens),
        })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_lists(n: usize, facets: &[&[usize]]) -> Result<Self> {
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::domain(format!("vertex {v} out of range for n={n}")));
            }
        }
        Complex::from_facets(n, facets.iter().map(|f| VertexSet::from_iter(f.iter().copied())))
    }

    pub fn void(n: usize) -> Self {
        Complex { n, facets: Vec::new() }
    }

    /// `{∅}` on the ground set `0..n`.
    pub fn empty(n: usize) -> Self {
        Complex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(Complex {
            n,
            facets: vec![VertexSet::full(n)],
        })
    }

    /// `S^0`: two isolated points.
    pub fn sphere0() -> Self {
        Complex {
            n: 2,
            facets: vec![VertexSet::singleton(0), VertexSet::singleton(1)],
        }
    }

    pub(crate) fn from_maximal_unchecked(n: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort_by(|a, b| a.cmp_lex(*b));
        Complex { n, facets }
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order of their vertex lists.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Vertices that lie in some facet.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    fn require_nonvoid(&self, op: &str) -> Result<()> {
        if self.is_void() {
            Err(Error::domain(format!("{op} is undefined on the void complex")))
        } else {
            Ok(())
        }
    }

    /// Number of maximal faces.
    pub fn max_face_count(&self) -> usize {
        self.facets.len()
    }

    /// Restrict to the vertices that actually occur, relabelled
    /// order-preservingly.
    pub fn compact(&self) -> Complex {
        let keep = self.support();
        let facets = self.facets.iter().map(|f| f.compress(keep)).collect();
        Complex::from_maximal_unchecked(keep.len(), facets)
    }

    /// The graph on `0..n` whose edges are the 2-element faces.
    pub fn one_skeleton(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &f in &self.facets {
            for v in f {
                adj[v] = adj[v].union(f.without(v));
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    ///
    /// A set is a non-face iff it meets `V \ F` for every facet `F`, so the
    /// minimal non-faces are the minimal transversals of the facet
    /// complements. They are enumerated by branching on the elements of the
    /// smallest unhit complement; a branch dies as soon as some chosen vertex
    /// has no private complement left.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        self.require_nonvoid("minimal_nonfaces")?;
        let all = VertexSet::full(self.n);
        let comps: Vec<VertexSet> = self.facets.iter().map(|&f| all.difference(f)).collect();
        let mut out = Vec::new();
        transversals(&comps, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp_lex(*b)));
        Ok(out)
    }

    /// `K* = {σ ⊆ V : V \ σ ∉ K}`, with facets the complements of the minimal
    /// non-faces of `K`. The dual of a full simplex is void.
    pub fn alexander_dual(&self) -> Result<Complex> {
        let all = VertexSet::full(self.n);
        let facets = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|s| all.difference(s))
            .collect();
        Ok(Complex::from_maximal_unchecked(self.n, facets))
    }

    /// `Bip(K)`: vertices `0..n` then one vertex per facet, with `v ~ F`
    /// whenever `v ∉ F`.
    pub fn bip_graph(&self) -> Result<Graph> {
        self.require_nonvoid("bip_graph")?;
        if self.is_empty_complex() {
            return Err(Error::domain("bip_graph needs a complex with at least one vertex"));
        }
        let m = self.facets.len();
        let total = self.n + m;
        if total > MAX_VERTICES {
            return Err(Error::Unsupported(format!("Bip(K) would have {total} vertices")));
        }
        let mut adj = vec![VertexSet::EMPTY; total];
        for (j, &f) in self.facets.iter().enumerate() {
            for v in 0..self.n {
                if !f.contains(v) {
                    adj[v].insert(self.n + j);
                    adj[self.n + j].insert(v);
                }
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `K * L`, with the vertices of `L` shifted by `n_K`.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        self.require_nonvoid("join")?;
        other.require_nonvoid("join")?;
        let n = self.n + other.n;
        check_ground(n)?;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(f.union(g.shifted(self.n)));
            }
        }
        Ok(Complex::from_maximal_unchecked(n, facets))
    }

    /// `ΣK = K * S^0`; the two cone points are `n` and `n + 1`.
    pub fn suspension(&self) -> Result<Complex> {
        self.join(&Complex::sphere0())
    }

    /// `lk_K v = {τ : v ∉ τ, τ ∪ {v} ∈ K}`, on its own vertex set (relabelled
    /// order-preservingly). Void when `v` lies in no facet.
    pub fn link(&self, v: usize) -> Result<Complex> {
        self.require_nonvoid("link")?;
        if v >= self.n {
            return Err(Error::domain(format!("vertex {v} out of range for n={}", self.n)));
        }
        let gens: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        if gens.is_empty() {
            return Ok(Complex::void(0));
        }
        let keep = gens.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f));
        let facets = gens.into_iter().map(|f| f.compress(keep)).collect();
        Ok(Complex::from_maximal_unchecked(keep.len(), maximal_sets(facets)))
    }

    /// `K \ v` on the ground set with `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Complex> {
        self.require_nonvoid("delete_vertex")?;
        if v >= self.n {
            return Err(Error::domain(format!("vertex {v} out of range for n={}", self.n)));
        }
        let keep = VertexSet::full(self.n).without(v);
        let gens = self.facets.iter().map(|f| f.compress(keep)).collect();
        Ok(Complex::from_maximal_unchecked(self.n - 1, maximal_sets(gens)))
    }

    /// Enumerate every face, grouped by cardinality, refusing to go beyond
    /// `cap` faces in total (the empty face included).
    pub fn face_census(&self, cap: usize) -> Result<FaceCensus> {
        self.require_nonvoid("face_census")?;
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        // a facet of size t alone contributes 2^t faces
        if top >= 63 || (1usize << top) > cap {
            return Err(Error::CapExceeded { what: "face count", cap });
        }

        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        let mut level: HashSet<VertexSet> = HashSet::new();
        let mut total = 0usize;
        for size in (0..=top).rev() {
            level.extend(self.facets.iter().copied().filter(|f| f.len() == size));
            total += level.len();
            if total > cap {
                return Err(Error::CapExceeded { what: "face count", cap });
            }
            let mut faces: Vec<VertexSet> = level.iter().copied().collect();
            faces.sort_by(|a, b| a.cmp_lex(*b));
            let mut next = HashSet::with_capacity(faces.len());
            if size > 0 {
                for &f in &faces {
                    for v in f {
                        next.insert(f.without(v));
                    }
                }
            }
            by_size[size] = faces;
            level = next;
        }
        Ok(FaceCensus { by_size })
    }

    /// Minimal-non-face and minimal-facet statistics. `d_f` is the largest
    /// minimal non-face (0 for a full simplex), `d_m = n - min |F|`.
    pub fn class_membership(&self) -> Result<ClassMembership> {
        let nonfaces = self.minimal_nonfaces()?;
        let d_f = nonfaces.iter().map(|s| s.len()).max().unwrap_or(0);
        let min_facet = self.facets.iter().map(|f| f.len()).min().unwrap_or(0);
        Ok(ClassMembership {
            is_flag: d_f <= 2,
            d_f,
            d_m: self.n - min_facet,
            minimal_nonface_count: nonfaces.len(),
        })
    }
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_void() {
            write!(f, "Complex(n={}, void)", self.n)
        } else {
            write!(f, "Complex(n={}, facets={:?})", self.n, self.facets)
        }
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Unsupported(format!(
            "complexes are limited to {MAX_VERTICES} vertices, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Deduplicate and drop every set contained in another; sorted lexicographically.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp_lex(*b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.cmp_lex(*b));
    kept
}

fn transversals(sets: &[VertexSet], current: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
    for v in current {
        let has_private = sets
            .iter()
            .any(|&c| c.intersection(current) == VertexSet::singleton(v));
        if !has_private {
            return;
        }
    }
    let unhit = sets
        .iter()
        .filter(|c| c.is_disjoint(current))
        .min_by_key(|c| c.difference(excluded).len());
    let Some(&target) = unhit else {
        out.push(current);
        return;
    };
    let mut excluded = excluded;
    for v in target.difference(excluded) {
        transversals(sets, current.with(v), excluded, out);
        excluded.insert(v);
    }
}

/// Faces grouped by cardinality; `by_size[k]` holds the faces of dimension
/// `k - 1`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    pub by_size: Vec<Vec<VertexSet>>,
}

impl FaceCensus {
    /// `(f_{-1}, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_size.iter().map(|l| l.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.by_size.iter().map(|l| l.len()).sum()
    }

    /// `Σ_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> i64 {
        self.by_size
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { -(l.len() as i64) } else { l.len() as i64 })
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    pub is_flag: bool,
    pub d_f: usize,
    pub d_m: usize,
    pub minimal_nonface_count: usize,
}

impl ClassMembership {
    /// Every minimal non-face has at most `d` vertices.
    pub fn in_missing_face_class(&self, d: usize) -> bool {
        self.d_f <= d
    }

    /// Every facet has at least `n - d` vertices.
    pub fn in_large_facet_class(&self, d: usize) -> bool {
        self.d_m <= d
    }
}

/// `Ind(G)`: facets are the maximal independent sets, found as maximal
/// cliques of the complement by pivoting Bron–Kerbosch.
pub fn independence_complex(g: &Graph) -> Complex {
    let comp = g.complement();
    let mut out = Vec::new();
    bron_kerbosch(comp.adjacency(), VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    Complex::from_maximal_unchecked(g.order(), out)
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(adj[u]).len())
        .expect("p is nonempty");
    for v in p.difference(adj[pivot]) {
        bron_kerbosch(adj, r.with(v), p.intersection(adj[v]), x.intersection(adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

/// `N(G)`: on the non-isolated vertices (relabelled), generated by the open
/// neighbourhoods. A graph without edges yields the void complex.
pub fn neighbourhood_complex(g: &Graph) -> Complex {
    let keep = VertexSet::from_iter((0..g.order()).filter(|&v| g.degree(v) > 0));
    if keep.is_empty() {
        return Complex::void(0);
    }
    let gens = keep.iter().map(|v| g.neighbours(v).compress(keep)).collect();
    Complex::from_maximal_unchecked(keep.len(), maximal_sets(gens))
}

/// `D(G)`: faces are complements of dominating sets; the facets are the
/// complements of the minimal dominating sets, found by subset enumeration.
pub fn dominance_complex(g: &Graph, cap: usize) -> Result<Complex> {
    let n = g.order();
    let cap = cap.min(30);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "graph order for dominance-complex enumeration",
            cap,
        });
    }
    let closed: Vec<u32> = (0..n).map(|v| g.closed_neighbourhood(v).bits() as u32).collect();
    let all: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let covers = |s: u32| -> bool {
        let mut c = 0u32;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            c |= closed[v];
            rest &= rest - 1;
        }
        c == all
    };
    let mut facets = Vec::new();
    for s in 0..=(all as u64) {
        let s = s as u32;
        if !covers(s) {
            continue;
        }
        let mut minimal = true;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if covers(s & !bit) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if minimal {
            facets.push(VertexSet((all & !s) as u128));
        }
    }
    Ok(Complex::from_maximal_unchecked(n, facets))
}

/// `Δ[k]^{(s)}`: all `(s+1)`-subsets of a `(k+1)`-set, for `-1 <= s <= k`.
pub fn skeleton_simplex(k: isize, s: isize) -> Result<Complex> {
    if k < 0 || s < -1 || s > k {
        return Err(Error::domain(format!("skeleton_simplex needs -1 <= s <= k, k >= 0; got k={k}, s={s}")));
    }
    let n = (k + 1) as usize;
    check_ground(n)?;
    let size = (s + 1) as usize;
    let mut facets = Vec::new();
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        facets.push(VertexSet::from_iter(combo.iter().copied()));
        // advance to the next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(Complex::from_maximal_unchecked(n, facets));
            }
            i -= 1;
            if combo[i] < n - size + i {
                combo[i] += 1;
                for j in i + 1..size {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}
