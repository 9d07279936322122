//! Finite simple graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex. All subgraph
//! operations relabel the surviving vertices order-preservingly.

pub(crate) mod canon;
mod graph6;

pub use canon::{canonical_form, canonical_graph, canonical_key, canonical_key_capped, CanonicalKey, CANON_HARD_CAP};
pub use graph6::{encode_graph6, parse_graph6};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` gives the null graph.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// The graph with no vertices.
    pub fn null() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency sets, validating symmetry, irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(Error::domain(format!("vertex {v} has a neighbour >= n")));
            }
            if nb.contains(v) {
                return Err(Error::domain(format!("loop at vertex {v}")));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::domain(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::domain(format!("vertex {v} out of range for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    /// `G[W]`, relabelled order-preservingly.
    pub fn induced(&self, w: VertexSet) -> Result<Graph> {
        if !w.is_subset(self.vertices()) {
            return Err(Error::domain(format!("vertex set {w} not contained in 0..{}", self.n)));
        }
        Ok(self.induced_unchecked(w))
    }

    pub(crate) fn induced_unchecked(&self, w: VertexSet) -> Graph {
        let adj = w.iter().map(|v| self.adj[v].compress(w)).collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// `G \ W`.
    pub fn delete(&self, w: VertexSet) -> Result<Graph> {
        self.induced(self.vertices().difference(w))
    }

    /// `G \ v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    /// `G \ N_G[v]`.
    pub fn delete_closed_neighbourhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().difference(self.closed_neighbourhood(v))))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// `G ⊔ H`; the vertices of `H` are shifted by `|V(G)|`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|a| a.shifted(self.n)));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G ⊕ H`: the disjoint union plus every edge between the two sides.
    pub fn join_sum(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        check_order(n)?;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(h.n).shifted(self.n);
        let mut adj: Vec<VertexSet> = self.adj.iter().map(|a| a.union(right)).collect();
        adj.extend(h.adj.iter().map(|a| a.shifted(self.n).union(left)));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Structural predicates used to pick applicable bounds.
    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            min_degree: self.min_degree(),
            triangle_free: self.is_triangle_free(),
            bipartite: self.is_bipartite(),
            has_isolated_vertex: (0..self.n).any(|v| self.adj[v].is_empty()),
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        // a triangle exists iff some edge uv has N(u) ∩ N(v) ≠ ∅
        (0..self.n).all(|u| {
            self.adj[u]
                .iter()
                .filter(|&v| v > u)
                .all(|v| self.adj[u].is_disjoint(self.adj[v]))
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// A proper 2-colouring as the colour-1 class, if one exists.
    pub fn two_colouring(&self) -> Option<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut one = VertexSet::EMPTY;
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut frontier = VertexSet::singleton(root);
            let mut colour = false;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adj[v]);
                }
                // an edge inside a BFS layer means an odd cycle
                if frontier.iter().any(|v| !self.adj[v].is_disjoint(frontier)) {
                    return None;
                }
                next = next.difference(seen);
                colour = !colour;
                if colour {
                    one = one.union(next);
                }
                seen = seen.union(next);
                frontier = next;
            }
        }
        Some(one)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == self.vertices()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Unsupported(format!(
            "graphs are limited to {MAX_VERTICES} vertices, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Result of [`Graph::predicates`]. `min_degree` is `None` for the null graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub min_degree: Option<usize>,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub has_isolated_vertex: bool,
}

/// The complete graph `K_s`.
pub fn complete(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::domain("complete(0) is undefined; use Graph::null()"));
    }
    Ok(Graph::empty(s)?.complement())
}

/// `K_{s,s}` minus a perfect matching: `i` is adjacent to `s + j` iff `i != j`.
pub fn crown(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::domain("crown(0) is undefined"));
    }
    let mut g = Graph::empty(2 * s)?;
    for i in 0..s {
        for j in 0..s {
            if i != j {
                g.add_edge(i, s + j);
            }
        }
    }
    Ok(g)
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain("cycles need at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `sG`, the disjoint union of `s` copies of `g`.
pub fn copies(s: usize, g: &Graph) -> Result<Graph> {
    if s == 0 {
        return Err(Error::domain("copies needs s >= 1"));
    }
    let mut out = g.clone();
    for _ in 1..s {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// `G ⊕ G ⊕ ... ⊕ G` with `s` summands.
pub fn join_copies(s: usize, g: &Graph) -> Result<Graph> {
    if s == 0 {
        return Err(Error::domain("join_copies needs s >= 1"));
    }
    let mut out = g.clone();
    for _ in 1..s {
        out = out.join_sum(g)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_iter(v.iter().copied())
    }

    #[test]
    fn complete_graphs() {
        let k1 = complete(1).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let k5 = complete(5).unwrap();
        assert_eq!((k5.order(), k5.edge_count()), (5, 10));
        assert!(complete(0).is_err());
    }

    #[test]
    fn crown_small_cases() {
        let c1 = crown(1).unwrap();
        assert_eq!((c1.order(), c1.edge_count()), (2, 0));
        let c2 = crown(2).unwrap();
        assert_eq!(c2.edge_count(), 2);
        assert_eq!(c2.min_degree(), Some(1));
        assert_eq!(c2.max_degree(), Some(1));
        let c3 = crown(3).unwrap();
        assert!(c3.is_connected());
        assert!(c3.is_bipartite());
        assert!((0..6).all(|v| c3.degree(v) == 2));
        assert_eq!(canonical_key(&c3).unwrap(), canonical_key(&cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn unions_and_joins() {
        let k2 = complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!((two_k2.order(), two_k2.edge_count()), (4, 2));
        assert_eq!(k2.disjoint_union(&Graph::null()).unwrap(), k2);

        let k5 = complete(5).unwrap();
        let u = k5.disjoint_union(&k5).unwrap();
        assert_eq!((u.order(), u.edge_count(), u.min_degree()), (10, 20, Some(4)));

        assert_eq!(k2.join_sum(&k2).unwrap(), complete(4).unwrap());
        let j = two_k2.join_sum(&two_k2).unwrap();
        assert_eq!((j.order(), j.edge_count()), (8, 20));
        assert_eq!(two_k2.join_sum(&Graph::null()).unwrap(), two_k2);
    }

    #[test]
    fn copies_counts() {
        let k5 = complete(5).unwrap();
        assert_eq!(copies(2, &k5).unwrap().order(), 10);
        assert_eq!(copies(1, &k5).unwrap(), k5);
        let k3 = complete(3).unwrap();
        let g = copies(3, &k3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 9));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = complete(5).unwrap();
        assert_eq!(k5.induced(vs(&[0, 2, 4])).unwrap(), complete(3).unwrap());
        assert_eq!(k5.induced(VertexSet::EMPTY).unwrap().order(), 0);
        let c3 = crown(3).unwrap();
        let part = c3.induced(vs(&[0, 1, 2])).unwrap();
        assert_eq!((part.order(), part.edge_count()), (3, 0));
        assert!(k5.induced(vs(&[7])).is_err());
    }

    #[test]
    fn closed_neighbourhood_deletion() {
        let k5 = complete(5).unwrap();
        for v in 0..5 {
            assert_eq!(k5.delete_closed_neighbourhood(v).unwrap().order(), 0);
        }
        let k2 = complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!(two_k2.delete_closed_neighbourhood(0).unwrap(), k2);
        // crown(3), v = 0: N[0] = {0, 4, 5}; survivors 1, 2, 3 with edges 1-3, 2-3
        let rest = crown(3).unwrap().delete_closed_neighbourhood(0).unwrap();
        assert_eq!(rest, Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
        assert_eq!(canonical_key(&rest).unwrap(), canonical_key(&path(3).unwrap()).unwrap());
        assert!(k5.delete_closed_neighbourhood(5).is_err());
    }

    #[test]
    fn predicates_examples() {
        let p = complete(5).unwrap().predicates();
        assert_eq!(p.min_degree, Some(4));
        assert!(!p.triangle_free && !p.bipartite);

        let p = crown(18).unwrap().predicates();
        assert_eq!(p.min_degree, Some(17));
        assert!(p.triangle_free && p.bipartite);

        let k2 = complete(2).unwrap();
        let p = k2.disjoint_union(&k2).unwrap().predicates();
        assert_eq!(p.min_degree, Some(1));
        assert!(p.triangle_free && p.bipartite && !p.has_isolated_vertex);

        assert_eq!(Graph::null().predicates().min_degree, None);
        assert!(!cycle(5).unwrap().is_bipartite());
        assert!(cycle(5).unwrap().is_triangle_free());
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![vs(&[1]), VertexSet::EMPTY]).is_err());
        assert!(Graph::from_adjacency(vec![vs(&[0])]).is_err());
        assert!(Graph::from_adjacency(vec![vs(&[3]), vs(&[])]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn complement_and_identity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.induced(g.vertices()).unwrap(), g);
    }
}
