//! Canonical forms for small graphs.
//!
//! The canonical form is the lexicographically least graph6 bit string over
//! all vertex orders compatible with an isomorphism-invariant ordered
//! partition. The partition is obtained by equitable refinement, starting
//! from the degree partition, and individualising one vertex at a time.
//! Branches are pruned when their fixed prefix already exceeds the best leaf,
//! and when the branching vertex is a twin of one already tried (swapping
//! twins is an automorphism that fixes the current partition).

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Hard ceiling on the order accepted by the canonical labeller.
pub const CANON_HARD_CAP: usize = 16;

/// Canonical bit string packed into an integer (first graph6 bit most
/// significant), tagged with the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub order: u8,
    pub bits: u128,
}

/// Canonical key of `g`, refusing graphs above `cap` vertices.
pub fn canonical_key_capped(g: &Graph, cap: usize) -> Result<CanonicalKey> {
    let n = g.order();
    if n > cap.min(CANON_HARD_CAP) {
        return Err(Error::CapExceeded {
            what: "graph order for canonical labelling",
            cap: cap.min(CANON_HARD_CAP),
        });
    }
    let adj: Vec<u32> = g.adjacency().iter().map(|a| a.bits() as u32).collect();
    let (bits, _) = Labeller::new(&adj).run();
    Ok(CanonicalKey { order: n as u8, bits })
}

/// Canonical key with the default cap of 10 vertices.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_key_capped(g, crate::Limits::default().canonical_cap)
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let key = canonical_key(g)?;
    Ok(graph_from_key(key))
}

/// Canonical label as a byte string: the graph6 word of the canonical
/// relabelling. Equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let c = canonical_graph(g)?;
    Ok(super::encode_graph6(&c)?.into_bytes())
}

pub(crate) fn graph_from_key(key: CanonicalKey) -> Graph {
    let n = key.order as usize;
    let total = n * n.saturating_sub(1) / 2;
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (key.bits >> (total - 1 - k)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

struct Labeller<'a> {
    adj: &'a [u32],
    n: usize,
    total_bits: usize,
    best: Option<u128>,
    best_order: Vec<u8>,
}

impl<'a> Labeller<'a> {
    fn new(adj: &'a [u32]) -> Self {
        let n = adj.len();
        Labeller {
            adj,
            n,
            total_bits: n * n.saturating_sub(1) / 2,
            best: None,
            best_order: Vec::new(),
        }
    }

    fn run(mut self) -> (u128, Vec<u8>) {
        if self.n == 0 {
            return (0, Vec::new());
        }
        let cells = vec![(0..self.n as u8).collect::<Vec<u8>>()];
        let cells = self.refine(cells);
        self.search(cells);
        (self.best.unwrap_or(0), self.best_order)
    }

    /// Split cells until every vertex in a cell sees the same number of
    /// neighbours in every cell. New fragments are ordered by their count
    /// vectors, which depend only on the partition and not on labels.
    fn refine(&self, mut cells: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
        loop {
            let masks: Vec<u32> = cells
                .iter()
                .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Vec<Vec<u8>> = Vec::with_capacity(self.n);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, u8)> = cell
                    .iter()
                    .map(|&v| {
                        let a = self.adj[v as usize];
                        let sig = masks.iter().map(|m| (a & m).count_ones() as u8).collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut frag: Vec<u8> = keyed[start..i].iter().map(|x| x.1).collect();
                        frag.sort_unstable();
                        next.push(frag);
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            cells = next;
            if stable {
                return cells;
            }
        }
    }

    /// Bits of the pairs among the first `k` vertices of `order`, packed as
    /// the leading `k(k-1)/2` bits of the graph6 string.
    fn prefix_bits(&self, order: &[u8], k: usize) -> u128 {
        let mut acc = 0u128;
        for j in 1..k {
            let aj = self.adj[order[j] as usize];
            for &vi in &order[..j] {
                acc = (acc << 1) | ((aj >> vi) & 1) as u128;
            }
        }
        acc
    }

    fn search(&mut self, cells: Vec<Vec<u8>>) {
        let singles = cells.iter().take_while(|c| c.len() == 1).count();
        let order: Vec<u8> = cells.iter().flatten().copied().collect();
        if let Some(best) = self.best {
            let len = singles * singles.saturating_sub(1) / 2;
            let mine = self.prefix_bits(&order, singles);
            let theirs = if len == 0 { 0 } else { best >> (self.total_bits - len) };
            if mine > theirs {
                return;
            }
        }
        if singles == cells.len() {
            let bits = self.prefix_bits(&order, self.n);
            if self.best.is_none_or(|b| bits < b) {
                self.best = Some(bits);
                self.best_order = order;
            }
            return;
        }

        let target = singles
            + cells[singles..]
                .iter()
                .position(|c| c.len() > 1)
                .expect("a non-singleton cell exists");
        let cell = cells[target].clone();
        let mut tried: Vec<u8> = Vec::new();
        for &v in &cell {
            let a_v = self.adj[v as usize];
            let twin = tried.iter().any(|&w| {
                let a_w = self.adj[w as usize];
                (a_v & !(1 << w)) == (a_w & !(1 << v))
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            let child = self.refine(child);
            self.search(child);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, crown, cycle, path};

    /// Minimum graph6 bit string over all n! orders.
    fn brute_force_key(g: &Graph) -> u128 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u128::MAX;
        fn rec(g: &Graph, perm: &mut Vec<usize>, k: usize, best: &mut u128) {
            let n = perm.len();
            if k == n {
                let mut acc = 0u128;
                for j in 1..n {
                    for i in 0..j {
                        acc = (acc << 1) | g.has_edge(perm[i], perm[j]) as u128;
                    }
                }
                *best = (*best).min(acc);
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(g, perm, k + 1, best);
                perm.swap(k, i);
            }
        }
        rec(g, &mut perm, 0, &mut best);
        best
    }

    fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..(1 << pairs.len())).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn isomorphic_examples() {
        let k2 = complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!(canonical_form(&crown(2).unwrap()).unwrap(), canonical_form(&two_k2).unwrap());
        assert_ne!(
            canonical_form(&complete(3).unwrap()).unwrap(),
            canonical_form(&path(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let mut forms: Vec<Vec<u8>> = all_labelled(4).map(|g| canonical_form(&g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn agrees_with_brute_force_partition_on_five_vertices() {
        let graphs: Vec<Graph> = all_labelled(5).collect();
        let ours: Vec<CanonicalKey> = graphs.iter().map(|g| canonical_key(g).unwrap()).collect();
        let brute: Vec<u128> = graphs.iter().map(brute_force_key).collect();
        // both keys induce the same partition into isomorphism classes
        let mut pairs: Vec<(CanonicalKey, u128)> = ours.iter().copied().zip(brute.iter().copied()).collect();
        pairs.sort();
        pairs.dedup();
        let mut a: Vec<_> = pairs.iter().map(|p| p.0).collect();
        a.dedup();
        let mut b: Vec<_> = pairs.iter().map(|p| p.1).collect();
        b.sort();
        b.dedup();
        assert_eq!(a.len(), pairs.len());
        assert_eq!(b.len(), pairs.len());
        assert_eq!(pairs.len(), 34);
    }

    #[test]
    fn canonical_graph_is_isomorphic_and_idempotent() {
        for g in [cycle(7).unwrap(), crown(4).unwrap(), path(6).unwrap()] {
            let c = canonical_graph(&g).unwrap();
            assert_eq!(c.edge_count(), g.edge_count());
            assert_eq!(canonical_graph(&c).unwrap(), c);
        }
    }

    #[test]
    fn vertex_transitive_graphs_finish() {
        // K_{3,3}-like and strongly regular inputs stress the twin and
        // prefix pruning
        let k10 = complete(10).unwrap();
        assert_eq!(canonical_graph(&k10).unwrap(), k10);
        let k33 = crown(4).unwrap();
        let _ = canonical_key(&k33).unwrap();
        let rook = Graph::from_edges(
            9,
            &(0..9)
                .flat_map(|a| (0..9).map(move |b| (a, b)))
                .filter(|&(a, b)| a < b && (a / 3 == b / 3 || a % 3 == b % 3))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let _ = canonical_key(&rook).unwrap();
    }

    #[test]
    fn refuses_above_cap() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(canonical_key(&g), Err(Error::CapExceeded { .. })));
        assert!(canonical_key_capped(&g, 12).is_ok());
    }
}
