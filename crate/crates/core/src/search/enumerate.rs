//! Isomorph-free generation of small graphs.
//!
//! Every graph on `n` vertices arises from one on `n - 1` vertices by adding
//! a vertex of maximum degree: delete a maximum-degree vertex and the rest is
//! isomorphic to some representative. So each representative is extended by
//! a new vertex whose neighbourhood `S` satisfies `|S| >= deg(u) + [u ∈ S]`
//! for every old vertex `u`, and the results are deduplicated by canonical
//! key. Triangle-free and bipartite graphs are closed under vertex deletion,
//! so those classes extend their own representatives; connected graphs are
//! filtered from the full list at the last level.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::canon::{canonical_key_capped, graph_from_key, CanonicalKey};
use crate::graphs::Graph;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    All,
    TriangleFree,
    Bipartite,
    Connected,
}

impl ClassFilter {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::TriangleFree => g.is_triangle_free(),
            ClassFilter::Bipartite => g.is_bipartite(),
            ClassFilter::Connected => g.is_connected(),
        }
    }

    /// Every member is triangle-free.
    pub fn is_triangle_free(self) -> bool {
        matches!(self, ClassFilter::TriangleFree | ClassFilter::Bipartite)
    }

    fn cap(self, limits: &Limits) -> usize {
        match self {
            ClassFilter::All | ClassFilter::Connected => limits.generate_all_cap,
            ClassFilter::TriangleFree | ClassFilter::Bipartite => limits.generate_restricted_cap,
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilter::All => "all",
            ClassFilter::TriangleFree => "trifree",
            ClassFilter::Bipartite => "bip",
            ClassFilter::Connected => "connected",
        })
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ClassFilter::All),
            "trifree" | "triangle_free" | "triangle-free" => Ok(ClassFilter::TriangleFree),
            "bip" | "bipartite" => Ok(ClassFilter::Bipartite),
            "connected" => Ok(ClassFilter::Connected),
            _ => Err(Error::domain(format!(
                "unknown class `{s}`; expected all, trifree, bip or connected"
            ))),
        }
    }
}

/// One representative per isomorphism class of `n`-vertex graphs in the
/// class, canonically labelled and sorted by canonical key.
pub fn enumerate_graphs(n: usize, class: ClassFilter, limits: &Limits) -> Result<Vec<Graph>> {
    Ok(enumerate_levels(n, class, limits)?.pop().expect("levels 0..=n"))
}

/// Representatives for every order `0..=n`.
pub fn enumerate_levels(n: usize, class: ClassFilter, limits: &Limits) -> Result<Vec<Vec<Graph>>> {
    let cap = class.cap(limits).min(crate::graphs::canon::CANON_HARD_CAP);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "order for internal generation; pipe graph6 from an external generator such as nauty geng",
            cap,
        });
    }
    let base = match class {
        ClassFilter::Connected => ClassFilter::All,
        c => c,
    };
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::null()]];
    for k in 1..=n {
        let next = extend(&levels[k - 1], base)?;
        levels.push(next);
    }
    if class == ClassFilter::Connected {
        for level in &mut levels {
            level.retain(|g| g.is_connected());
        }
    }
    Ok(levels)
}

fn extend(reps: &[Graph], class: ClassFilter) -> Result<Vec<Graph>> {
    let m = reps.first().map_or(0, |g| g.order());
    let n = m + 1;
    let keys: Vec<Vec<CanonicalKey>> = reps
        .par_iter()
        .map(|g| {
            let deg: Vec<usize> = (0..m).map(|u| g.degree(u)).collect();
            let mut out = Vec::new();
            for s in 0u128..1 << m {
                let s = VertexSet(s);
                let size = s.len();
                if (0..m).any(|u| size < deg[u] + s.contains(u) as usize) {
                    continue;
                }
                if class.is_triangle_free() && !g.is_independent(s) {
                    continue;
                }
                let mut adj = g.adjacency().to_vec();
                for u in s {
                    adj[u].insert(m);
                }
                adj.push(s);
                let h = Graph::from_adjacency_unchecked(adj);
                if class == ClassFilter::Bipartite && !h.is_bipartite() {
                    continue;
                }
                out.push(canonical_key_capped(&h, n)?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut all: Vec<CanonicalKey> = keys.into_iter().flatten().filter(|k| seen.insert(*k)).collect();
    all.sort_unstable();
    Ok(all.into_iter().map(graph_from_key).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::canonical_key;

    fn counts(class: ClassFilter, n: usize) -> Vec<usize> {
        let limits = Limits { generate_all_cap: n, generate_restricted_cap: n, ..Limits::default() };
        enumerate_levels(n, class, &limits).unwrap().iter().map(|l| l.len()).collect()
    }

    #[test]
    fn class_counts() {
        assert_eq!(counts(ClassFilter::All, 7), [1, 1, 2, 4, 11, 34, 156, 1044]);
        assert_eq!(counts(ClassFilter::TriangleFree, 7), [1, 1, 2, 3, 7, 14, 38, 107]);
        assert_eq!(counts(ClassFilter::Bipartite, 7), [1, 1, 2, 3, 7, 13, 35, 88]);
        assert_eq!(counts(ClassFilter::Connected, 7), [1, 1, 1, 2, 6, 21, 112, 853]);
    }

    /// Every labelled graph on 5 vertices is isomorphic to exactly one
    /// generated representative.
    #[test]
    fn brute_force_dedup_oracle() {
        let reps = enumerate_graphs(5, ClassFilter::All, &Limits::default()).unwrap();
        let rep_keys: HashSet<CanonicalKey> = reps.iter().map(|g| canonical_key(g).unwrap()).collect();
        assert_eq!(rep_keys.len(), reps.len());
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut hit = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let key = canonical_key(&Graph::from_edges(5, &edges).unwrap()).unwrap();
            assert!(rep_keys.contains(&key));
            hit.insert(key);
        }
        assert_eq!(hit.len(), reps.len());
    }

    #[test]
    fn small_cases() {
        let l = Limits::default();
        assert_eq!(enumerate_graphs(1, ClassFilter::All, &l).unwrap().len(), 1);
        let tf = enumerate_graphs(3, ClassFilter::TriangleFree, &l).unwrap();
        let edges: Vec<usize> = tf.iter().map(|g| g.edge_count()).collect();
        assert_eq!(edges, [0, 1, 2]);
        assert!(matches!(
            enumerate_graphs(9, ClassFilter::All, &l),
            Err(Error::CapExceeded { cap: 8, .. })
        ));
        assert_eq!("trifree".parse::<ClassFilter>().unwrap(), ClassFilter::TriangleFree);
    }

    #[test]
    fn output_is_deterministic_and_canonical() {
        let l = Limits::default();
        let a = enumerate_graphs(6, ClassFilter::All, &l).unwrap();
        let b = enumerate_graphs(6, ClassFilter::All, &l).unwrap();
        assert_eq!(a, b);
        for g in &a {
            assert_eq!(&crate::graphs::canonical_graph(g).unwrap(), g);
        }
    }
}
