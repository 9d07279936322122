//! Total Betti numbers of flag, independence, neighbourhood and dominance
//! complexes, the growth-rate constants that bound them, and an exhaustive
//! search harness for the associated extremal problems.
//!
//! The crate is organised bottom-up:
//!
//! - [`graphs`]: simple graphs on `0..n` with bitset adjacency, graph6 I/O and
//!   canonical forms for isomorph rejection;
//! - [`complexes`]: simplicial complexes in facet form and the constructions
//!   built on them (independence complex, Alexander dual, `Bip(K)`, joins, ...);
//! - [`homology`]: reduced homology over `GF(p)` or `Q` via the augmented chain
//!   complex;
//! - [`invariants`]: `b(G)`, the Hochster sum `β(G)`, the constants `Θ`, `Γ`,
//!   `θ_d` and certified bound checks;
//! - [`constructions`]: the extremal families with exact expected values;
//! - [`search`]: isomorph-free enumeration, graph6 streaming and maximisation.

pub mod bitset;
pub mod complexes;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod homology;
pub mod invariants;
pub mod search;

pub use bitset::VertexSet;
pub use complexes::Complex;
pub use error::{Error, Result};
pub use graphs::Graph;
pub use homology::{BettiVector, FieldSpec};

/// Cost-safety limits shared across modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of faces (including the empty face) enumerated for a
    /// single complex.
    pub face_cap: usize,
    /// Maximum graph order for the brute-force Hochster sum.
    pub hochster_cap: usize,
    /// Maximum graph order accepted by the canonical labeller.
    pub canonical_cap: usize,
    /// Maximum graph order for dominance-complex enumeration.
    pub dominance_cap: usize,
    /// Largest `n` the internal generator produces for the unrestricted class.
    pub generate_all_cap: usize,
    /// Largest `n` for triangle-free and bipartite generation.
    pub generate_restricted_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            face_cap: 1 << 22,
            hochster_cap: 14,
            canonical_cap: 10,
            dominance_cap: 24,
            generate_all_cap: 8,
            generate_restricted_cap: 9,
        }
    }
}
