//! Finite posets and lattices.

mod birkhoff;
mod encoding;
pub mod format;
pub mod generators;
mod lattice;
mod order;

pub use birkhoff::{
    birkhoff, birkhoff_with_cap, order_ideals, rowmotion, rowmotion_map, JoinIrreducibleModel,
    OrderIdeal, MAX_IDEALS,
};
pub use encoding::{euler_row, meet_irreducible_encoding, MeetIrreducibleEncoding};
pub use lattice::{lattice_structure, LatticeStructure, NotALattice};
pub use order::{find_isomorphism, Poset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("cycle detected: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownLabel(String),
    #[error("{n} elements exceed the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("more than {limit} order ideals")]
    TooManyIdeals { limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("not distributive: {0}")]
    NotDistributive(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("encoding invariant failed: {0}")]
    EncodingInvariant(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// [`lattice_structure`] with the failure witness turned into an error.
pub fn require_lattice(p: &Poset) -> Result<LatticeStructure, PosetError> {
    lattice_structure(p).map_err(|w| PosetError::NotALattice(w.describe(p)))
}
