//! Cartan and Coxeter matrices tied to the homology of incidence algebras.

mod coxeter;
mod report;
mod verify;

pub use coxeter::{
    admissible_ordering, cartan_matrix, coxeter_matrix, coxeter_permutation, dimension_vector,
    dimension_vector_law, distributive_via_coxeter, elements_to_positions, positions_to_elements,
    OrderingChoice,
};
pub use report::{report_json, BijectionReport};
pub use verify::{
    exact_permanent, question_probe, verify_main_theorems, verify_with, Check, ProbeReport,
    ProbeRow, TheoremReport,
};

use crate::homalg::HomalgError;
use crate::linalg::LinalgError;
use crate::poset::PosetError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}
