//! Homological algebra of incidence algebras: representations, minimal
//! resolutions and the grade data of the regular module.

mod profile;
mod repr;
mod resolution;

pub use profile::{HomologicalProfile, IncidenceHomology};
pub use repr::{hom_dimension, Layer, Morphism, Representation};
pub use resolution::{
    idim, injective_envelope, min_injective_coresolution, min_projective_resolution, pdim,
    projective_cover, Resolution, ResolutionKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomalgError {
    #[error("invalid representation: {0}")]
    Invalid(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("resolution longer than {0}")]
    LengthExceeded(usize),
    #[error("{n} elements exceed the homology limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("not Auslander-Gorenstein")]
    NotAuslanderGorenstein,
    #[error("last term of the resolution of I({0}) is decomposable")]
    LastTermDecomposable(String),
    #[error("no unique partner for {0}: {1} candidates")]
    NotUnique(String, usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
