//! Complexes of projectives up to homotopy: Hom complexes, resolutions,
//! the derived Nakayama functor, and the checks built on them.

pub mod checks;
pub mod complex;
pub mod hom;
pub mod nakayama;
pub mod resolve;
pub mod typea;

use thiserror::Error;

use crate::bqa::BqaError;
use crate::cluster_model::ModelError;

pub use checks::{
    build_tilting_complex_from_nu_orbit, fcy_object_check, preprojective_graded_check, thick_generation_search,
    two_subhomogeneous_check, GenerationResult,
};
pub use complex::{cone, ChainMap, ComplexJson, PMat, ProjComplex};
pub use hom::{complexes_isomorphic, end_algebra_of_complexes, hom_complex_dim};
pub use nakayama::{derived_nakayama, derived_nakayama_inverse, nakayama_power};
pub use resolve::{domdim, ext_dim, gldim, minimal_proj_resolution, DomDim, Resolution, ResolutionReport};
pub use typea::TypeA;

#[derive(Debug, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Bqa(#[from] BqaError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid: {0}")]
    Invalid(String),
}
