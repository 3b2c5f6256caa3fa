//! Bound quiver algebras, their modules, and constructions on them.

pub mod algebra;
pub mod auslander;
pub mod construct;
pub mod iso;
pub mod module;
pub mod present;
pub mod quiver;

use thiserror::Error;

pub use algebra::{Arrow, BasisElem, Elt, FdAlgebra};
pub use module::{ModMap, Module};
pub use quiver::{BoundQuiver, Quiver, Relation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BqaError {
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("not basic-split: e A e at vertex {0} has dimension {1}")]
    NotBasicSplit(String, usize),
    #[error("radical not nilpotent within the length bound")]
    NotNilpotent,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("no algebra on the path data: {0}")]
    NoPaths(String),
}
