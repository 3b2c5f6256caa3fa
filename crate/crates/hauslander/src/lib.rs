//! Higher Auslander algebras of type A and the derived equivalences built
//! from rational Dyck paths, computed exactly over the rationals.

pub mod linalg;
pub mod pathcomb;
pub mod bqa;
pub mod cluster_model;
pub mod homotopy;
pub mod cli;
