//! Finite-dimensional representations of acyclic quivers over exact fields.

pub mod shape;
pub mod rep;
pub mod translate;
pub mod grass;
pub mod decomp;

pub use decomp::{decompose, interval_indecomposables, IntervalRep};
pub use grass::{count_subreps, grassmannian_euler};
pub use rep::{ext_space, hom_space, middle_term, ExtSpace, IntRep, Rep};
pub use shape::{PathAlgebra, QuiverShape};
pub use translate::ar_translate;

/// Dimension vector of a representation.
pub type DimVector = Vec<usize>;
