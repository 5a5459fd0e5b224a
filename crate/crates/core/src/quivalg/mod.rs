//! Quivers with relations, their representations, Hom and Ext.

pub mod algebra;
pub mod json;
pub mod quiver;
pub mod rep;

pub use algebra::{AlgebraPresentation, PathAlgebra, Relation};
pub use json::QuiverJson;
pub use quiver::{linear_quiver, Arrow, Path, Quiver, Vertex};
pub use rep::{cokernel, hom_dim, hom_space, kernel, RepMorphism, Representation};
