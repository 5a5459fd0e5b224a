//! Exact linear algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod poly;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{equalizer_basis, Matrix};
pub use poly::{Poly, RootFinding};
