//! Coherent sheaves on the projective line in split form: sums of line
//! bundles `O(a)` and skyscrapers `O_p^m` (length `m` at a rational point).

pub mod kercok;
pub mod local;
pub mod point;
pub mod random;
pub mod sheaf;

pub use kercok::{cokernel, extend_along, factor_through, generic_rank, kernel};
pub use point::Point;
pub use sheaf::{
    eta, euler_form, ext1_dim, ext_dim, hom_basis, post_compose_matrix, pre_compose_matrix, P1Morphism, P1Sheaf,
    SheafJson, Torsion,
};
