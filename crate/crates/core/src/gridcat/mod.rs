//! Categories of grids `A[eta^(1/p)]` over a driver category.

pub mod checks;
pub mod cotilt;
pub mod driver;
pub mod findim;
pub mod functors;
pub mod grid;
pub mod p1;
pub mod phi;
pub mod random;

pub use driver::{CategoryDriver, DirectSum, Elem};
pub use findim::{DirectionKind, FinDimDriver, RepMap};
pub use grid::{
    grid_cokernel, grid_direct_sum, grid_hom, grid_hom_dim, grid_kernel, is_isomorphic, quotient_grid, subobject_grid,
    Axis, GridMorphism, GridObject, GridShape, GridViolation, Resolved,
};
pub use p1::CohP1Driver;
