//! Squid quivers and the endomorphism cross-check.

pub mod build;
pub mod crosscheck;
pub mod emit;

pub use build::{arrow_counts, build_pd_squid, build_weighted_line_squid, relation_kinds, SquidSpec, SquidVertex};
pub use crosscheck::{end_dim_crosscheck, point_of_form, CrosscheckReport, PairCheck};
pub use emit::{emit, to_dot, Format};
