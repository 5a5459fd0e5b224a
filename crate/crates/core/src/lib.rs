//! Exact computations with weighted grid categories: recollements, tilting
//! and cotilting objects, and squid presentations of their endomorphism
//! algebras.
//!
//! The guide in `book/` walks through the modules with examples.

pub mod cohp1;
pub mod error;
pub mod exactla;
pub mod geom;
pub mod gridcat;
pub mod quivalg;
pub mod squid;
pub mod tiltcheck;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/tilting.md")]
    mod tilting {}
    #[doc = include_str!("../../../book/src/line.md")]
    mod line {}
    #[doc = include_str!("../../../book/src/grids.md")]
    mod grids {}
    #[doc = include_str!("../../../book/src/squids.md")]
    mod squids {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
