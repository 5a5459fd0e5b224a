//! Picard-lattice arithmetic, line-bundle cohomology and normal-crossing
//! configurations on `P^d` and the Hirzebruch surfaces.

pub mod snc;
pub mod variety;

pub use snc::{
    ext_dim_on_stratum, restrict_to_stratum, stratum_info, validate_snc, DivisorDatum, SncConfig, SncVerdict, Stratum,
    StratumBundle, StratumKind,
};
pub use variety::{
    canonical_class, cohomology_dim, cohomology_table, euler_characteristic, intersection_number, PicClass,
    VarietyModel,
};
