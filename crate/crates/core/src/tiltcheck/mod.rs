//! Checker and assembler for tilting bundles on weighted normal-crossing
//! configurations.

pub mod family;
pub mod report;

pub use family::{default_family, TiltingFamily};
pub use report::{
    assemble_tilting, auto_twist, check_conditions, global_dimension, summand_count, summand_list, tilting_report,
    Condition1, Condition2, SummandDescriptor, TiltingReport,
};
