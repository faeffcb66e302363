//! Command implementations and the on-disk structure format for the `whq`
//! binary.  Everything is exposed as a library so the integration tests can
//! drive the commands without spawning processes.

pub mod commands;
pub mod format;
pub mod genspec;

pub use commands::{
    cmd_derive, cmd_equivalence, cmd_fundamental, cmd_gen, cmd_validate, CmdResult, ReportFormat,
};
pub use format::{ModuleFile, StructureFile};
