//! File formats, reports and the command-line driver for `recfan-core`.

pub mod format;
pub mod run;

pub use run::{run, Command, Outcome, RunConfig, DEFAULT_MAX_DIM};
