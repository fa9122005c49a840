//! File formats, reports and parallel sweeps behind the `quadtour` binary.

pub mod commands;
pub mod error;
pub mod matrix;
pub mod report;
pub mod sweep;

pub use error::{CliError, CliResult};
pub use report::JsonReport;
