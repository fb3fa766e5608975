//! Command-line front end: curve input, operators, checks and plots.

pub mod angle;
pub mod error;
pub mod io;
pub mod job;
pub mod report;
pub mod run;
pub mod source;
pub mod svg;

pub use error::{CliError, Result};
pub use job::{parse_job, Command, JobSpec};
pub use report::RunReport;
pub use run::run_job;
