//! JSON formats and the command-line front end for `gpatoms-core`.

pub mod cli;
pub mod error;
pub mod input;
pub mod report;
pub mod run;

pub use cli::{parse_args, Caps, Command, Mode, OutputFormat, Parsed, RunConfig};
pub use error::CliError;
pub use run::{render, run, run_on, Outcome};
