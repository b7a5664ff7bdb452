//! Command-line front end for the toughness toolkit: single-graph analysis,
//! corpus scans with JSON reports, and a self-test.

pub mod analysis;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod selftest;

pub use analysis::{evaluate, revalidate, Check, Counterexample, EvalConfig, Filter, ScanRecord};
pub use commands::{run, Cli, EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK};
pub use error::CliError;
pub use report::{run_scan, ScanOptions, ScanReport};
