//! Command-line front end for the `ytab` library.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, CliError};
