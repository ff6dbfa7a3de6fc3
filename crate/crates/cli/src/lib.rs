//! Command-line front end: expression parsing, rendering and the subcommands.

pub mod app;
pub mod commands;
pub mod error;
pub mod expr;
pub mod json;

pub use error::{CliError, ParseError};
