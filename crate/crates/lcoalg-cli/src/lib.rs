//! The `lcoalg` command line: the `.lcoalg` language, built-in fixtures and
//! the JSON report.

pub mod builtin;
pub mod commands;
pub mod dsl;
pub mod report;

pub use commands::{run, Cli, Command, Outcome};
pub use dsl::{parse_lcoalg, Diagnostic, Document};
