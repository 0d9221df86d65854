//! File formats and subcommands of the `tropical` command-line tool.

pub mod commands;
pub mod formats;
