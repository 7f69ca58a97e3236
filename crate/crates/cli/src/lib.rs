//! Documents and subcommands behind the `mvtop` binary.

pub mod commands;
pub mod doc;
pub mod error;
