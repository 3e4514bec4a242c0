//! File formats and report construction for the `momap` command line tool.
//!
//! The library half of the CLI crate exists so the format layer (JSON model
//! documents, polytope files, report serialization) is testable without
//! spawning the binary.

pub mod formats;
pub mod reports;
