//! Command line, JSON formats and verification suites for `bkrpp-core`.

pub mod cli;
pub mod json;
pub mod verify;
