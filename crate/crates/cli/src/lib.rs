//! Command-line front end for `arrowdpr-core`: JSON matrix files,
//! randomized verification against dense oracles, and benchmarks.

pub mod bench;
pub mod compute;
pub mod counting;
pub mod error;
pub mod format;
pub mod random;
pub mod sentinel;
pub mod verify;

pub use error::CliError;
