//! File formats, generators and the command-line front end for `hylo-core`.

pub mod cli;
pub mod dot;
pub mod error;
pub mod format;
pub mod play;
pub mod spec;
pub mod verify;

pub use error::{HyloError, Result};
