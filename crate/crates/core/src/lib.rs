//! Exact semi-invariants of quiver representation spaces.

pub mod cli;
pub mod error;
pub mod format;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod rational;
pub mod repthy;
pub mod spanning;

pub use error::{Error, Result};
