//! Valued McKay and Auslander-Reiten quivers of skew group algebras.

pub mod arquiver;
pub mod chartab;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod matgroup;
pub mod pipeline;
pub mod skewsolve;
pub mod smith;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
