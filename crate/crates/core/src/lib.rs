//! Finite residuated lattices: validation, structure extraction, chain codes,
//! constructions, exact counting and a brute-force model finder.

pub mod algebra;
pub mod census;
pub mod chains;
pub mod cli;
pub mod constructions;
pub mod counting;
pub mod dot;
pub mod error;
pub mod oracle;

pub use algebra::{Embedding, FinAlgebra, Order};
pub use error::{Error, Result};
