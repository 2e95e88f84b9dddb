//! Shuffle algebra, regularization, Möbius symmetries and high-precision
//! evaluation of multiple polylogarithms attached to a finite singular set.

pub mod algebra;
pub mod error;
pub mod literal;
pub mod lyndon;
pub mod numeric;
pub mod reg;
pub mod relations;
pub mod symmetry;

pub use algebra::{Letter, Point, Word, WordPoly};
pub use error::{Error, Result};
pub use numeric::{BigComplex, Estimate, PrecisionContext};
pub use symmetry::{MobiusMap, SigmaConfig};
