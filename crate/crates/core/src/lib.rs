//! Groebner cells of the punctual Hilbert scheme of points in the plane,
//! parametrized by canonical Hilbert-Burch matrices.

pub mod combinatorics;
pub mod decomposition;
pub mod error;
pub mod field;
pub mod hbmatrix;
pub mod localsb;
pub mod matrix;
pub mod output;
pub mod staircase;
pub mod symbolic;

pub use error::{Error, Result};
