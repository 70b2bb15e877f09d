//! Exact computation with separated graphs and their Leavitt path algebras.

pub mod catalog;
pub mod coeff;
pub mod construct;
pub mod crossed;
pub mod error;
pub mod expectation;
pub mod graph;
pub mod group;
pub mod leavitt;
pub mod sample;
pub mod selftest;

pub use coeff::{Coeff, Rational};
pub use error::{Error, Result};
