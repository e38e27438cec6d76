//! Classification of plane curve singularities by Newton–Puiseux expansion
//! and branch contact trees, with a catalog of the singular-point types found
//! on reducible sextics.

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod curve;
pub mod diagram;
pub mod puiseux;

mod error;
pub use error::Error;
