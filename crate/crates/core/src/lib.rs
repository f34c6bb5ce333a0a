//! Exact degrees of the CM, Chow and Hilbert determinant lines of a polarised
//! family over a smooth projective curve, computed from a finite intersection
//! profile and checked against each other.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod family;
pub mod lines;
pub mod verify;

pub use error::{Error, Result};
