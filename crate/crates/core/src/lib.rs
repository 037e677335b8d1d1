pub mod cli;
pub mod coeffs;
pub mod combinatorics;
pub mod crystal;
pub mod error;
pub mod qmatrix;
pub mod straighten;
pub mod uqaction;
pub mod verify;

pub use error::{Error, Result};
