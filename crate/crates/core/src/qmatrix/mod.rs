//! The quantized coordinate ring of `n × n` matrices.

mod minor;
mod ncpoly;
mod normalize;

pub use minor::{minus_q_power, permutation_length, permutations, qdet, qminor};
pub use ncpoly::{Generator, Monomial, NCPoly};
pub use normalize::Strategy;
