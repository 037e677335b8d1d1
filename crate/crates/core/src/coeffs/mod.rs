//! Exact coefficient arithmetic in the indeterminate `q`.

mod parse;
mod poly;
mod rational;

pub use poly::Poly;
pub use rational::{
    is_laurent, is_polynomial_in_q, q_factorial, q_int, q_power, value_at_zero, RationalQ,
};
pub(crate) use rational::q_int_signed;
