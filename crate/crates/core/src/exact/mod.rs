//! Exact scalars, matrices and binary forms.

pub mod binary;
pub mod matrix;
pub mod quadratic;
pub mod rational;

pub use binary::{binary_gcd, resultant, BinaryForm};
pub use matrix::MatQ;
pub use quadratic::QuadNum;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
