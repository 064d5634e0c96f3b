//! Exact integer and rational arithmetic plus the integer-lattice linear
//! algebra the rest of the crate leans on.
//!
//! Everything here is exact. Scalars are arbitrary precision; nothing ever
//! touches a float.

mod falling;
mod hnf;
mod linalg;
mod matrix;
mod rational;

pub use falling::{falling_factorial, sum_falling_factorial};
pub use hnf::{
    hermite_normal_form, integer_kernel_basis, inverse_unimodular, solve_integer_affine,
};
pub use linalg::{determinant, kernel_basis, rank, rational_solve, rref};
pub use matrix::{IntegerMatrix, Matrix, RationalMatrix};
pub use rational::{
    denominator_lcm, parse_rational, primitive_integer_vector, rat, Integer, Rational,
    RationalVector,
};
