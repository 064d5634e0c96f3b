use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// `t (t-1) ... (t-d+1)`; the empty product when `d == 0`.
pub fn falling_factorial(t: &Rational, d: u32) -> Rational {
    (0..d).fold(Rational::one(), |acc, k| {
        acc * (t - Rational::from_integer(BigInt::from(k)))
    })
}

/// `sum_{i=0}^{t} i^(d falling)`, evaluated in closed form as
/// `(t+1)^(d+1 falling) / (d+1)`.
pub fn sum_falling_factorial(t: u64, d: u32) -> Rational {
    let top = Rational::from_integer(BigInt::from(t) + 1);
    falling_factorial(&top, d + 1) / Rational::from_integer(BigInt::from(d + 1))
}
