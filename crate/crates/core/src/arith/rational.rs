use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;
pub type RationalVector = Vec<Rational>;

/// Shorthand for `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an exact literal `p` or `p/q` (optional sign on `p`).
///
/// No floating point is involved; `1.5` is rejected.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::InvalidArgument(format!("`{token}`: {msg}"));
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (token.trim(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scales a nonzero rational vector to the unique integer vector on the same
/// ray with content 1. Returns `None` for the zero vector.
pub fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let l = denominator_lcm(v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|r| (r * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x)).abs();
    Some(ints.into_iter().map(|x| x / &g).collect())
}
