//! Dense univariate polynomials over the rationals, coefficients ascending.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;

pub(crate) fn eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Coefficients in the falling-factorial basis `m^(k falling)` of the
/// polynomial taking `values[m]` at `m = 0, 1, ...`: entry `k` is the k-th
/// forward difference at 0 divided by `k!`.
pub(crate) fn newton_coefficients(values: &[Rational]) -> Vec<Rational> {
    let mut diffs = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    let mut factorial = Rational::one();
    for k in 0..values.len() {
        if k > 0 {
            factorial *= Rational::from_integer(BigInt::from(k));
        }
        out.push(&diffs[0] / &factorial);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    out
}

/// Converts falling-factorial coefficients to monomial coefficients.
pub(crate) fn falling_to_monomial(falling: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); falling.len().max(1)];
    // basis holds the monomial coefficients of m^(k falling)
    let mut basis = vec![Rational::one()];
    for (k, c) in falling.iter().enumerate() {
        if k > 0 {
            // multiply basis by (m - (k-1))
            let shift = Rational::from_integer(BigInt::from(k - 1));
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &shift;
            }
            basis = next;
        }
        if !c.is_zero() {
            for (i, b) in basis.iter().enumerate() {
                out[i] += b * c;
            }
        }
    }
    out
}

/// Monomial coefficients of the unique polynomial of degree `< values.len()`
/// through `(m, values[m])`.
pub(crate) fn interpolate_naturals(values: &[Rational]) -> Vec<Rational> {
    falling_to_monomial(&newton_coefficients(values))
}

/// Coefficients of `x ↦ p(alpha·x + beta)`.
pub(crate) fn substitute_affine(
    p: &[Rational],
    alpha: &Rational,
    beta: &Rational,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len().max(1)];
    // power holds (alpha x + beta)^k
    let mut power = vec![Rational::one()];
    for c in p {
        if !c.is_zero() {
            for (i, q) in power.iter().enumerate() {
                out[i] += q * c;
            }
        }
        let mut next = vec![Rational::zero(); power.len() + 1];
        for (i, q) in power.iter().enumerate() {
            next[i + 1] += q * alpha;
            next[i] += q * beta;
        }
        power = next;
    }
    out
}
