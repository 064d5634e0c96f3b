//! The basis `g_{d,s,j}(t) = χ_{s,j}(t) · ((t - j)/s)^(d falling)` of
//! quasi-polynomials of period `s`, and its closed-form discrete sums.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{poly, QuasiPolynomial};
use crate::arith::{falling_factorial, Rational};
use crate::error::{Error, Result};

/// `coefficient · g_{d,s,j}`. On `t = m·s + j` the basis element equals
/// `m^(d falling)`; off that residue class it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasisTerm {
    pub d: u32,
    pub s: u64,
    pub j: u64,
    pub coefficient: Rational,
}

impl GBasisTerm {
    pub fn new(d: u32, s: u64, j: u64, coefficient: Rational) -> Self {
        assert!(s >= 1 && j < s, "g-basis term needs 0 <= j < s");
        GBasisTerm {
            d,
            s,
            j,
            coefficient,
        }
    }

    /// The unit basis element `g_{d,s,j}`.
    pub fn unit(d: u32, s: u64, j: u64) -> Self {
        Self::new(d, s, j, Rational::one())
    }

    pub fn eval(&self, t: i64) -> Rational {
        let s = self.s as i64;
        if (t - self.j as i64).rem_euclid(s) != 0 {
            return Rational::zero();
        }
        let m = (t - self.j as i64) / s;
        &self.coefficient * falling_factorial(&Rational::from_integer(BigInt::from(m)), self.d)
    }

    pub fn to_quasi_polynomial(&self) -> QuasiPolynomial {
        // At t ≡ j: ((t - j)/s)^(d falling) expanded as a polynomial in t.
        let mut falling = vec![Rational::zero(); self.d as usize + 1];
        falling[self.d as usize] = self.coefficient.clone();
        let in_m = poly::falling_to_monomial(&falling);
        let s = Rational::from_integer(BigInt::from(self.s));
        let beta = -Rational::from_integer(BigInt::from(self.j)) / &s;
        let in_t = poly::substitute_affine(&in_m, &s.recip(), &beta);
        let rows = (0..self.s)
            .map(|r| {
                if r == self.j {
                    in_t.clone()
                } else {
                    vec![Rational::zero()]
                }
            })
            .collect();
        QuasiPolynomial::new(rows).expect("period is positive")
    }
}

/// Expands `f` in the `g_{d,s,j}` basis with `s = period(f)`. Only nonzero
/// terms are returned, ordered by residue and then degree.
pub fn to_g_basis(f: &QuasiPolynomial) -> Vec<GBasisTerm> {
    let s = f.period();
    let width = f.degree() + 1;
    let s_int = BigInt::from(s);
    let mut terms = Vec::new();
    for j in 0..s {
        let row = f.row(j);
        // h(m) = f(m s + j), sampled at m = 0..=D.
        let values: Vec<Rational> = (0..width)
            .map(|m| {
                let t = BigInt::from(m) * &s_int + BigInt::from(j);
                poly::eval(row, &Rational::from_integer(t))
            })
            .collect();
        for (d, c) in poly::newton_coefficients(&values).into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(GBasisTerm::new(d as u32, s, j, c));
            }
        }
    }
    terms
}

/// Reduces `a/b` to lowest terms, rejecting nonpositive inputs.
pub(crate) fn reduce_ratio(a: i64, b: i64) -> Result<(u64, u64)> {
    if a <= 0 || b <= 0 {
        return Err(Error::InvalidArgument(format!(
            "summation bound ratio needs a, b > 0 (got a = {a}, b = {b})"
        )));
    }
    let g = a.gcd(&b);
    Ok(((a / g) as u64, (b / g) as u64))
}

/// `sum_{i=0}^{⌊a t / b⌋} term(i)` as a quasi-polynomial.
///
/// Uses the closed form `(1/(d+1)) (⌊(⌊at/b⌋ - j)/s⌋ + 1)^(d+1 falling)`,
/// which is polynomial in `m` along each progression `t = m S + k` with
/// `S = s b / gcd(s, a)`; each residue row is recovered by exact
/// interpolation through `d + 2` samples.
pub fn g_discrete_sum(term: &GBasisTerm, a: i64, b: i64) -> Result<QuasiPolynomial> {
    let (a, b) = reduce_ratio(a, b)?;
    let big_s = term.s * b / term.s.gcd(&a);
    let scale = &term.coefficient / Rational::from_integer(BigInt::from(term.d + 1));
    let closed_form = |t: u64| -> Rational {
        let x = BigInt::from(a) * BigInt::from(t) / BigInt::from(b);
        let y = (x - BigInt::from(term.j)).div_floor(&BigInt::from(term.s));
        &scale * falling_factorial(&Rational::from_integer(y + 1), term.d + 1)
    };
    let period = Rational::from_integer(BigInt::from(big_s));
    let rows = (0..big_s)
        .map(|k| {
            let samples: Vec<Rational> = (0..=term.d as u64 + 1)
                .map(|m| closed_form(m * big_s + k))
                .collect();
            let in_m = poly::interpolate_naturals(&samples);
            let beta = -Rational::from_integer(BigInt::from(k)) / &period;
            poly::substitute_affine(&in_m, &period.recip(), &beta)
        })
        .collect();
    QuasiPolynomial::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn loop_sum(term: &GBasisTerm, a: i64, b: i64, t: i64) -> Rational {
        (0..=a * t / b).map(|i| term.eval(i)).sum()
    }

    #[test]
    fn half_even_identity_is_single_term() {
        let f = QuasiPolynomial::new(vec![vec![rat(0, 1), rat(1, 2)], vec![rat(0, 1)]]).unwrap();
        assert_eq!(to_g_basis(&f), vec![GBasisTerm::unit(1, 2, 0)]);
        assert_eq!(GBasisTerm::unit(1, 2, 0).to_quasi_polynomial(), f);
    }

    #[test]
    fn constant_one_is_g000() {
        assert_eq!(
            to_g_basis(&QuasiPolynomial::one()),
            vec![GBasisTerm::unit(0, 1, 0)]
        );
    }

    #[test]
    fn four_case_closed_form() {
        let g = g_discrete_sum(&GBasisTerm::unit(1, 2, 0), 3, 2).unwrap();
        let expected = QuasiPolynomial::new(vec![
            vec![rat(0, 1), rat(3, 8), rat(9, 32)],
            vec![rat(-3, 32), rat(-3, 16), rat(9, 32)],
            vec![rat(-1, 8), rat(0, 1), rat(9, 32)],
            vec![rat(-3, 32), rat(3, 16), rat(9, 32)],
        ])
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn counting_sum_is_t_plus_one() {
        let g = g_discrete_sum(&GBasisTerm::unit(0, 1, 0), 1, 1).unwrap();
        assert_eq!(g, QuasiPolynomial::polynomial(vec![rat(1, 1), rat(1, 1)]));
    }

    #[test]
    fn rejects_nonpositive_ratio() {
        assert!(g_discrete_sum(&GBasisTerm::unit(0, 1, 0), 0, 1).is_err());
        assert!(g_discrete_sum(&GBasisTerm::unit(0, 1, 0), 1, -2).is_err());
    }

    #[test]
    fn closed_form_matches_loop_and_period_bound() {
        for s in 1..=4u64 {
            for j in 0..s {
                for d in 0..=3u32 {
                    for (a, b) in [(1, 1), (1, 2), (2, 3), (3, 2), (5, 4), (4, 6)] {
                        let term = GBasisTerm::new(d, s, j, rat(3, 5));
                        let g = g_discrete_sum(&term, a, b).unwrap();
                        let (ra, rb) = reduce_ratio(a, b).unwrap();
                        let big_s = s * rb / s.gcd(&ra);
                        assert_eq!(big_s % g.period(), 0);
                        assert_eq!(g.minimal_period(g.degree()), 1);
                        assert_eq!(g.degree(), d as usize + 1);
                        for t in 0..=(3 * big_s as i64) {
                            assert_eq!(
                                g.eval(t),
                                loop_sum(&term, a, b, t),
                                "{term:?} a={a} b={b} t={t}"
                            );
                        }
                    }
                }
            }
        }
    }
}
