use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use super::poly;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// A function `Z → Q` of the form `c_0(t) + c_1(t) t + ... + c_D(t) t^D` with
/// periodic coefficients, stored as one coefficient row per residue class.
///
/// Values are kept canonical: the period is the smallest one shared by all
/// coefficients and the degree bound is the true degree (0 for the zero
/// function). Structural equality is therefore functional equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiPolynomial {
    period: u64,
    /// `rows[j][i]` is the coefficient of `t^i` for `t ≡ j (mod period)`.
    rows: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    /// Builds from per-residue ascending coefficient rows. Rows may have
    /// different lengths; `rows.len()` is the period.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument(
                "quasi-polynomial needs period ≥ 1".into(),
            ));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    fn from_rows_unchecked(mut rows: Vec<Vec<Rational>>) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
        for row in &mut rows {
            row.resize(width, Rational::zero());
        }
        let mut qp = QuasiPolynomial {
            period: rows.len() as u64,
            rows,
        };
        qp.canonicalize();
        qp
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_rows_unchecked(vec![vec![c]])
    }

    /// An ordinary polynomial, coefficients ascending.
    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        Self::from_rows_unchecked(vec![coeffs])
    }

    /// `χ_{s,j}`: 1 on `t ≡ j (mod s)`, 0 elsewhere.
    pub fn indicator(s: u64, j: u64) -> Self {
        assert!(s >= 1, "indicator period must be positive");
        let rows = (0..s)
            .map(|r| {
                if r == j % s {
                    vec![Rational::one()]
                } else {
                    vec![Rational::zero()]
                }
            })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    fn canonicalize(&mut self) {
        let mut width = self.rows[0].len();
        while width > 1 && self.rows.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for row in &mut self.rows {
            row.truncate(width);
        }
        let p = self.period;
        for q in (1..=p).filter(|q| p.is_multiple_of(*q)) {
            if (0..p as usize).all(|r| self.rows[r] == self.rows[r % q as usize]) {
                self.rows.truncate(q as usize);
                self.period = q;
                break;
            }
        }
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Degree bound `D`; the true degree unless the function is zero.
    pub fn degree(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.period == 1 && self.rows[0].len() == 1 && self.rows[0][0].is_zero()
    }

    /// Ascending coefficients for `t ≡ residue (mod period)`.
    pub fn row(&self, residue: u64) -> &[Rational] {
        &self.rows[(residue % self.period) as usize]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `c_i(j)` for `j = 0..period`; zero when `i` exceeds the degree.
    pub fn coefficient(&self, i: usize) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    fn residue_of(&self, t: &BigInt) -> u64 {
        t.mod_floor(&BigInt::from(self.period))
            .to_u64()
            .expect("residue fits in u64")
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.eval_big(&BigInt::from(t))
    }

    /// Evaluation at any integer, negative ones included, using the
    /// nonnegative residue of `t`.
    pub fn eval_big(&self, t: &BigInt) -> Rational {
        let row = &self.rows[self.residue_of(t) as usize];
        poly::eval(row, &Rational::from_integer(t.clone()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let p = self.period.lcm(&other.period);
        let width = self.degree().max(other.degree()) + 1;
        let zero = Rational::zero();
        let rows = (0..p)
            .map(|r| {
                let (a, b) = (self.row(r), other.row(r));
                (0..width)
                    .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
                    .collect()
            })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c * r).collect())
            .collect();
        Self::from_rows_unchecked(rows)
    }

    /// `t ↦ f(t / s)` when `s | t`, and 0 otherwise.
    pub fn compose_div(&self, s: u64) -> Self {
        assert!(s >= 1, "dilation factor must be positive");
        let p = self.period * s;
        let width = self.degree() + 1;
        let s_rat = Rational::from_integer(BigInt::from(s));
        let rows = (0..p)
            .map(|r| {
                if r % s != 0 {
                    return vec![Rational::zero(); width];
                }
                // t = s·u with u ≡ r/s (mod period); f(t/s) has coefficients c_i / s^i.
                let mut scale = Rational::one();
                self.row(r / s)
                    .iter()
                    .map(|c| {
                        let out = c * &scale;
                        scale /= &s_rat;
                        out
                    })
                    .collect()
            })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    /// `t ↦ f(-t)`.
    pub fn reflect(&self) -> Self {
        let p = self.period;
        let rows = (0..p)
            .map(|r| {
                self.row((p - r) % p)
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                    .collect()
            })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    /// Smallest divisor `q` of the period such that `c_i` is `q`-periodic.
    pub fn minimal_period(&self, i: usize) -> u64 {
        let c = self.coefficient(i);
        let p = self.period;
        (1..=p)
            .filter(|q| p.is_multiple_of(*q))
            .find(|&q| (0..p as usize).all(|r| c[r] == c[r % q as usize]))
            .unwrap_or(p)
    }
}

impl Add for &QuasiPolynomial {
    type Output = QuasiPolynomial;
    fn add(self, rhs: Self) -> QuasiPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QuasiPolynomial {
    type Output = QuasiPolynomial;
    fn sub(self, rhs: Self) -> QuasiPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &QuasiPolynomial {
    type Output = QuasiPolynomial;
    fn neg(self) -> QuasiPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &QuasiPolynomial {
    type Output = QuasiPolynomial;
    fn mul(self, rhs: &Rational) -> QuasiPolynomial {
        self.scale(rhs)
    }
}

impl std::iter::Sum for QuasiPolynomial {
    fn sum<I: Iterator<Item = QuasiPolynomial>>(iter: I) -> Self {
        iter.fold(QuasiPolynomial::zero(), |acc, x| &acc + &x)
    }
}
