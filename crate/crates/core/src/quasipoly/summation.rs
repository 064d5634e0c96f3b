//! Discrete summation `F(t) = sum_{i=0}^{⌊a t / b⌋} f(i)` of quasi-polynomials.
//!
//! Two interchangeable strategies sit behind [`DiscreteSummation`]:
//!
//! * `g-basis` expands `f` in the `g_{d,s,j}` basis and sums each term in
//!   closed form. This is the default and the one the engine uses.
//! * `interpolation` samples the running sum directly and interpolates one
//!   polynomial per residue class. It shares no code with the first route
//!   beyond the polynomial helpers, so the two check each other.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

use super::gbasis::{g_discrete_sum, reduce_ratio, to_g_basis};
use super::{poly, QuasiPolynomial};
use crate::arith::Rational;
use crate::error::{Error, Result};

pub trait DiscreteSummation: Send + Sync {
    /// Registry key, e.g. `g-basis`.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// `t ↦ sum_{i=0}^{⌊a t / b⌋} f(i)` for `t ≥ 0`. `a/b` is reduced first;
    /// nonpositive `a` or `b` is an error.
    fn sum(&self, f: &QuasiPolynomial, a: i64, b: i64) -> Result<QuasiPolynomial>;
}

#[derive(Debug, Default, Clone, Copy)]
pub struct GBasisSummation;

impl DiscreteSummation for GBasisSummation {
    fn name(&self) -> &'static str {
        "g-basis"
    }

    fn description(&self) -> &'static str {
        "expand in the g_{d,s,j} basis and sum each term in closed form"
    }

    fn sum(&self, f: &QuasiPolynomial, a: i64, b: i64) -> Result<QuasiPolynomial> {
        reduce_ratio(a, b)?;
        let mut total = QuasiPolynomial::zero();
        for term in to_g_basis(f) {
            total = &total + &g_discrete_sum(&term, a, b)?;
        }
        Ok(total)
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct InterpolationSummation;

impl DiscreteSummation for InterpolationSummation {
    fn name(&self) -> &'static str {
        "interpolation"
    }

    fn description(&self) -> &'static str {
        "sample the running sum and interpolate one polynomial per residue"
    }

    fn sum(&self, f: &QuasiPolynomial, a: i64, b: i64) -> Result<QuasiPolynomial> {
        let (a, b) = reduce_ratio(a, b)?;
        let s = f.period();
        let big_s = s * b / s.gcd(&a);
        let samples = f.degree() as u64 + 2;
        let t_max = samples * big_s;
        let i_max = (a * t_max / b) as i64;
        let mut prefix = Vec::with_capacity(i_max as usize + 1);
        let mut acc = Rational::zero();
        for i in 0..=i_max {
            acc += f.eval(i);
            prefix.push(acc.clone());
        }
        let period = Rational::from_integer(BigInt::from(big_s));
        let rows = (0..big_s)
            .map(|k| {
                let values: Vec<Rational> = (0..samples)
                    .map(|m| prefix[(a * (m * big_s + k) / b) as usize].clone())
                    .collect();
                let in_m = poly::interpolate_naturals(&values);
                let beta = -Rational::from_integer(BigInt::from(k)) / &period;
                poly::substitute_affine(&in_m, &period.recip(), &beta)
            })
            .collect();
        QuasiPolynomial::new(rows)
    }
}

/// Name-keyed collection of summation strategies.
pub struct SummationRegistry {
    entries: Vec<Box<dyn DiscreteSummation>>,
}

impl SummationRegistry {
    pub fn empty() -> Self {
        SummationRegistry {
            entries: Vec::new(),
        }
    }

    /// Registers a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, strategy: Box<dyn DiscreteSummation>) {
        self.entries.retain(|s| s.name() != strategy.name());
        self.entries.push(strategy);
    }

    pub fn get(&self, name: &str) -> Result<&dyn DiscreteSummation> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn DiscreteSummation> {
        self.entries.iter().map(|b| b.as_ref())
    }
}

impl Default for SummationRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(GBasisSummation));
        r.register(Box::new(InterpolationSummation));
        r
    }
}

impl fmt::Debug for SummationRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// Looks up a built-in summation strategy by name.
pub fn summation_by_name(name: &str) -> Result<Box<dyn DiscreteSummation>> {
    match name {
        "g-basis" => Ok(Box::new(GBasisSummation)),
        "interpolation" => Ok(Box::new(InterpolationSummation)),
        _ => Err(Error::UnknownStrategy {
            name: name.to_string(),
            available: SummationRegistry::default().names().join(", "),
        }),
    }
}

/// `sum_{i=0}^{⌊a t / b⌋} f(i)` through the g-basis route.
pub fn discrete_sum(f: &QuasiPolynomial, a: i64, b: i64) -> Result<QuasiPolynomial> {
    GBasisSummation.sum(f, a, b)
}

/// For `t > 0`, returns `(p(-t), -sum_{i=-t+1}^{-1} f(i))` where `p` is the
/// quasi-polynomial of `sum_{i=0}^{t} f(i)`. The two agree.
pub fn negative_sum_check(f: &QuasiPolynomial, t: i64) -> Result<(Rational, Rational)> {
    if t <= 0 {
        return Err(Error::InvalidArgument(format!(
            "negative_sum_check needs t > 0, got {t}"
        )));
    }
    let p = discrete_sum(f, 1, 1)?;
    let direct: Rational = -(-t + 1..=-1).map(|i| f.eval(i)).sum::<Rational>();
    Ok((p.eval(-t), direct))
}
