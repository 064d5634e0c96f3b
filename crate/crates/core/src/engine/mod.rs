//! The dimension recursion for `L_P`.
//!
//! * A point `P` with denominator `D` counts `1` exactly when `D | t`.
//! * A lower-dimensional `P` is carried onto a full-dimensional polytope in
//!   its own lattice, at the cost of a dilation `s'`.
//! * A full-dimensional `P` is translated into general position and split
//!   into pyramids over its faces, see [`pyramid_decomposition`].
//! * A pyramid is summed slice by slice over its base, see
//!   [`pyramid_ehrhart`].

mod counter;
mod decomposition;
mod mcmullen;
mod volume;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub use counter::{
    counter_by_name, BruteForceCounter, CounterRegistry, EngineCounter, LatticeCounter,
};
pub use decomposition::{pyramid_decomposition, DecompositionTerm, TermKind};
pub use mcmullen::{mcmullen_check, mcmullen_report, McMullenReport};
pub use volume::exact_volume;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::geom::{hyperplane_normalize, i_indices, lattice_normalize, Polytope};
use crate::quasipoly::{DiscreteSummation, GBasisSummation, QuasiPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    pub ambient_dim: usize,
    pub dim: usize,
    /// `L_P`.
    pub qp: QuasiPolynomial,
    /// `L_{P°}`, from reciprocity.
    pub interior_qp: QuasiPolynomial,
    /// `s_0, ..., s_dim`.
    pub i_indices: Vec<u64>,
    /// Euclidean volume, full-dimensional polytopes only.
    pub volume: Option<Rational>,
}

/// Runs the recursion with a chosen summation strategy. The memo table only
/// lives for one top-level call.
pub struct Engine {
    summation: Box<dyn DiscreteSummation>,
    memo: HashMap<Polytope, QuasiPolynomial>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::with_summation(Box::new(GBasisSummation))
    }
}

impl Engine {
    pub fn with_summation(summation: Box<dyn DiscreteSummation>) -> Self {
        Self {
            summation,
            memo: HashMap::new(),
        }
    }

    pub fn summation(&self) -> &dyn DiscreteSummation {
        self.summation.as_ref()
    }

    /// `L_P`.
    pub fn quasi_polynomial(&mut self, p: &Polytope) -> Result<QuasiPolynomial> {
        self.memo.clear();
        self.ehrhart_qp(p)
    }

    /// `L_P` together with the reciprocal, the i-indices and the volume.
    pub fn compute(&mut self, p: &Polytope) -> Result<EhrhartResult> {
        let qp = self.quasi_polynomial(p)?;
        let dim = p.dim();
        let volume = if p.is_full_dimensional() {
            Some(exact_volume(p)?)
        } else {
            None
        };
        Ok(EhrhartResult {
            ambient_dim: p.ambient_dim(),
            dim,
            interior_qp: reciprocal(&qp, dim),
            qp,
            i_indices: i_indices(p),
            volume,
        })
    }

    /// `L_Pyr` for a full-dimensional pyramid with apex at the origin.
    pub fn pyramid(&mut self, pyr: &Polytope) -> Result<QuasiPolynomial> {
        self.memo.clear();
        self.pyramid_qp(pyr)
    }

    fn ehrhart_qp(&mut self, p: &Polytope) -> Result<QuasiPolynomial> {
        if let Some(qp) = self.memo.get(p) {
            return Ok(qp.clone());
        }
        let qp = if p.dim() == 0 {
            QuasiPolynomial::indicator(to_u64(&p.denominator())?, 0)
        } else if !p.is_full_dimensional() {
            let (norm, reduced) = lattice_normalize(p)?;
            self.ehrhart_qp(&reduced)?.compose_div(norm.s_prime)
        } else {
            let (_, terms) = pyramid_decomposition(p)?;
            let mut total = QuasiPolynomial::zero();
            for term in terms {
                let part = match term.kind {
                    TermKind::Face => self.ehrhart_qp(&term.polytope)?,
                    TermKind::Pyramid => self.cone_qp(&term.polytope)?,
                };
                total = if term.sign > 0 {
                    &total + &part
                } else {
                    &total - &part
                };
            }
            total
        };
        self.memo.insert(p.clone(), qp.clone());
        Ok(qp)
    }

    /// `conv{0, F}` for a face `F` in general position. Below full dimension
    /// the hull passes through the origin, so the lattice normalization is a
    /// linear unimodular change of coordinates onto a full pyramid.
    fn cone_qp(&mut self, cone: &Polytope) -> Result<QuasiPolynomial> {
        if cone.is_full_dimensional() {
            return self.pyramid_qp(cone);
        }
        let (norm, reduced) = lattice_normalize(cone)?;
        if norm.s_prime != 1 || norm.origin.iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidPyramid(
                "hull of a face cone misses the lattice origin".into(),
            ));
        }
        self.pyramid_qp(&reduced)
    }

    fn pyramid_qp(&mut self, pyr: &Polytope) -> Result<QuasiPolynomial> {
        if let Some(qp) = self.memo.get(pyr) {
            return Ok(qp.clone());
        }
        let h = hyperplane_normalize(pyr)?;
        let base = self.ehrhart_qp(&h.base)?;
        let qp = self.summation.sum(&base, to_i64(&h.a)?, to_i64(&h.b)?)?;
        self.memo.insert(pyr.clone(), qp.clone());
        Ok(qp)
    }
}

fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("{x} does not fit in 64 bits")))
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::InvalidArgument(format!("{x} does not fit in 64 bits")))
}

fn reciprocal(qp: &QuasiPolynomial, dim: usize) -> QuasiPolynomial {
    let r = qp.reflect();
    if dim.is_multiple_of(2) {
        r
    } else {
        -&r
    }
}

/// Full result with the default summation strategy.
pub fn ehrhart(p: &Polytope) -> Result<EhrhartResult> {
    Engine::default().compute(p)
}

/// `L_Pyr` for `Pyr = conv{0, Q}`, full-dimensional, with `aff(Q)` missing
/// the origin.
pub fn pyramid_ehrhart(pyr: &Polytope) -> Result<QuasiPolynomial> {
    Engine::default().pyramid(pyr)
}

/// `L_{P°}(t) = (-1)^{dim P} L_P(-t)`.
pub fn interior_ehrhart(p: &Polytope) -> Result<QuasiPolynomial> {
    let qp = Engine::default().quasi_polynomial(p)?;
    Ok(reciprocal(&qp, p.dim()))
}
