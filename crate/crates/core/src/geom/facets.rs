use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Polytope;
use crate::arith::{kernel_basis, Rational, RationalMatrix, RationalVector};
use crate::error::Result;

/// A facet `{x ∈ P : <normal, x> = offset}` with `<normal, x> ≤ offset` on P.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    /// Primitive integer normal (content 1).
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    /// Indices into the polytope's vertex list, ascending.
    pub incident_vertices: Vec<usize>,
}

impl Facet {
    /// `<normal, x> - offset`: negative inside, zero on the hyperplane.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x) - &self.offset
    }
}

pub(crate) fn dot(a: &[BigInt], x: &[Rational]) -> Rational {
    a.iter().zip(x).fold(Rational::zero(), |acc, (ai, xi)| {
        acc + xi * Rational::from_integer(ai.clone())
    })
}

pub(crate) struct Hyperplane {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    pub incident: Vec<usize>,
}

/// All supporting hyperplanes of `conv(points)` spanned by its points, for a
/// point set whose affine hull is all of `R^dim`. Brute force over
/// `dim`-subsets; adequate for a few dozen points in low dimension.
pub(crate) fn supporting_hyperplanes(dim: usize, points: &[RationalVector]) -> Vec<Hyperplane> {
    let mut found: Vec<Hyperplane> = Vec::new();
    if dim == 0 {
        return found;
    }
    for subset in (0..points.len()).combinations(dim) {
        if found
            .iter()
            .any(|h| subset.iter().all(|i| h.incident.binary_search(i).is_ok()))
        {
            continue;
        }
        let p0 = &points[subset[0]];
        let diffs: Vec<RationalVector> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let kernel = kernel_basis(&RationalMatrix::from_rows(dim, &diffs));
        if kernel.len() != 1 {
            continue;
        }
        let mut normal = kernel.into_iter().next().unwrap();
        let mut offset = dot(&normal, p0);
        let slacks: Vec<Rational> = points.iter().map(|p| dot(&normal, p) - &offset).collect();
        let above = slacks.iter().any(Signed::is_positive);
        let below = slacks.iter().any(Signed::is_negative);
        if above && below {
            continue;
        }
        if above {
            normal.iter_mut().for_each(|x| *x = -x.clone());
            offset = -offset;
        }
        let incident = slacks
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| i)
            .collect();
        found.push(Hyperplane {
            normal,
            offset,
            incident,
        });
    }
    found.sort_by(|a, b| a.incident.cmp(&b.incident));
    found
}

/// Facets of a full-dimensional polytope.
pub fn facets(p: &Polytope) -> Result<Vec<Facet>> {
    p.require_full_dimensional()?;
    Ok(supporting_hyperplanes(p.ambient_dim(), p.vertices())
        .into_iter()
        .map(|h| Facet {
            normal: h.normal,
            offset: h.offset,
            incident_vertices: h.incident,
        })
        .collect())
}
