//! Coordinates on the affine hull of a point set.

use crate::arith::{kernel_basis, rref, IntegerMatrix, Rational, RationalMatrix, RationalVector};

/// The affine hull of a point set: a base point, integer equations
/// `A x = A base` cutting it out, and a set of coordinates whose projection
/// is injective on it.
#[derive(Clone, Debug)]
pub(crate) struct AffineChart {
    base: RationalVector,
    coords: Vec<usize>,
    annihilator: IntegerMatrix,
}

impl AffineChart {
    pub fn of_points(ambient_dim: usize, points: &[RationalVector]) -> Self {
        let base = points[0].clone();
        let directions: Vec<RationalVector> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        let m = RationalMatrix::from_rows(ambient_dim, &directions);
        let (_, coords) = rref(&m);
        let kernel = kernel_basis(&m);
        let annihilator = IntegerMatrix::from_rows(ambient_dim, &kernel);
        AffineChart {
            base,
            coords,
            annihilator,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Rows `a` with `<a, x> = <a, base>` on the hull; content 1 each.
    pub fn annihilator(&self) -> &IntegerMatrix {
        &self.annihilator
    }

    pub fn project(&self, x: &[Rational]) -> RationalVector {
        self.coords.iter().map(|&c| x[c].clone()).collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let a = self.annihilator.to_rational();
        a.mul_vec(x) == a.mul_vec(&self.base)
    }
}
