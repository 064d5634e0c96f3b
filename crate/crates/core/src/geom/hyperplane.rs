use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::chart::AffineChart;
use super::facets::dot;
use super::Polytope;
use crate::arith::{
    hermite_normal_form, inverse_unimodular, IntegerMatrix, Rational, RationalVector,
};
use crate::error::{Error, Result};

/// A pyramid `conv{0, Q}` brought into the position where `Q` lies in
/// `{x_d = a/b}`, plus the base rescaled into `{x_d = 1}`.
#[derive(Clone, Debug)]
pub struct HyperplaneNormalization {
    /// Unimodular, with last row equal to `normal`.
    pub unimodular: IntegerMatrix,
    /// Primitive normal `c` with `<c, q> = a/b > 0` on `Q`.
    pub normal: Vec<BigInt>,
    pub a: BigInt,
    pub b: BigInt,
    /// `Q̄ = (b/a) · U(Q)`.
    pub base: Polytope,
}

/// Completes a primitive vector to a unimodular matrix having it as last row.
fn complete_to_unimodular(c: &[BigInt]) -> IntegerMatrix {
    let d = c.len();
    let column = IntegerMatrix::from_vec(d, 1, c.to_vec());
    // V c = e_1, so c is the first column of V⁻¹.
    let (_, v) = hermite_normal_form(&column);
    let w = inverse_unimodular(&v).transpose();
    let mut rows = w.to_rows();
    rows.rotate_left(1);
    IntegerMatrix::from_rows(d, &rows)
}

/// Normalizes a full-dimensional pyramid with apex at the origin. The base
/// `Q` is the set of non-origin vertices; its affine hull must be a
/// hyperplane missing the origin.
pub fn hyperplane_normalize(pyr: &Polytope) -> Result<HyperplaneNormalization> {
    pyr.require_full_dimensional()?;
    let d = pyr.ambient_dim();
    let origin = vec![Rational::zero(); d];
    if !pyr.vertices().contains(&origin) {
        return Err(Error::InvalidPyramid("origin is not a vertex".into()));
    }
    let base: Vec<RationalVector> = pyr
        .vertices()
        .iter()
        .filter(|v| **v != origin)
        .cloned()
        .collect();
    let chart = AffineChart::of_points(d, &base);
    if chart.dim() + 1 != d {
        return Err(Error::InvalidPyramid(format!(
            "base has dimension {} in R^{d}",
            chart.dim()
        )));
    }
    let mut normal = chart.annihilator().row(0).to_vec();
    let mut height = dot(&normal, &base[0]);
    if height.is_zero() {
        return Err(Error::InvalidPyramid(
            "affine hull of the base contains the origin".into(),
        ));
    }
    if height.is_negative() {
        normal.iter_mut().for_each(|x| *x = -x.clone());
        height = -height;
    }
    let unimodular = complete_to_unimodular(&normal);
    let u = unimodular.to_rational();
    let scale = height.recip();
    let rescaled: Vec<RationalVector> = base
        .iter()
        .map(|q| u.mul_vec(q).into_iter().map(|x| x * &scale).collect())
        .collect();
    Ok(HyperplaneNormalization {
        unimodular,
        normal,
        a: height.numer().clone(),
        b: height.denom().clone(),
        base: Polytope::from_points(d, rescaled)?,
    })
}
