//! Lattice normalization of a polytope's affine hull, and i-indices.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use super::chart::AffineChart;
use super::faces::relative_face_lattice;
use super::Polytope;
use crate::arith::{
    denominator_lcm, hermite_normal_form, integer_kernel_basis, solve_integer_affine,
    IntegerMatrix, Rational, RationalVector,
};
use crate::error::{Error, Result};

/// An affine map `x ↦ L (x - z0)` carrying `aff(s'P) ∩ Zⁿ` bijectively onto
/// `Z^k`, `k = dim P`, together with its inverse `w ↦ z0 + B w`.
///
/// `L` and `B` are integer and `L B = I`; the columns of `B` form a basis of
/// the lattice of integer directions of the hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNormalization {
    pub s_prime: u64,
    /// An integer point of `aff(s'P)`.
    pub origin: Vec<BigInt>,
    /// `n × k` lattice basis.
    pub basis: IntegerMatrix,
    /// `k × n` integer left inverse of `basis`.
    pub linear: IntegerMatrix,
    pub target_dim: usize,
}

impl LatticeNormalization {
    pub fn apply(&self, x: &[Rational]) -> RationalVector {
        let shifted: RationalVector = x
            .iter()
            .zip(&self.origin)
            .map(|(xi, o)| xi - Rational::from_integer(o.clone()))
            .collect();
        self.linear.to_rational().mul_vec(&shifted)
    }

    pub fn apply_inverse(&self, w: &[Rational]) -> RationalVector {
        self.basis
            .to_rational()
            .mul_vec(w)
            .into_iter()
            .zip(&self.origin)
            .map(|(x, o)| x + Rational::from_integer(o.clone()))
            .collect()
    }
}

/// Smallest `s ≥ 1` such that `aff(s · conv(points))` contains an integer
/// point, with one such point.
fn min_lattice_dilation(chart: &AffineChart) -> (u64, Vec<BigInt>) {
    let a = chart.annihilator();
    let c: RationalVector = a.to_rational().mul_vec(chart.base());
    let step = denominator_lcm(&c);
    let bound = denominator_lcm(chart.base());
    let mut s = step.clone();
    loop {
        let rhs: Vec<BigInt> = c
            .iter()
            .map(|ci| (ci * Rational::from_integer(s.clone())).to_integer())
            .collect();
        if let Some(z) = solve_integer_affine(a, &rhs) {
            return (s.to_u64().expect("dilation factor fits in u64"), z);
        }
        debug_assert!(s < bound, "s = lcm of base denominators always works");
        s += &step;
    }
}

/// Smallest `s ≥ 1` with `aff(sF) ∩ Zⁿ ≠ ∅` for the polytope spanned by `points`.
pub fn affine_hull_index(ambient_dim: usize, points: &[RationalVector]) -> u64 {
    min_lattice_dilation(&AffineChart::of_points(ambient_dim, points)).0
}

/// Finds the minimal `s'`, the normalizing map, and `P'' = T(s'P)`, which is
/// full-dimensional in `R^{dim P}`.
pub fn lattice_normalize(p: &Polytope) -> Result<(LatticeNormalization, Polytope)> {
    let n = p.ambient_dim();
    let chart = AffineChart::of_points(n, p.vertices());
    let k = chart.dim();
    let (s_prime, origin) = min_lattice_dilation(&chart);
    let kernel = integer_kernel_basis(chart.annihilator());
    debug_assert_eq!(kernel.len(), k);
    let basis = IntegerMatrix::from_rows(n, &kernel).transpose();
    let (h, u) = hermite_normal_form(&basis);
    // B spans a saturated lattice, so its HNF is [I; 0].
    debug_assert!((0..k).all(|r| (0..k).all(|c| h[(r, c)]
        == if r == c {
            BigInt::one()
        } else {
            BigInt::zero()
        })));
    let linear = IntegerMatrix::from_rows(n, &u.to_rows()[..k]);
    let norm = LatticeNormalization {
        s_prime,
        origin,
        basis,
        linear,
        target_dim: k,
    };
    let s = Rational::from_integer(BigInt::from(s_prime));
    let image: Vec<RationalVector> = p
        .vertices()
        .iter()
        .map(|v| {
            let scaled: RationalVector = v.iter().map(|x| x * &s).collect();
            norm.apply(&scaled)
        })
        .collect();
    let reduced = Polytope::from_points(k, image)?;
    Ok((norm, reduced))
}

/// The i-index: lcm over the i-dimensional faces F of P (P itself when
/// `i = dim P`) of the least `s` with `aff(sF) ∩ Zⁿ ≠ ∅`.
pub fn i_index(p: &Polytope, i: usize) -> Result<u64> {
    let d = p.dim();
    if i > d {
        return Err(Error::InvalidArgument(format!(
            "i = {i} exceeds dim P = {d}"
        )));
    }
    Ok(i_indices(p)[i])
}

/// `[s_0, ..., s_d]`.
pub fn i_indices(p: &Polytope) -> Vec<u64> {
    let faces = relative_face_lattice(p);
    let d = p.dim();
    let mut out = vec![1u64; d + 1];
    for f in faces {
        let pts: Vec<RationalVector> = f
            .vertex_indices
            .iter()
            .map(|&v| p.vertices()[v].clone())
            .collect();
        let s = affine_hull_index(p.ambient_dim(), &pts);
        out[f.dim] = out[f.dim].lcm(&s);
    }
    out
}
