use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::chart::AffineChart;
use super::facets::supporting_hyperplanes;
use crate::arith::{denominator_lcm, rank, Rational, RationalMatrix, RationalVector};
use crate::error::{Error, Result};

/// A rational polytope in V-representation.
///
/// The vertex list is irredundant and sorted lexicographically, so two
/// polytopes with the same vertex set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RationalVector>,
}

impl Polytope {
    /// The convex hull of `points`, reduced to its vertices.
    pub fn from_points(ambient_dim: usize, points: Vec<RationalVector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for p in &points {
            if p.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: p.len(),
                });
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let chart = AffineChart::of_points(ambient_dim, &points);
        let vertices = if chart.dim() == 0 {
            points
        } else {
            let projected: Vec<RationalVector> = points.iter().map(|p| chart.project(p)).collect();
            let hyperplanes = supporting_hyperplanes(chart.dim(), &projected);
            points
                .into_iter()
                .enumerate()
                .filter(|(i, _)| {
                    let normals: Vec<Vec<Rational>> = hyperplanes
                        .iter()
                        .filter(|h| h.incident.contains(i))
                        .map(|h| {
                            h.normal
                                .iter()
                                .map(|x| Rational::from_integer(x.clone()))
                                .collect()
                        })
                        .collect();
                    !normals.is_empty()
                        && rank(&RationalMatrix::from_rows(chart.dim(), &normals)) == chart.dim()
                })
                .map(|(_, p)| p)
                .collect()
        };
        Ok(Polytope {
            ambient_dim,
            vertices,
        })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_fractions(ambient_dim: usize, points: &[Vec<(i64, i64)>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(n, d)| {
                        if d == 0 {
                            Err(Error::InvalidArgument("zero denominator".into()))
                        } else {
                            Ok(Rational::new(BigInt::from(n), BigInt::from(d)))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_points(ambient_dim, pts)
    }

    /// Integer points, given as `i64` coordinates.
    pub fn from_integer_points(ambient_dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&x| Rational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        Self::from_points(ambient_dim, pts)
    }

    /// `conv{0, e_1, ..., e_d}`.
    pub fn standard_simplex(d: usize) -> Self {
        let mut pts = vec![vec![Rational::zero(); d]];
        for i in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            pts.push(e);
        }
        Self::from_points(d, pts).expect("simplex is well formed")
    }

    /// `[0,1]^d`.
    pub fn unit_cube(d: usize) -> Self {
        let pts = (0..1u64 << d)
            .map(|mask| {
                (0..d)
                    .map(|i| Rational::from_integer(BigInt::from((mask >> i) & 1)))
                    .collect()
            })
            .collect();
        Self::from_points(d, pts).expect("cube is well formed")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        AffineChart::of_points(self.ambient_dim, &self.vertices).dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub(crate) fn require_full_dimensional(&self) -> Result<()> {
        let dim = self.dim();
        if dim != self.ambient_dim {
            return Err(Error::NotFullDimensional {
                dim,
                ambient: self.ambient_dim,
            });
        }
        Ok(())
    }

    /// Smallest positive integer `D` with `D·P` integral.
    pub fn denominator(&self) -> BigInt {
        denominator_lcm(self.vertices.iter().flatten())
    }

    pub fn is_integral(&self) -> bool {
        self.denominator().is_one()
    }

    pub fn dilate(&self, factor: &Rational) -> Self {
        let mut vertices: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * factor).collect())
            .collect();
        if factor.is_zero() {
            vertices.truncate(1);
        } else if factor < &Rational::zero() {
            vertices.sort();
        }
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices,
        }
    }

    pub fn translate(&self, shift: &[BigInt]) -> Self {
        assert_eq!(shift.len(), self.ambient_dim, "shift dimension mismatch");
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .zip(shift)
                    .map(|(x, s)| x + Rational::from_integer(s.clone()))
                    .collect()
            })
            .collect();
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices,
        }
    }

    /// `conv{0, P}`.
    pub fn cone_with_origin(&self) -> Self {
        let mut pts = self.vertices.clone();
        pts.push(vec![Rational::zero(); self.ambient_dim]);
        Self::from_points(self.ambient_dim, pts).expect("nonempty")
    }

    /// Sub-polytope spanned by the vertices at `indices`.
    pub fn sub_polytope(&self, indices: &[usize]) -> Self {
        let pts = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        Self::from_points(self.ambient_dim, pts).expect("nonempty face")
    }

    /// Whether `x` lies in the affine hull.
    pub fn affine_hull_contains(&self, x: &[Rational]) -> bool {
        AffineChart::of_points(self.ambient_dim, &self.vertices).contains(x)
    }
}
