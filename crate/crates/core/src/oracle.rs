//! Brute-force lattice point counts of dilates, closed or relatively open.
//!
//! This is the trust anchor for everything else: it walks every integer point
//! of the bounding box of `tP` and tests membership exactly. It shares only
//! the facet enumeration with the engine, nothing else.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{Rational, RationalVector};
use crate::error::{Error, Result};
use crate::geom::{supporting_hyperplanes, AffineChart, Polytope};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV_VAR: &str = "EHRHART_ORACLE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Closed,
    RelativeInterior,
}

#[derive(Clone, Debug)]
pub struct CountRequest<'a> {
    pub polytope: &'a Polytope,
    pub dilate: u64,
    pub mode: CountMode,
}

/// An integer inequality `<a, x_J> · scale ≤ t · rhs` on chart coordinates.
struct Inequality {
    coeffs: Vec<i128>,
    rhs: i128,
}

/// An integer equation `<a, x> = t · rhs` on ambient coordinates.
struct Equation {
    coeffs: Vec<i128>,
    rhs_num: i128,
    rhs_den: i128,
}

fn small(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .ok_or_else(|| Error::InvalidArgument(format!("coordinate {x} too large for enumeration")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

/// Membership data for a polytope, reusable across dilates.
struct Prepared {
    n: usize,
    coords: Vec<usize>,
    equations: Vec<Equation>,
    inequalities: Vec<Inequality>,
}

impl Prepared {
    fn new(p: &Polytope) -> Result<Self> {
        let n = p.ambient_dim();
        let chart = AffineChart::of_points(n, p.vertices());
        let a = chart.annihilator();
        let mut equations = Vec::new();
        for r in 0..a.rows() {
            let row = a.row(r);
            let rhs: Rational = row
                .iter()
                .zip(chart.base())
                .map(|(ai, xi)| xi * Rational::from_integer(ai.clone()))
                .sum();
            equations.push(Equation {
                coeffs: row.iter().map(small).collect::<Result<_>>()?,
                rhs_num: small(rhs.numer())?,
                rhs_den: small(rhs.denom())?,
            });
        }
        let projected: Vec<RationalVector> =
            p.vertices().iter().map(|v| chart.project(v)).collect();
        let mut inequalities = Vec::new();
        for h in supporting_hyperplanes(chart.dim(), &projected) {
            // <c, x> ≤ p/q  ⇔  q <c, x> ≤ p
            let q = small(h.offset.denom())?;
            inequalities.push(Inequality {
                coeffs: h
                    .normal
                    .iter()
                    .map(|c| small(c).map(|c| c * q))
                    .collect::<Result<_>>()?,
                rhs: small(h.offset.numer())?,
            });
        }
        Ok(Prepared {
            n,
            coords: chart.coords().to_vec(),
            equations,
            inequalities,
        })
    }

    fn contains(&self, z: &[i128], t: i128, mode: CountMode) -> bool {
        for e in &self.equations {
            let lhs: i128 = e.coeffs.iter().zip(z).map(|(a, x)| a * x).sum();
            if lhs * e.rhs_den != t * e.rhs_num {
                return false;
            }
        }
        for ineq in &self.inequalities {
            let lhs: i128 = ineq
                .coeffs
                .iter()
                .zip(&self.coords)
                .map(|(a, &c)| a * z[c])
                .sum();
            let rhs = t * ineq.rhs;
            let ok = match mode {
                CountMode::Closed => lhs <= rhs,
                CountMode::RelativeInterior => lhs < rhs,
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

impl Oracle {
    pub fn with_cap(cap: u64) -> Self {
        Oracle { cap }
    }

    /// Reads the cap from `EHRHART_ORACLE_CAP`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .ok()
                .filter(|&c: &u64| c > 0)
                .map(Oracle::with_cap)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "{CAP_ENV_VAR} must be a positive integer, got `{v}`"
                    ))
                }),
            Err(_) => Ok(Oracle::default()),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Integer bounding box of `tP`.
    fn bounding_box(p: &Polytope, t: u64) -> Vec<(BigInt, BigInt)> {
        let t = Rational::from_integer(BigInt::from(t));
        (0..p.ambient_dim())
            .map(|i| {
                let coords = p.vertices().iter().map(|v| &v[i] * &t);
                let lo = coords.clone().min().unwrap().floor().to_integer();
                let hi = coords.max().unwrap().ceil().to_integer();
                (lo, hi)
            })
            .collect()
    }

    /// Number of candidate points the enumeration of `tP` would visit.
    pub fn box_size(p: &Polytope, t: u64) -> BigInt {
        Self::bounding_box(p, t)
            .iter()
            .fold(BigInt::from(1), |acc, (lo, hi)| acc * (hi - lo + 1))
    }

    /// Largest `t ≤ t_max` whose enumeration stays within the cap, if any.
    pub fn max_dilate(&self, p: &Polytope, t_max: u64) -> Option<u64> {
        let cap = BigInt::from(self.cap);
        if Self::box_size(p, 0) > cap {
            return None;
        }
        let (mut lo, mut hi) = (0u64, t_max);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if Self::box_size(p, mid) <= cap {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Some(lo)
    }

    pub fn count(&self, req: &CountRequest<'_>) -> Result<u64> {
        let prepared = Prepared::new(req.polytope)?;
        self.count_prepared(&prepared, req.polytope, req.dilate, req.mode)
    }

    fn count_prepared(
        &self,
        prep: &Prepared,
        p: &Polytope,
        t: u64,
        mode: CountMode,
    ) -> Result<u64> {
        let size = Self::box_size(p, t);
        if size > BigInt::from(self.cap) {
            return Err(Error::EnumerationCapExceeded {
                candidates: size.to_string(),
                cap: self.cap,
            });
        }
        let bounds = Self::bounding_box(p, t)
            .iter()
            .map(|(lo, hi)| Ok((small(lo)?, small(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = prep.n;
        let mut z: Vec<i128> = bounds.iter().map(|b| b.0).collect();
        let mut count = 0u64;
        let t = t as i128;
        loop {
            if prep.contains(&z, t, mode) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(count);
                }
                z[i] += 1;
                if z[i] <= bounds[i].1 {
                    break;
                }
                z[i] = bounds[i].0;
                i += 1;
            }
        }
    }

    /// Counts for `t = 0..=t_max`, preparing the membership data once.
    pub fn count_range(&self, p: &Polytope, t_max: u64, mode: CountMode) -> Result<Vec<u64>> {
        let prep = Prepared::new(p)?;
        (0..=t_max)
            .map(|t| self.count_prepared(&prep, p, t, mode))
            .collect()
    }

    pub fn closed(&self, p: &Polytope, t: u64) -> Result<u64> {
        self.count(&CountRequest {
            polytope: p,
            dilate: t,
            mode: CountMode::Closed,
        })
    }

    pub fn interior(&self, p: &Polytope, t: u64) -> Result<u64> {
        self.count(&CountRequest {
            polytope: p,
            dilate: t,
            mode: CountMode::RelativeInterior,
        })
    }

    /// Closed count minus relative-interior count.
    pub fn boundary_count(&self, p: &Polytope, t: u64) -> Result<u64> {
        Ok(self.closed(p, t)? - self.interior(p, t)?)
    }
}

/// Closed count with the default cap.
pub fn count(req: &CountRequest<'_>) -> Result<u64> {
    Oracle::default().count(req)
}

pub fn boundary_count(p: &Polytope, t: u64) -> Result<u64> {
    Oracle::default().boundary_count(p, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(p: &Polytope, t: u64) -> u64 {
        Oracle::default().closed(p, t).unwrap()
    }

    fn interior(p: &Polytope, t: u64) -> u64 {
        Oracle::default().interior(p, t).unwrap()
    }

    #[test]
    fn simplex_two() {
        let d2 = Polytope::standard_simplex(2);
        assert_eq!(closed(&d2, 2), 6);
        assert_eq!(interior(&d2, 3), 1);
        assert_eq!(closed(&d2, 0), 1);
    }

    #[test]
    fn segment_boundary() {
        let d1 = Polytope::standard_simplex(1);
        assert_eq!(boundary_count(&d1, 5).unwrap(), 2);
    }

    #[test]
    fn square_counts() {
        let sq = Polytope::unit_cube(2);
        assert_eq!(closed(&sq, 2), 9);
        assert_eq!(interior(&sq, 2), 1);
        assert_eq!(boundary_count(&sq, 2).unwrap(), 8);
    }

    #[test]
    fn rational_point() {
        let pt = Polytope::from_fractions(2, &[vec![(1, 2), (1, 2)]]).unwrap();
        for t in 0..8 {
            let expected = u64::from(t % 2 == 0);
            assert_eq!(closed(&pt, t), expected);
            assert_eq!(interior(&pt, t), expected);
            assert_eq!(boundary_count(&pt, t).unwrap(), 0);
        }
    }

    #[test]
    fn lower_dimensional_relative_interior() {
        // diagonal segment from (0,0,0) to (2,2,2): 2t+1 points, 2t-1 inside
        let seg = Polytope::from_integer_points(3, &[vec![0, 0, 0], vec![2, 2, 2]]).unwrap();
        for t in 1..5 {
            assert_eq!(closed(&seg, t), 2 * t + 1);
            assert_eq!(interior(&seg, t), 2 * t - 1);
        }
        // triangle x + y + z = 1 in R^3: interior of tΔ is C(t-1, 2)
        let tri = Polytope::from_integer_points(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
            .unwrap();
        assert_eq!(closed(&tri, 3), 10);
        assert_eq!(interior(&tri, 3), 1);
    }

    #[test]
    fn monotone_for_integral_polytopes() {
        let p = Polytope::from_integer_points(2, &[vec![0, 0], vec![3, 1], vec![1, 2]]).unwrap();
        let counts = Oracle::default()
            .count_range(&p, 8, CountMode::Closed)
            .unwrap();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Polytope::unit_cube(3);
        let err = Oracle::with_cap(1000).closed(&big, 20).unwrap_err();
        assert!(matches!(err, Error::EnumerationCapExceeded { .. }));
    }

    #[test]
    fn max_dilate_respects_cap() {
        let cube = Polytope::unit_cube(3);
        // (t+1)^3 ≤ 1000 up to t = 9.
        assert_eq!(Oracle::with_cap(1000).max_dilate(&cube, 50), Some(9));
        assert_eq!(Oracle::with_cap(1000).max_dilate(&cube, 4), Some(4));
        let far = Polytope::from_integer_points(1, &[vec![5], vec![7]]).unwrap();
        assert_eq!(Oracle::with_cap(1).max_dilate(&far, 3), Some(0));
    }
}
