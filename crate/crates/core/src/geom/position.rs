use num_bigint::BigInt;
use num_traits::Signed;

use super::chart::AffineChart;
use super::faces::face_lattice;
use super::facets::facets;
use super::Polytope;
use crate::arith::{Rational, RationalVector};
use crate::error::Result;

/// Integer vectors of max-norm exactly `r` in `n` coordinates, lexicographic.
fn shell(n: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut cur = vec![-r; n];
    let mut done = false;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let out = cur.clone();
        let mut i = n;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if cur[i] < r {
                cur[i] += 1;
                for c in &mut cur[i + 1..] {
                    *c = -r;
                }
                break;
            }
        }
        if out.iter().any(|x| x.abs() == r) || r == 0 {
            return Some(out);
        }
    })
}

/// Translates a full-dimensional polytope by an integer vector so that the
/// origin lies outside it and off the affine hull of every proper face.
///
/// Candidates are scanned by increasing max-norm, lexicographically within a
/// shell, so the result is deterministic.
pub fn general_position_translate(p: &Polytope) -> Result<(Polytope, Vec<BigInt>)> {
    let fs = facets(p)?;
    let d = p.ambient_dim();
    let hulls: Vec<(Vec<Vec<Rational>>, Vec<Rational>)> = face_lattice(p)?
        .into_iter()
        .filter(|f| f.dim < d)
        .map(|f| {
            let pts: Vec<RationalVector> = f
                .vertex_indices
                .iter()
                .map(|&i| p.vertices()[i].clone())
                .collect();
            let chart = AffineChart::of_points(d, &pts);
            let a = chart.annihilator().to_rational();
            let rhs = a.mul_vec(chart.base());
            (a.to_rows(), rhs)
        })
        .collect();
    for r in 0.. {
        for v in shell(d, r) {
            // Origin of P + v corresponds to -v relative to P.
            let x: RationalVector = v
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(-c)))
                .collect();
            let outside = fs.iter().any(|f| f.slack(&x).is_positive());
            if !outside {
                continue;
            }
            let on_some_hull = hulls.iter().any(|(rows, rhs)| {
                rows.iter().zip(rhs).all(|(row, b)| {
                    let lhs: Rational = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
                    &lhs == b
                })
            });
            if !on_some_hull {
                let shift: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
                return Ok((p.translate(&shift), shift));
            }
        }
    }
    unreachable!("the excluded set is a finite union of proper affine subspaces")
}
