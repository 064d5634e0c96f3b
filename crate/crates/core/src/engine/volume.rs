use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{determinant, Rational, RationalMatrix};
use crate::error::Result;
use crate::geom::{face_lattice, Face, Polytope};

/// Pulling triangulation of a face: cone from its smallest vertex over the
/// triangulations of the subfaces one dimension down that avoid it.
fn triangulate(
    idx: usize,
    faces: &[Face],
    memo: &mut HashMap<usize, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&idx) {
        return t.clone();
    }
    let face = &faces[idx];
    let apex = face.vertex_indices[0];
    let out = if face.dim == 0 {
        vec![vec![apex]]
    } else {
        let mut simplices = Vec::new();
        for (j, g) in faces.iter().enumerate() {
            if g.dim + 1 == face.dim
                && !g.vertex_indices.contains(&apex)
                && g.vertex_indices
                    .iter()
                    .all(|v| face.vertex_indices.contains(v))
            {
                for mut s in triangulate(j, faces, memo) {
                    s.push(apex);
                    simplices.push(s);
                }
            }
        }
        simplices
    };
    memo.insert(idx, out.clone());
    out
}

/// Exact volume of a full-dimensional polytope: `Σ |det| / d!` over a
/// pulling triangulation.
pub fn exact_volume(p: &Polytope) -> Result<Rational> {
    let faces = face_lattice(p)?;
    let d = p.ambient_dim();
    let top = faces.len() - 1;
    debug_assert_eq!(faces[top].dim, d);
    let mut memo = HashMap::new();
    let factorial: BigInt = (1..=d).map(BigInt::from).product();
    let mut total = Rational::zero();
    for simplex in triangulate(top, &faces, &mut memo) {
        let apex = &p.vertices()[simplex[d]];
        let rows: Vec<Vec<Rational>> = simplex[..d]
            .iter()
            .map(|&v| {
                p.vertices()[v]
                    .iter()
                    .zip(apex)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        total += determinant(&RationalMatrix::from_rows(d, &rows)).abs();
    }
    Ok(total / Rational::from_integer(factorial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::error::Error;

    #[test]
    fn simplex_volumes() {
        let mut fact = 1;
        for d in 1..=4 {
            fact *= d;
            assert_eq!(
                exact_volume(&Polytope::standard_simplex(d as usize)).unwrap(),
                rat(1, fact)
            );
        }
    }

    #[test]
    fn boxes() {
        assert_eq!(exact_volume(&Polytope::unit_cube(2)).unwrap(), rat(1, 1));
        assert_eq!(exact_volume(&Polytope::unit_cube(3)).unwrap(), rat(1, 1));
        let b = Polytope::from_fractions(
            2,
            &[
                vec![(0, 1), (0, 1)],
                vec![(1, 2), (0, 1)],
                vec![(0, 1), (1, 3)],
                vec![(1, 2), (1, 3)],
            ],
        )
        .unwrap();
        assert_eq!(exact_volume(&b).unwrap(), rat(1, 6));
    }

    #[test]
    fn octahedron() {
        let oct = Polytope::from_integer_points(
            3,
            &[
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
                vec![0, 0, 1],
                vec![0, 0, -1],
            ],
        )
        .unwrap();
        assert_eq!(exact_volume(&oct).unwrap(), rat(4, 3));
    }

    #[test]
    fn rejects_lower_dimensional() {
        let seg = Polytope::from_integer_points(2, &[vec![0, 0], vec![1, 0]]).unwrap();
        assert!(matches!(
            exact_volume(&seg),
            Err(Error::NotFullDimensional { .. })
        ));
    }
}
