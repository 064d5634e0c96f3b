#![allow(dead_code)]

use ehrhart_core::arith::{rat, Rational};
use ehrhart_core::geom::Polytope;
use ehrhart_core::quasipoly::QuasiPolynomial;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(n: usize, pts: &[&[(i64, i64)]]) -> Polytope {
    let rows: Vec<Vec<(i64, i64)>> = pts.iter().map(|p| p.to_vec()).collect();
    Polytope::from_fractions(n, &rows).unwrap()
}

fn int(n: usize, pts: &[&[i64]]) -> Polytope {
    let rows: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
    Polytope::from_integer_points(n, &rows).unwrap()
}

/// Rational polytopes of dimension 0 to 3 with vertex denominators at most 4.
pub fn corpus() -> Vec<(&'static str, Polytope)> {
    const H: i64 = 2;
    const T: i64 = 3;
    const Q: i64 = 4;
    vec![
        // dimension 0
        ("point 1/2", poly(1, &[&[(1, H)]])),
        ("point (1/3, 2/3)", poly(2, &[&[(1, T), (2, T)]])),
        (
            "point (1/4, 1/2, 3/4)",
            poly(3, &[&[(1, Q), (1, H), (3, Q)]]),
        ),
        ("integer point", int(2, &[&[3, -1]])),
        ("point (-1/2, 1/3)", poly(2, &[&[(-1, H), (1, T)]])),
        // dimension 1
        ("segment [0, 1/2]", poly(1, &[&[(0, 1)], &[(1, H)]])),
        ("segment [-1/3, 3/4]", poly(1, &[&[(-1, T)], &[(3, Q)]])),
        (
            "antidiagonal at 1/2",
            poly(2, &[&[(0, 1), (1, H)], &[(1, H), (0, 1)]]),
        ),
        (
            "segment (1/3,1/3)-(1,2/3)",
            poly(2, &[&[(1, T), (1, T)], &[(1, 1), (2, T)]]),
        ),
        (
            "segment in R^3",
            poly(3, &[&[(0, 1), (0, 1), (1, H)], &[(1, Q), (1, 1), (1, H)]]),
        ),
        ("integer segment (0,0)-(2,1)", int(2, &[&[0, 0], &[2, 1]])),
        // dimension 2
        ("standard triangle", Polytope::standard_simplex(2)),
        ("unit square", Polytope::unit_cube(2)),
        (
            "triangle (1/2, 1/3)",
            poly(
                2,
                &[&[(0, 1), (0, 1)], &[(1, H), (0, 1)], &[(0, 1), (1, T)]],
            ),
        ),
        (
            "rectangle [0,1/2]x[0,1/3]",
            poly(
                2,
                &[
                    &[(0, 1), (0, 1)],
                    &[(1, H), (0, 1)],
                    &[(0, 1), (1, T)],
                    &[(1, H), (1, T)],
                ],
            ),
        ),
        (
            "skew triangle",
            poly(
                2,
                &[&[(1, Q), (1, Q)], &[(3, Q), (0, 1)], &[(1, H), (1, 1)]],
            ),
        ),
        (
            "quadrilateral",
            poly(
                2,
                &[
                    &[(0, 1), (0, 1)],
                    &[(3, H), (0, 1)],
                    &[(1, 1), (1, 1)],
                    &[(0, 1), (1, H)],
                ],
            ),
        ),
        (
            "pentagon",
            poly(
                2,
                &[
                    &[(0, 1), (0, 1)],
                    &[(1, 1), (0, 1)],
                    &[(3, H), (1, H)],
                    &[(1, 1), (3, H)],
                    &[(-1, H), (1, 1)],
                ],
            ),
        ),
        (
            "triangle around origin",
            poly(
                2,
                &[&[(-1, H), (-1, H)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]],
            ),
        ),
        (
            "raised segment pyramid",
            poly(
                2,
                &[&[(0, 1), (0, 1)], &[(0, 1), (1, H)], &[(1, 1), (1, H)]],
            ),
        ),
        (
            "lattice triangle (0,0),(3,1),(1,2)",
            int(2, &[&[0, 0], &[3, 1], &[1, 2]]),
        ),
        (
            "triangle on 2x+3y-z=1/3",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (-1, T)],
                    &[(1, H), (0, 1), (2, T)],
                    &[(0, 1), (1, 1), (8, T)],
                ],
            ),
        ),
        (
            "square at height 1/2",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (1, H)],
                    &[(1, 1), (0, 1), (1, H)],
                    &[(0, 1), (1, 1), (1, H)],
                    &[(1, 1), (1, 1), (1, H)],
                ],
            ),
        ),
        // dimension 3
        ("standard tetrahedron", Polytope::standard_simplex(3)),
        ("unit cube", Polytope::unit_cube(3)),
        (
            "corner (1/2, 1/3, 1/4)",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (0, 1)],
                    &[(1, H), (0, 1), (0, 1)],
                    &[(0, 1), (1, T), (0, 1)],
                    &[(0, 1), (0, 1), (1, Q)],
                ],
            ),
        ),
        (
            "half octahedron",
            poly(
                3,
                &[
                    &[(1, H), (0, 1), (0, 1)],
                    &[(-1, H), (0, 1), (0, 1)],
                    &[(0, 1), (1, H), (0, 1)],
                    &[(0, 1), (-1, H), (0, 1)],
                    &[(0, 1), (0, 1), (1, H)],
                    &[(0, 1), (0, 1), (-1, H)],
                ],
            ),
        ),
        (
            "square pyramid, apex (1/2,1/2,1/2)",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (0, 1)],
                    &[(1, 1), (0, 1), (0, 1)],
                    &[(0, 1), (1, 1), (0, 1)],
                    &[(1, 1), (1, 1), (0, 1)],
                    &[(1, H), (1, H), (1, H)],
                ],
            ),
        ),
        (
            "box [0,1/2]x[0,1]x[0,1/3]",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (0, 1)],
                    &[(1, H), (0, 1), (0, 1)],
                    &[(0, 1), (1, 1), (0, 1)],
                    &[(1, H), (1, 1), (0, 1)],
                    &[(0, 1), (0, 1), (1, T)],
                    &[(1, H), (0, 1), (1, T)],
                    &[(0, 1), (1, 1), (1, T)],
                    &[(1, H), (1, 1), (1, T)],
                ],
            ),
        ),
        (
            "rational tetrahedron",
            poly(
                3,
                &[
                    &[(1, T), (0, 1), (0, 1)],
                    &[(1, 1), (1, H), (0, 1)],
                    &[(0, 1), (1, 1), (1, T)],
                    &[(1, H), (1, H), (1, 1)],
                ],
            ),
        ),
        (
            "Reeve tetrahedron r = 2",
            int(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]),
        ),
        (
            "rational Reeve tetrahedron",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (0, 1)],
                    &[(1, 1), (0, 1), (0, 1)],
                    &[(0, 1), (1, 1), (0, 1)],
                    &[(1, 1), (1, 1), (1, H)],
                ],
            ),
        ),
        (
            "triangular prism",
            poly(
                3,
                &[
                    &[(0, 1), (0, 1), (0, 1)],
                    &[(1, 1), (0, 1), (0, 1)],
                    &[(0, 1), (1, 1), (0, 1)],
                    &[(0, 1), (0, 1), (3, Q)],
                    &[(1, 1), (0, 1), (3, Q)],
                    &[(0, 1), (1, 1), (3, Q)],
                ],
            ),
        ),
    ]
}

/// Full-dimensional simplices in R^4 with coordinates in `{0, 1/2, 1, 3/2}`.
pub fn random_simplices4(seed: u64, count: usize) -> Vec<Polytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let pts: Vec<Vec<(i64, i64)>> = (0..5)
            .map(|_| (0..4).map(|_| (rng.gen_range(0..=3), 2)).collect())
            .collect();
        let p = Polytope::from_fractions(4, &pts).unwrap();
        if p.is_full_dimensional() && p.vertices().len() == 5 {
            out.push(p);
        }
    }
    out
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// Period at most 6, degree at most 4.
pub fn random_qp(rng: &mut impl Rng) -> QuasiPolynomial {
    let period = rng.gen_range(1..=6);
    let degree = rng.gen_range(0..=4);
    let rows = (0..period)
        .map(|_| (0..=degree).map(|_| random_rational(rng)).collect())
        .collect();
    QuasiPolynomial::new(rows).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
