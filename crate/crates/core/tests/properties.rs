mod common;

use ehrhart_core::arith::{rat, Rational};
use ehrhart_core::engine::{ehrhart, interior_ehrhart, Engine};
use ehrhart_core::geom::Polytope;
use ehrhart_core::io::{
    parse_polytope, qp_from_json, qp_to_json, render_polytope_text, result_to_json,
};
use ehrhart_core::oracle::Oracle;
use ehrhart_core::quasipoly::{
    discrete_sum, parse_quasi_polynomial, DiscreteSummation, InterpolationSummation,
    QuasiPolynomial,
};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn arb_qp() -> impl Strategy<Value = QuasiPolynomial> {
    (1usize..=6, 0usize..=4).prop_flat_map(|(p, d)| {
        prop::collection::vec(prop::collection::vec(arb_rational(), d + 1), p)
            .prop_map(|rows| QuasiPolynomial::new(rows).unwrap())
    })
}

fn arb_polygon() -> impl Strategy<Value = Polytope> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), 2), 1..=5).prop_map(|pts| {
        let pts: Vec<Vec<(i64, i64)>> = pts.into_iter().map(|v| v.into_iter().collect()).collect();
        Polytope::from_fractions(2, &pts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(f in arb_qp()) {
        prop_assert_eq!(parse_quasi_polynomial(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn machine_round_trip(f in arb_qp()) {
        prop_assert_eq!(qp_from_json(&qp_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn reflect_is_an_involution(f in arb_qp()) {
        prop_assert_eq!(f.reflect().reflect(), f.clone());
        for t in -10i64..=10 {
            prop_assert_eq!(f.reflect().eval(t), f.eval(-t));
        }
    }

    #[test]
    fn discrete_sum_matches_loop(f in arb_qp(), a in 1i64..=5, b in 1i64..=5) {
        let sum = discrete_sum(&f, a, b).unwrap();
        for t in 0i64..=12 {
            let direct: Rational = (0..=(a * t).div_euclid(b)).map(|i| f.eval(i)).sum();
            prop_assert_eq!(sum.eval(t), direct, "t = {}", t);
        }
    }

    #[test]
    fn summation_strategies_agree(f in arb_qp(), a in 1i64..=4, b in 1i64..=4) {
        prop_assert_eq!(
            discrete_sum(&f, a, b).unwrap(),
            InterpolationSummation.sum(&f, a, b).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polygons_match_oracle(p in arb_polygon()) {
        let r = ehrhart(&p).unwrap();
        let oracle = Oracle::default();
        let lcm: u64 = p.denominator().try_into().unwrap();
        for t in 0..=2 * lcm {
            prop_assert_eq!(r.qp.eval(t as i64), rat(oracle.closed(&p, t).unwrap() as i64, 1), "t = {}", t);
        }
        for t in 1..=lcm {
            let open = oracle.interior(&p, t).unwrap() as i64;
            let boundary = oracle.boundary_count(&p, t).unwrap() as i64;
            prop_assert_eq!(r.interior_qp.eval(t as i64), rat(open, 1));
            prop_assert_eq!(r.interior_qp.eval(t as i64) + rat(boundary, 1), r.qp.eval(t as i64));
        }
    }

    #[test]
    fn polytope_text_round_trip(p in arb_polygon()) {
        prop_assert_eq!(parse_polytope(&render_polytope_text(&p)).unwrap(), p);
    }
}

#[test]
fn repeated_runs_serialize_identically() {
    for (name, p) in common::corpus() {
        let a = result_to_json(&ehrhart(&p).unwrap());
        let b = result_to_json(
            &Engine::with_summation(Box::new(InterpolationSummation))
                .compute(&p)
                .unwrap(),
        );
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn interior_of_triangle_at_three() {
    let tri = Polytope::standard_simplex(2);
    assert_eq!(interior_ehrhart(&tri).unwrap().eval(3), rat(1, 1));
}
