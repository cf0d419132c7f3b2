//! Hyperplane restriction, generic rank, and rank strata of quadric pencils.

mod common;

use grplane_core::matrix::RatMatrix;
use grplane_core::parse::parse_poly;
use grplane_core::pencil::{
    pencil_generic_rank, rank_strata, restrict_to_hyperplane, QuadricPencil, StratumParam,
};
use grplane_core::plucker::plucker_ring;
use grplane_core::poly::{Poly, Ring};
use grplane_core::rat::{int, rat, Rat};
use grplane_core::rng::{random_invertible_matrix, rng_from_seed};
use num_traits::Zero;

fn zpoly(s: &str) -> Poly {
    parse_poly(s, &plucker_ring()).unwrap()
}

fn example2_pencil() -> QuadricPencil {
    QuadricPencil::restricted(
        &zpoly("Z1*Z4-Z2*Z3"),
        &zpoly("(Z1+Z4)^2-Z0*Z3"),
        &zpoly("Z5"),
    )
    .unwrap()
}

#[test]
fn restriction_ranks() {
    let m = restrict_to_hyperplane(&zpoly("Z1*Z4-Z2*Z3"), &zpoly("Z5")).unwrap();
    assert_eq!(m.rank(), 4);
    let m = restrict_to_hyperplane(&zpoly("(Z1+Z4)^2-Z0*Z3"), &zpoly("Z5")).unwrap();
    assert_eq!(m.rank(), 3);
    // a quadric that is a multiple of the hyperplane restricts to zero
    let m = restrict_to_hyperplane(&zpoly("Z5*(Z0+2*Z3)"), &zpoly("Z5")).unwrap();
    assert_eq!(m.rank(), 0);
    // restriction modulo a non-coordinate hyperplane
    let m = restrict_to_hyperplane(&zpoly("Z0^2"), &zpoly("Z0-Z1")).unwrap();
    assert_eq!(m.rank(), 1);
}

#[test]
fn example2_pencil_rank_and_determinant() {
    let p = example2_pencil();
    assert_eq!(p.size(), 5);
    let r = pencil_generic_rank(&p, 0).unwrap();
    assert_eq!(r.generic_rank, 4);
    assert!(r.det_identically_zero);
}

#[test]
fn example2_pencil_strata() {
    // hand analysis: the 4x4 minor gcd is proportional to lambda(lambda+4mu),
    // so the rank drops exactly at (0:1) and (-4:1), both to rank 3
    let p = example2_pencil();
    let strata = rank_strata(&p).unwrap();
    assert_eq!(strata.len(), 2);
    for s in &strata {
        assert_eq!(s.rank, 3);
    }
    let params: Vec<&StratumParam> = strata.iter().map(|s| &s.parameter).collect();
    assert!(params.contains(&&StratumParam::Point(int(0), int(1))));
    assert!(params.contains(&&StratumParam::Point(int(-4), int(1))));
}

#[test]
fn constant_pencil() {
    let q = zpoly("Z0*Z1-Z2^2");
    let p = QuadricPencil::from_quadrics(&q, &q).unwrap();
    let r = pencil_generic_rank(&p, 1).unwrap();
    assert_eq!(r.generic_rank, 3);
    // the only degenerate member is the zero matrix, which is not a stratum
    assert!(rank_strata(&p).unwrap().is_empty());
}

#[test]
fn diagonal_pencil_strata() {
    let diag = |entries: [i64; 5]| {
        let mut m = RatMatrix::zeros(5, 5);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, int(e));
        }
        m
    };
    let z = plucker_ring();
    let label = parse_poly("Z0", &z).unwrap();
    let p = QuadricPencil::new(
        diag([1, 1, 1, 1, 0]),
        diag([0, 1, 1, 1, 1]),
        label.clone(),
        label,
    )
    .unwrap();
    let r = pencil_generic_rank(&p, 2).unwrap();
    assert_eq!(r.generic_rank, 5);
    assert!(!r.det_identically_zero);
    let strata = rank_strata(&p).unwrap();
    // rank drops at (1:0), (0:1) and (1:-1)
    assert_eq!(strata.len(), 3);
    let find = |l: i64, m: i64| {
        strata
            .iter()
            .find(|s| s.parameter == StratumParam::Point(int(l), int(m)))
            .map(|s| s.rank)
    };
    assert_eq!(find(1, 0), Some(4));
    assert_eq!(find(0, 1), Some(4));
    assert_eq!(find(-1, 1), Some(2));
}

#[test]
fn irrational_strata_are_reported_by_minimal_polynomial() {
    // member [[l, m], [m, 2l]] + l*I3 has det (2l^2 - m^2) l^3: the rank
    // drops to 2 at (0:1) and to 4 at the irrational pair 2t^2 = 1
    let z = plucker_ring();
    let label = parse_poly("Z0", &z).unwrap();
    let mut m1 = RatMatrix::identity(5);
    m1.set(1, 1, int(2));
    let mut m2 = RatMatrix::zeros(5, 5);
    m2.set(0, 1, int(1));
    m2.set(1, 0, int(1));
    let p = QuadricPencil::new(m1, m2, label.clone(), label).unwrap();
    let r = pencil_generic_rank(&p, 3).unwrap();
    assert_eq!(r.generic_rank, 5);
    let strata = rank_strata(&p).unwrap();
    assert_eq!(strata.len(), 2);
    let mut saw_minpoly = false;
    for s in &strata {
        match &s.parameter {
            StratumParam::MinPoly(f) => {
                saw_minpoly = true;
                // monic form of 2t^2 - 1
                assert_eq!(f.coeffs(), &[rat(-1, 2), int(0), int(1)]);
                assert_eq!(s.rank, 4);
            }
            StratumParam::Point(l, m) => {
                assert_eq!((l.clone(), m.clone()), (int(0), int(1)));
                assert_eq!(s.rank, 2);
            }
        }
    }
    assert!(saw_minpoly);
}

#[test]
fn rank_is_congruence_invariant() {
    let p = example2_pencil();
    let mut rng = rng_from_seed(9);
    for _ in 0..3 {
        let g = random_invertible_matrix(5, &mut rng);
        let gt = g.transpose();
        let conj = |m: &RatMatrix| gt.mul(m).mul(&g);
        let q = QuadricPencil::new(conj(&p.m1), conj(&p.m2), p.q1.clone(), p.q2.clone()).unwrap();
        let r0 = pencil_generic_rank(&p, 5).unwrap().generic_rank;
        let r1 = pencil_generic_rank(&q, 5).unwrap().generic_rank;
        assert_eq!(r0, r1);
        let s0: Vec<usize> = rank_strata(&p)
            .unwrap()
            .into_iter()
            .map(|s| s.rank)
            .collect();
        let s1: Vec<usize> = rank_strata(&q)
            .unwrap()
            .into_iter()
            .map(|s| s.rank)
            .collect();
        assert_eq!(s0, s1);
    }
}

#[test]
fn matrix_form_consistency() {
    // v^T (l M1 + mu M2) v re-expands to the restricted combination
    let p = example2_pencil();
    let ring5 = Ring::new(vec!["Z0", "Z1", "Z2", "Z3", "Z4"]);
    for (l, mu) in [(int(1), int(0)), (int(0), int(1)), (rat(3, 2), int(-2))] {
        let member = p.member(&l, &mu);
        let expanded = grplane_core::matrix::quadratic_form_poly(&member, &ring5);
        let combo = p.q1.scale(&l).add(&p.q2.scale(&mu));
        assert_eq!(expanded, combo);
    }
    let _ = Rat::zero();
}
