//! Exact scalars, polynomials, parsing, and linear algebra.

mod common;

use common::{pp, ring_xyz};
use grplane_core::error::Error;
use grplane_core::matrix::{
    matrix_rank_kernel, quadratic_form_matrix, quadratic_form_poly, RatMatrix,
};
use grplane_core::parse::parse_poly;
use grplane_core::poly::{jacobian_matrix, Poly, Ring};
use grplane_core::rat::{rat, Rat};
use grplane_core::rng::{random_form, random_invertible_matrix, random_rat, rng_from_seed};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn parse_single_monomial() {
    let r = ring_xyz();
    let p = pp(&r, "z^2");
    assert_eq!(p.to_string(), "z^2");
    assert_eq!(p.total_degree(), Some(2));
}

#[test]
fn parse_paper_coordinate() {
    // the third coordinate of the second worked example
    let r = ring_xyz();
    let p = pp(&r, "-y^2+y*z");
    assert_eq!(p.to_string(), "-y^2+y*z");
    assert_eq!(p, pp(&r, "y*z - y^2"));
}

#[test]
fn parse_expands_and_cancels() {
    let r = ring_xyz();
    let p = pp(&r, "(x+3/2*y)*x - x^2");
    assert_eq!(p, pp(&r, "3/2*x*y"));
    assert_eq!(p.to_string(), "3/2*x*y");
}

#[test]
fn parse_errors_carry_position() {
    let r = ring_xyz();
    match parse_poly("x + w", &r) {
        Err(Error::UnknownVariable { name, pos }) => {
            assert_eq!(name, "w");
            assert_eq!(pos, 4);
        }
        other => panic!("expected unknown identifier, got {other:?}"),
    }
    assert!(matches!(parse_poly("x^-2", &r), Err(Error::Parse { .. })));
    assert!(matches!(parse_poly("x y", &r), Err(Error::Parse { .. })));
    assert!(matches!(parse_poly("1/0", &r), Err(Error::Parse { .. })));
    assert!(matches!(parse_poly("(x", &r), Err(Error::Parse { .. })));
}

#[test]
fn product_rules() {
    let r = ring_xyz();
    assert_eq!(pp(&r, "x").mul(&pp(&r, "y")), pp(&r, "x*y"));
    // hand-expanded representative product: (y - z) * y
    assert_eq!(pp(&r, "y-z").mul(&pp(&r, "y")), pp(&r, "y^2-y*z"));
    let f = pp(&r, "x^2-3*y*z+1/2");
    assert!(f.mul(&r.zero()).is_zero());
}

#[test]
fn substitution_kills_the_pencil_on_the_image() {
    // both members of the pencil vanish after composing with the projection
    let r = ring_xyz();
    let z = Ring::new(vec!["Z0", "Z1", "Z2", "Z3", "Z4"]);
    let images: Vec<Poly> = ["z^2", "-x*y", "-y^2+y*z", "x^2", "x*y-x*z"]
        .iter()
        .map(|s| pp(&r, s))
        .collect();
    let q1 = pp(&z, "Z1*Z4-Z2*Z3");
    let q2 = pp(&z, "(Z1+Z4)^2-Z0*Z3");
    assert!(q1.substitute(&images).unwrap().is_zero());
    assert!(q2.substitute(&images).unwrap().is_zero());
}

#[test]
fn substitution_identity_and_arity() {
    let r = ring_xyz();
    let f = pp(&r, "x^2-3*y*z+z^2");
    let id: Vec<Poly> = (0..3).map(|i| r.var(i)).collect();
    assert_eq!(f.substitute(&id).unwrap(), f);
    assert!(matches!(
        f.substitute(&id[..2]),
        Err(Error::ArityMismatch {
            expected: 3,
            got: 2
        })
    ));
}

#[test]
fn jacobian_examples() {
    let r = ring_xyz();
    let j = jacobian_matrix(&[pp(&r, "x^2")]);
    assert_eq!(j[0], vec![pp(&r, "2*x"), r.zero(), r.zero()]);

    let z = Ring::new(vec!["Z0", "Z1", "Z2", "Z3"]);
    let q = parse_poly("Z1^2+Z2*Z3", &z).unwrap();
    let j = jacobian_matrix(&[q]);
    assert_eq!(
        j[0],
        vec![
            z.zero(),
            parse_poly("2*Z1", &z).unwrap(),
            parse_poly("Z3", &z).unwrap(),
            parse_poly("Z2", &z).unwrap()
        ]
    );

    let c = jacobian_matrix(&[Poly::constant(r.clone(), rat(7, 3))]);
    assert!(c[0].iter().all(Poly::is_zero));
}

#[test]
fn quadratic_form_matrices() {
    let r = ring_xyz();
    let id = quadratic_form_matrix(&pp(&r, "x^2+y^2+z^2")).unwrap();
    assert_eq!(id, RatMatrix::identity(3));

    let z5 = Ring::new(vec!["Z0", "Z1", "Z2", "Z3", "Z4"]);
    let m = quadratic_form_matrix(&parse_poly("Z1*Z4-Z2*Z3", &z5).unwrap()).unwrap();
    assert_eq!(*m.get(1, 4), rat(1, 2));
    assert_eq!(*m.get(4, 1), rat(1, 2));
    assert_eq!(*m.get(2, 3), rat(-1, 2));
    assert_eq!(*m.get(3, 2), rat(-1, 2));
    assert_eq!(m.rank(), 4);

    let m3 = quadratic_form_matrix(&parse_poly("(Z1+Z4)^2-Z0*Z3", &z5).unwrap()).unwrap();
    assert_eq!(m3.rank(), 3);

    assert!(matches!(
        quadratic_form_matrix(&pp(&r, "x^2+y")),
        Err(Error::DegreeMismatch { .. })
    ));
}

#[test]
fn rank_and_kernel_examples() {
    let (rank, kernel) = matrix_rank_kernel(&RatMatrix::identity(3));
    assert_eq!((rank, kernel.len()), (3, 0));

    let zero = RatMatrix::zeros(4, 4);
    let (rank, kernel) = matrix_rank_kernel(&zero);
    assert_eq!((rank, kernel.len()), (0, 4));

    // coefficient matrix of the first worked example's six quadrics
    let r = ring_xyz();
    let quadrics: Vec<Poly> = ["z^2", "-x*y", "-y^2", "x^2", "x*y", "0"]
        .iter()
        .map(|s| pp(&r, s))
        .collect();
    let m = grplane_core::matrix::coefficient_matrix(&quadrics, 2).unwrap();
    let (rank, kernel) = matrix_rank_kernel(&m.transpose());
    assert_eq!(rank, 4);
    assert_eq!(kernel.len(), 2);
}

#[test]
fn canonical_print_order_is_descending() {
    let r = ring_xyz();
    let f = pp(&r, "z^2 + x^2 + y^2 + x*y");
    assert_eq!(f.to_string(), "x^2+x*y+y^2+z^2");
    assert_eq!(r.zero().to_string(), "0");
    assert_eq!(Poly::constant(r.clone(), rat(-5, 3)).to_string(), "-5/3");
}

// ---------------------------------------------------------------------------
// property tests
// ---------------------------------------------------------------------------

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(ring: Ring, max_deg: u32) -> impl Strategy<Value = Poly> {
    let monos: Vec<_> = (0..=max_deg)
        .flat_map(|d| ring.monomials_of_degree(d))
        .collect();
    let count = monos.len();
    proptest::collection::vec(arb_rat(), 0..count.min(8)).prop_map(move |coeffs| {
        Poly::from_terms(
            ring.clone(),
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (monos[i].clone(), c)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_arithmetic_is_a_field(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip(), Rat::one());
        }
    }

    #[test]
    fn parse_print_round_trip(f in arb_poly(ring_xyz(), 3)) {
        let text = f.to_string();
        let back = parse_poly(&text, &ring_xyz()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn homogeneous_products_add_degrees(seed in 0u64..500, d1 in 1u32..3, d2 in 1u32..3) {
        let r = ring_xyz();
        let mut rng = rng_from_seed(seed);
        let f = random_form(&r, d1, &mut rng);
        let g = random_form(&r, d2, &mut rng);
        let prod = f.mul(&g);
        if !prod.is_zero() {
            prop_assert!(prod.is_homogeneous_of(d1 + d2));
        }
    }

    #[test]
    fn quadratic_form_matrix_reexpands(seed in 0u64..500) {
        let r = ring_xyz();
        let mut rng = rng_from_seed(seed);
        let q = random_form(&r, 2, &mut rng);
        let m = quadratic_form_matrix(&q).unwrap();
        prop_assert!(m.is_symmetric());
        prop_assert_eq!(quadratic_form_poly(&m, &r), q);
    }

    #[test]
    fn rank_is_invariant_under_row_operations(seed in 0u64..300) {
        let mut rng = rng_from_seed(seed);
        let rows: Vec<Vec<Rat>> = (0..4).map(|_| (0..5).map(|_| random_rat(&mut rng)).collect()).collect();
        let m = RatMatrix::from_rows(rows);
        let g = random_invertible_matrix(4, &mut rng);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(g.mul(&m).rank(), m.rank());
    }
}
