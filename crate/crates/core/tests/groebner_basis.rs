//! Groebner engine: reduced bases, membership, elimination, saturation,
//! Hilbert data, and emptiness of projective zero sets.

mod common;

use common::{pp, ring_xyz};
use grplane_core::groebner::{buchberger, Ideal};
use grplane_core::hilbert::{hilbert_data, is_empty_projective};
use grplane_core::monomial::MonomialOrder;
use grplane_core::parse::parse_poly;
use grplane_core::poly::{Poly, Ring};
use grplane_core::rat::rat;
use grplane_core::rng::{random_form, rng_from_seed};
use num_traits::One;

fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(ring.clone(), gens.iter().map(|s| pp(ring, s)).collect())
}

#[test]
fn already_reduced_basis() {
    let r = ring_xyz();
    let i = ideal(&r, &["x", "y"]);
    let gb = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
    assert_eq!(*gb, vec![pp(&r, "y"), pp(&r, "x")]);
}

#[test]
fn example1_image_ideal_is_self_reduced() {
    let z = grplane_core::plucker::plucker_ring();
    let i = ideal(&z, &["Z5", "Z1+Z4", "Z1^2+Z2*Z3"]);
    let gb = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
    // same ideal, leading coefficients 1, pairwise reduced
    assert!(i.equals(&Ideal::new(z.clone(), gb.to_vec())).unwrap());
    assert_eq!(gb.len(), 3);
    for g in gb.iter() {
        assert!(g.leading_term(MonomialOrder::GrevLex).unwrap().1.is_one());
    }
}

#[test]
fn cuspidal_cubic_elimination() {
    // eliminating the parameter from (x - t^2, y - t^3) leaves y^2 - x^3
    let r = Ring::new(vec!["t", "x", "y"]);
    let i = ideal(&r, &["x-t^2", "y-t^3"]);
    let cut = i.eliminate(1).unwrap();
    let sub = Ring::new(vec!["x", "y"]);
    let target = parse_poly("y^2-x^3", &sub).unwrap();
    assert!(cut.contains(&target).unwrap());
    assert!(cut.equals(&Ideal::new(sub, vec![target])).unwrap());
}

#[test]
fn eliminate_edge_cases() {
    let r = ring_xyz();
    let i = ideal(&r, &["x^2-y*z", "y^3"]);
    let same = i.eliminate(0).unwrap();
    assert!(same.equals(&i).unwrap());
    // eliminating x, y from a proper ideal with no pure-z part leaves nothing
    let cut = ideal(&r, &["x-y"]).eliminate(2).unwrap();
    assert!(cut.is_zero_ideal());
    // eliminating every variable from a proper ideal leaves the zero ideal
    let cut = ideal(&r, &["x^2-y*z", "y^3"]).eliminate(3).unwrap();
    assert!(cut.is_zero_ideal());
    let unit = ideal(&r, &["x", "y", "z", "x^2-1"]).eliminate(3).unwrap();
    assert!(!unit.is_zero_ideal());
}

#[test]
fn normal_form_membership() {
    let r = ring_xyz();
    let i = ideal(&r, &["x^2-y*z", "x*y-z^2"]);
    for g in i.generators() {
        assert!(i.normal_form(g, MonomialOrder::GrevLex).unwrap().is_zero());
    }
    let one = r.one();
    assert_eq!(
        ideal(&r, &["x", "y", "z"])
            .normal_form(&one, MonomialOrder::GrevLex)
            .unwrap(),
        one
    );
}

#[test]
fn example2_pencil_member_is_in_the_image_ideal() {
    let z = grplane_core::plucker::plucker_ring();
    let i = ideal(&z, &["Z5", "Z1*Z4-Z2*Z3", "(Z1+Z4)^2-Z0*Z3"]);
    let member = parse_poly("3*(Z1*Z4-Z2*Z3) - 7*((Z1+Z4)^2-Z0*Z3)", &z).unwrap();
    assert!(i
        .normal_form(&member, MonomialOrder::GrevLex)
        .unwrap()
        .is_zero());
}

#[test]
fn ideal_equality() {
    let r = ring_xyz();
    assert!(ideal(&r, &["x", "y"])
        .equals(&ideal(&r, &["y", "x+y"]))
        .unwrap());
    assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"])).unwrap());
}

#[test]
fn saturation_examples() {
    let r = ring_xyz();
    // single-variable cancellation
    let s = ideal(&r, &["x^2*y"]).saturate_poly(&pp(&r, "x")).unwrap();
    assert!(s.equals(&ideal(&r, &["y"])).unwrap());
    // saturating a proper ideal by a unit leaves it unchanged
    let i = ideal(&r, &["x^2-y*z"]);
    let s = i.saturate_poly(&r.one()).unwrap();
    assert!(s.equals(&i).unwrap());
    // x * (x, y, z) saturates to (x); and saturation is idempotent
    let m = ideal(&r, &["x", "y", "z"]);
    let i = ideal(&r, &["x^2", "x*y", "x*z"]);
    let s1 = i.saturate(&m).unwrap();
    assert!(s1.equals(&ideal(&r, &["x"])).unwrap());
    assert!(s1.saturate(&m).unwrap().equals(&s1).unwrap());
    // no irrelevant component: nothing to strip
    let j = ideal(&r, &["x^2*z", "x*y^2"]);
    assert!(j.saturate(&m).unwrap().equals(&j).unwrap());
}

#[test]
fn hilbert_data_examples() {
    let r = ring_xyz();
    let whole = Ideal::new(r.clone(), vec![]);
    let hd = hilbert_data(&whole).unwrap();
    assert_eq!(hd.projective_dimension, 2);
    assert_eq!(hd.degree, Some(1));

    // the quadric cone in its linear 3-space
    let z = grplane_core::plucker::plucker_ring();
    let cone = ideal(&z, &["Z5", "Z1+Z4", "Z1^2+Z2*Z3"]);
    let hd = hilbert_data(&cone).unwrap();
    assert_eq!(hd.projective_dimension, 2);
    assert_eq!(hd.degree, Some(2));
    assert_eq!(common::oracle_surface_degree(&cone, 17), Some(2));

    // the degree-four surface cut by a hyperplane and two quadrics
    let v = ideal(&z, &["Z5", "Z1*Z4-Z2*Z3", "(Z1+Z4)^2-Z0*Z3"]);
    let hd = hilbert_data(&v).unwrap();
    assert_eq!(hd.projective_dimension, 2);
    assert_eq!(hd.degree, Some(4));
    assert_eq!(common::oracle_surface_degree(&v, 17), Some(4));
    // degree = leading coefficient times dimension factorial
    let lead = hd.hilbert_polynomial.coeff(2);
    assert_eq!(lead * rat(2, 1), rat(4, 1));
}

#[test]
fn hilbert_polynomial_of_plane() {
    // P(m) = (m+2)(m+1)/2 for the zero ideal in three variables
    let r = ring_xyz();
    let hd = hilbert_data(&Ideal::new(r, vec![])).unwrap();
    let p = &hd.hilbert_polynomial;
    assert_eq!(p.coeff(2), rat(1, 2));
    assert_eq!(p.coeff(1), rat(3, 2));
    assert_eq!(p.coeff(0), rat(1, 1));
}

#[test]
fn bezout_sanity_hyperplane_section() {
    // slicing the degree-4 surface with a random hyperplane keeps degree 4
    // and drops the dimension by one
    let z = grplane_core::plucker::plucker_ring();
    let v = ideal(&z, &["Z5", "Z1*Z4-Z2*Z3", "(Z1+Z4)^2-Z0*Z3"]);
    let h = parse_poly("Z0-3*Z1+2*Z2+Z3-5*Z4", &z).unwrap();
    let mut gens = v.generators().to_vec();
    gens.push(h);
    let section = Ideal::new(z, gens);
    let hd = hilbert_data(&section).unwrap();
    assert_eq!(hd.projective_dimension, 1);
    assert_eq!(hd.degree, Some(4));
}

#[test]
fn empty_projective_examples() {
    let r = ring_xyz();
    assert!(is_empty_projective(&ideal(&r, &["x", "y", "z"])).unwrap());
    assert!(is_empty_projective(&ideal(&r, &["x", "y", "z^2"])).unwrap());
    assert!(!is_empty_projective(&ideal(&r, &["x", "y"])).unwrap());
    // a triple with the common zero (0:1:0)
    assert!(!is_empty_projective(&ideal(&r, &["x", "x", "z^2"])).unwrap());
}

#[test]
fn resource_limit_is_an_error() {
    let r = ring_xyz();
    let gens = vec![
        pp(&r, "x^3-y*z^2+2*x*y*z"),
        pp(&r, "y^4-x^2*z^2"),
        pp(&r, "z^5-x*y^3*z"),
    ];
    match buchberger(&r, &gens, MonomialOrder::GrevLex, 3) {
        Err(grplane_core::error::Error::ResourceLimit { steps }) => assert!(steps > 3),
        other => panic!("expected resource limit, got {other:?}"),
    }
}

// ---------------------------------------------------------------------------
// engine self-checks on seed-fixed random ideals
// ---------------------------------------------------------------------------

fn random_small_ideal(seed: u64) -> Ideal {
    let r = ring_xyz();
    let mut rng = rng_from_seed(seed);
    let gens: Vec<Poly> = (0..2 + (seed as usize % 2))
        .map(|k| random_form(&r, 1 + ((seed as u32 + k as u32) % 3), &mut rng))
        .collect();
    Ideal::new(r, gens)
}

#[test]
fn spolynomials_of_basis_pairs_reduce_to_zero() {
    for seed in 0..20 {
        let i = random_small_ideal(seed);
        let gb = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
        let as_ideal = Ideal::new(i.ring().clone(), gb.to_vec());
        for a in 0..gb.len() {
            for b in a + 1..gb.len() {
                let (la, ca) = gb[a].leading_term(MonomialOrder::GrevLex).unwrap();
                let (lb, cb) = gb[b].leading_term(MonomialOrder::GrevLex).unwrap();
                let lcm = la.lcm(lb);
                let s = gb[a]
                    .mul_term(&lcm.try_div(la).unwrap(), &cb.clone())
                    .sub(&gb[b].mul_term(&lcm.try_div(lb).unwrap(), &ca.clone()));
                assert!(as_ideal
                    .normal_form(&s, MonomialOrder::GrevLex)
                    .unwrap()
                    .is_zero());
            }
        }
        // original generators reduce to zero as well
        for g in i.generators() {
            assert!(as_ideal
                .normal_form(g, MonomialOrder::GrevLex)
                .unwrap()
                .is_zero());
        }
    }
}

#[test]
fn reduced_basis_is_permutation_invariant() {
    for seed in 0..20 {
        let i = random_small_ideal(seed);
        let mut gens = i.generators().to_vec();
        gens.reverse();
        gens.rotate_left(1);
        let j = Ideal::new(i.ring().clone(), gens);
        let a = i.groebner_basis(MonomialOrder::GrevLex).unwrap();
        let b = j.groebner_basis(MonomialOrder::GrevLex).unwrap();
        assert_eq!(*a, *b);
    }
}

#[test]
fn elimination_ideals_are_subideals() {
    for seed in 0..10 {
        let r = Ring::new(vec!["t", "x", "y", "z"]);
        let mut rng = rng_from_seed(seed);
        let gens: Vec<Poly> = (0..3).map(|_| random_form(&r, 2, &mut rng)).collect();
        let i = Ideal::new(r, gens);
        let cut = i.eliminate(1).unwrap();
        for g in cut.generators() {
            let lifted = parse_poly(&g.to_string(), i.ring()).unwrap();
            assert!(i.contains(&lifted).unwrap());
        }
    }
}

mod properties {
    use super::*;
    use grplane_core::monomial::Monomial;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// random ring combinations of the generators are members
        #[test]
        fn combinations_of_generators_reduce_to_zero(seed in 0u64..200, s1 in -5i64..=5, s2 in -5i64..=5, e in 0u32..3) {
            let i = random_small_ideal(seed);
            let gens = i.generators();
            prop_assume!(gens.len() >= 2);
            let m = Monomial::var(3, (seed % 3) as usize);
            let combo = gens[0]
                .scale(&rat(s1, 1))
                .add(&gens[1].scale(&rat(s2, 1)).mul_term(&Monomial::from_exps(m.exps().iter().map(|&x| x * e).collect()), &rat(1, 1)));
            prop_assert!(i.normal_form(&combo, MonomialOrder::GrevLex).unwrap().is_zero());
        }

        /// elimination ideals sit inside the original ideal
        #[test]
        fn elimination_is_a_subideal(seed in 0u64..100) {
            let r = Ring::new(vec!["t", "x", "y"]);
            let mut rng = rng_from_seed(seed);
            let gens: Vec<Poly> = (0..2).map(|_| random_form(&r, 2, &mut rng)).collect();
            let i = Ideal::new(r.clone(), gens);
            let cut = i.eliminate(1).unwrap();
            for g in cut.generators() {
                let lifted = parse_poly(&g.to_string(), &r).unwrap();
                prop_assert!(i.contains(&lifted).unwrap());
            }
        }
    }
}
