//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the code paths they check: surface
//! degrees come from resultants of random linear sections rather than Hilbert
//! series, and image-ideal graded pieces come from exact linear algebra
//! rather than elimination.

#![allow(dead_code)]

use grplane_core::bundle::Presentation;
use grplane_core::groebner::Ideal;
use grplane_core::matrix::{coefficient_matrix, RatMatrix};
use grplane_core::monomial::MonomialOrder;
use grplane_core::parse::parse_poly;
use grplane_core::plucker::{plucker_map, PluckerMap, SectionQuadruple};
use grplane_core::poly::{poly_det, Poly, Ring};
use grplane_core::rat::{rat, Rat};
use grplane_core::rng::{random_rat, rng_from_seed};
use num_traits::{One, Zero};

pub fn ring_xyz() -> Ring {
    Ring::new(vec!["x", "y", "z"])
}

pub fn pp(ring: &Ring, text: &str) -> Poly {
    parse_poly(text, ring).expect("fixture parses")
}

/// The canonical presentation (X, Y, Z^2).
pub fn presentation_xyz2() -> Presentation {
    let r = ring_xyz();
    Presentation::new(pp(&r, "x"), pp(&r, "y"), pp(&r, "z^2")).expect("valid presentation")
}

fn quadruple(coords: [[i64; 5]; 4]) -> SectionQuadruple {
    let p = presentation_xyz2();
    let coords: [[Rat; 5]; 4] = coords.map(|row| row.map(|v| rat(v, 1)));
    SectionQuadruple::from_coords(&p, &coords).expect("independent quadruple")
}

/// Sections w1..w4.
pub fn example1_quadruple() -> SectionQuadruple {
    quadruple([
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
    ])
}

/// Sections w1, w2, w3, w4 - w5.
pub fn example2_quadruple() -> SectionQuadruple {
    quadruple([
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, -1],
    ])
}

/// Sections w1, w2, w3 + d*w4, a*w4 + w5.
pub fn example3_quadruple(a: i64, d: i64) -> SectionQuadruple {
    quadruple([
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, d, 0],
        [0, 0, 0, a, 1],
    ])
}

pub fn example1_map() -> PluckerMap {
    plucker_map(&example1_quadruple(), &presentation_xyz2()).expect("example map")
}

pub fn example2_map() -> PluckerMap {
    plucker_map(&example2_quadruple(), &presentation_xyz2()).expect("example map")
}

pub fn example3_map(a: i64, d: i64) -> PluckerMap {
    plucker_map(&example3_quadruple(a, d), &presentation_xyz2()).expect("example map")
}

/// Independent surface-degree oracle by a random linear section.
///
/// Splits off the degree-1 part of the ideal, then requires the nonlinear
/// part to be one quadric in a 3-space (binary-form degree count) or two
/// quadrics in a 4-space (Sylvester resultant count). Returns the count of
/// section points with multiplicity.
pub fn oracle_surface_degree(ideal: &Ideal, seed: u64) -> Option<u64> {
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex).ok()?;
    let linear: Vec<Poly> = gb
        .iter()
        .filter(|g| g.total_degree() == Some(1))
        .cloned()
        .collect();
    let rest: Vec<Poly> = gb
        .iter()
        .filter(|g| g.total_degree() > Some(1))
        .cloned()
        .collect();
    let n = ideal.ring().nvars();
    let span_dim = n - linear.len(); // projective span has this many coordinates
    let mut rng = rng_from_seed(seed);
    // random parametrization of a subspace of projective dimension span-3
    // inside the span: columns = span basis combined at random
    let span_basis: Vec<Vec<Rat>> = if linear.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![Rat::zero(); n];
                v[i] = Rat::one();
                v
            })
            .collect()
    } else {
        coefficient_matrix(&linear, 1).ok()?.kernel_basis()
    };
    debug_assert_eq!(span_basis.len(), span_dim);
    let params = span_dim - 2;
    if !(2..=3).contains(&params) {
        return None;
    }
    for _attempt in 0..6 {
        // a random (params x span_dim) coefficient block maps parameters into the span
        let mix: Vec<Vec<Rat>> = (0..params)
            .map(|_| (0..span_dim).map(|_| random_rat(&mut rng)).collect())
            .collect();
        let pring = if params == 2 {
            Ring::new(vec!["s", "u"])
        } else {
            Ring::new(vec!["s", "u", "v"])
        };
        // ambient coordinate i as a linear form in the parameters
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                let mut acc = pring.zero();
                for (k, row) in mix.iter().enumerate() {
                    let mut coeff = Rat::zero();
                    for (b, base) in span_basis.iter().enumerate() {
                        coeff += &row[b] * &base[i];
                    }
                    acc = acc.add(&pring.var(k).scale(&coeff));
                }
                acc
            })
            .collect();
        let sections: Vec<Poly> = rest
            .iter()
            .map(|g| g.substitute(&images).expect("arity"))
            .collect();
        match (params, sections.as_slice()) {
            (2, [f]) => {
                if f.is_zero() {
                    continue;
                }
                return Some(u64::from(f.total_degree().unwrap()));
            }
            (3, [f, g]) => {
                let res = sylvester_resultant(f, g, 2);
                if res.is_zero() {
                    continue;
                }
                return Some(u64::from(
                    f.total_degree().unwrap() * g.total_degree().unwrap(),
                ));
            }
            _ => return None,
        }
    }
    None
}

/// Resultant of two ternary forms with respect to the last variable, via the
/// Sylvester determinant over the first two.
pub fn sylvester_resultant(f: &Poly, g: &Poly, deg_in_last: u32) -> Poly {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let last = n - 1;
    let coeffs = |p: &Poly| -> Vec<Poly> {
        // p = sum_k c_k(s, u) * v^k
        (0..=deg_in_last)
            .map(|k| {
                Poly::from_terms(
                    ring.clone(),
                    p.terms().filter(|(m, _)| m.exp(last) == k).map(|(m, c)| {
                        let mut e = m.exps().to_vec();
                        e[last] = 0;
                        (grplane_core::monomial::Monomial::from_exps(e), c.clone())
                    }),
                )
            })
            .collect()
    };
    let fc = coeffs(f);
    let gc = coeffs(g);
    let m = deg_in_last as usize;
    let size = 2 * m;
    let zero = ring.zero();
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().enumerate() {
            row[shift + (m - k)] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().enumerate() {
            row[shift + (m - k)] = c.clone();
        }
        rows.push(row);
    }
    poly_det(&rows)
}

/// Dimension of the degree-d graded piece of the image ideal, computed as the
/// kernel of substitution on monomials (independent of any elimination), plus
/// the kernel forms themselves.
pub fn oracle_image_piece(components: &[Poly], target: &Ring, d: u32) -> (usize, Vec<Poly>) {
    let monos = target.monomials_of_degree(d);
    let src = components[0].ring().clone();
    let comp_deg = components
        .iter()
        .filter_map(Poly::total_degree)
        .max()
        .expect("nonzero map");
    let rows: Vec<Vec<Rat>> = monos
        .iter()
        .map(|m| {
            let mut img = Poly::constant(src.clone(), Rat::one());
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    img = img.mul(&components[i]);
                }
            }
            src.monomials_of_degree(comp_deg * d)
                .iter()
                .map(|mm| img.coeff(mm))
                .collect()
        })
        .collect();
    let matrix = RatMatrix::from_rows(rows);
    let kernel = matrix.transpose().kernel_basis();
    let forms: Vec<Poly> = kernel
        .iter()
        .map(|v| {
            Poly::from_terms(target.clone(), monos.iter().cloned().zip(v.iter().cloned()))
                .primitive_part()
        })
        .collect();
    (kernel.len(), forms)
}

/// Number of degree-d monomials divisible by a leading term of the basis:
/// the dimension of the initial ideal's graded piece, equal to dim I_d.
pub fn initial_ideal_piece_dim(ideal: &Ideal, d: u32) -> usize {
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex).expect("basis");
    let leads: Vec<_> = gb
        .iter()
        .map(|g| g.leading_term(MonomialOrder::GrevLex).unwrap().0.clone())
        .collect();
    ideal
        .ring()
        .monomials_of_degree(d)
        .into_iter()
        .filter(|m| leads.iter().any(|l| l.divides(m)))
        .count()
}
