//! Dimension, degree and Hilbert polynomials of homogeneous ideals.
//!
//! The Hilbert series of S/I equals HN(t) / (1-t)^n where HN is computed from
//! the initial monomial ideal by the standard pivot-variable recursion
//!
//! ```text
//! HN(I) = HN(I + (x)) + t * HN(I : x)
//! ```
//!
//! with memoization. Writing HN = (1-t)^r * Q with Q(1) != 0, the quotient has
//! Krull dimension n - r, so projective dimension d = n - r - 1, the degree is
//! Q(1), and the Hilbert polynomial comes from expanding Q(t) / (1-t)^(d+1).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::rat::Rat;
use crate::uni::UniPoly;

/// Projective dimension, degree and Hilbert polynomial of a homogeneous ideal.
///
/// `projective_dimension` is -1 for an empty projective zero set; `degree`
/// is defined whenever the dimension is >= 0 and then satisfies
/// degree = (leading coefficient of the Hilbert polynomial) * dimension!.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub projective_dimension: i64,
    pub degree: Option<u64>,
    pub hilbert_polynomial: UniPoly,
}

pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    let numer = hilbert_numerator_of(ideal)?;
    let n = ideal.ring().nvars();
    Ok(data_from_numerator(numer, n))
}

/// True iff the projective zero set is empty, i.e. the Hilbert polynomial is
/// identically zero.
pub fn is_empty_projective(ideal: &Ideal) -> Result<bool> {
    let data = hilbert_data(ideal)?;
    Ok(data.projective_dimension < 0)
}

fn hilbert_numerator_of(ideal: &Ideal) -> Result<UniPoly> {
    if !ideal.all_generators_homogeneous() {
        return Err(Error::Inhomogeneous {
            what: "hilbert series input",
        });
    }
    let gb = ideal.groebner_basis(MonomialOrder::GrevLex)?;
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| {
            g.leading_term(MonomialOrder::GrevLex)
                .expect("basis elements nonzero")
                .0
                .clone()
        })
        .collect();
    let mut memo = HashMap::new();
    Ok(hilbert_numerator(minimalize(leads), &mut memo))
}

fn data_from_numerator(numer: UniPoly, nvars: usize) -> HilbertData {
    // split off the (1 - t) multiplicity
    let one_minus_t = UniPoly::from_coeffs(vec![Rat::one(), -Rat::one()]);
    let mut q = numer;
    let mut r = 0usize;
    if q.is_zero() {
        // unit ideal: empty scheme
        return HilbertData {
            projective_dimension: -1,
            degree: None,
            hilbert_polynomial: UniPoly::zero(),
        };
    }
    while q.eval(&Rat::one()).is_zero() {
        q = q.div_exact(&one_minus_t);
        r += 1;
    }
    let krull = nvars as i64 - r as i64;
    if krull <= 0 {
        return HilbertData {
            projective_dimension: -1,
            degree: None,
            hilbert_polynomial: UniPoly::zero(),
        };
    }
    let dim = krull - 1;
    let degree_rat = q.eval(&Rat::one());
    debug_assert!(degree_rat.is_integer() && degree_rat.numer().is_positive());
    let degree: u64 = degree_rat
        .numer()
        .try_into()
        .expect("degrees at desk scale fit in u64");
    // P(m) = sum_j q_j * binom(m - j + D - 1, D - 1) with D = dim + 1
    let d_minus_1 = dim as u32;
    let mut hp = UniPoly::zero();
    for (j, qj) in q.coeffs().iter().enumerate() {
        if qj.is_zero() {
            continue;
        }
        hp = hp.add(&binomial_poly(j as i64, d_minus_1).scale(qj));
    }
    HilbertData {
        projective_dimension: dim,
        degree: Some(degree),
        hilbert_polynomial: hp,
    }
}

/// binom(m - j + k, k) expanded as a polynomial in m.
fn binomial_poly(j: i64, k: u32) -> UniPoly {
    let mut p = UniPoly::one();
    for i in 0..k {
        // factor (m - j + k - i)
        let c = Rat::from_integer(BigInt::from(k as i64 - i as i64 - j));
        p = p.mul(&UniPoly::from_coeffs(vec![c, Rat::one()]));
    }
    let mut fact = Rat::one();
    for i in 1..=k {
        fact *= Rat::from_integer(BigInt::from(i));
    }
    p.scale(&fact.recip())
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let mut min: Vec<Monomial> = Vec::new();
    for g in gens {
        if !min.iter().any(|m| m.divides(&g)) {
            min.push(g);
        }
    }
    min
}

fn hilbert_numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, UniPoly>) -> UniPoly {
    if gens.is_empty() {
        return UniPoly::one();
    }
    if gens.iter().any(Monomial::is_unit) {
        return UniPoly::zero();
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let result = if gens.len() == 1 {
        // 1 - t^deg
        UniPoly::one().sub(&UniPoly::term(Rat::one(), gens[0].degree() as usize))
    } else if gens
        .iter()
        .all(|m| m.exps().iter().filter(|&&e| e > 0).count() == 1)
    {
        // pairwise-distinct pure powers: product of (1 - t^a)
        let mut p = UniPoly::one();
        for g in &gens {
            p = p.mul(&UniPoly::one().sub(&UniPoly::term(Rat::one(), g.degree() as usize)));
        }
        p
    } else {
        let pivot = pick_pivot(&gens);
        let nvars = gens[0].nvars();
        let x = Monomial::var(nvars, pivot);
        // I + (x): generators not divisible by x, plus x itself
        let mut plus: Vec<Monomial> = gens.iter().filter(|m| m.exp(pivot) == 0).cloned().collect();
        plus.push(x.clone());
        // I : x: divide the x-exponent down by one where present
        let quot: Vec<Monomial> = gens
            .iter()
            .map(|m| {
                if m.exp(pivot) > 0 {
                    m.try_div(&x).unwrap()
                } else {
                    m.clone()
                }
            })
            .collect();
        let a = hilbert_numerator(minimalize(plus), memo);
        let b = hilbert_numerator(minimalize(quot), memo);
        a.add(&UniPoly::term(Rat::one(), 1).mul(&b))
    };
    memo.insert(gens, result.clone());
    result
}

/// The busiest variable among the generators of degree at least two (ties to
/// the left). Splitting must shrink the ideal, so a variable whose only
/// occurrence is as a standalone generator is never a valid pivot.
fn pick_pivot(gens: &[Monomial]) -> usize {
    let nvars = gens[0].nvars();
    (0..nvars)
        .max_by_key(|&i| {
            let count = gens
                .iter()
                .filter(|m| m.degree() >= 2 && m.exp(i) > 0)
                .count();
            (count, std::cmp::Reverse(i))
        })
        .expect("ring has variables")
}
