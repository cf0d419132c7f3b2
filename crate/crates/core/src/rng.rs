//! Seed-fixed random sampling of small-height rational data.
//!
//! Every randomized routine in the toolkit draws from a ChaCha stream seeded
//! explicitly, so identical seeds give identical results across runs and
//! platforms. Numerators and denominators stay in [-20, 20], which keeps
//! basis computations fast while avoiding systematic coincidences.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bundle::{section_basis, section_combine, Presentation};
use crate::error::Result;
use crate::matrix::RatMatrix;
use crate::plucker::{generates_check, plucker_map, SectionQuadruple};
use crate::poly::{Poly, Ring};
use crate::rat::{rat, Rat};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in [-20, 20] and denominator in [1, 20].
pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.random_range(-20..=20), rng.random_range(1..=20))
}

pub fn random_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Homogeneous coordinates of a random point, not all zero.
pub fn random_projective_point(nvars: usize, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    loop {
        let pt: Vec<Rat> = (0..nvars).map(|_| random_rat(rng)).collect();
        if pt.iter().any(|c| !c.is_zero()) {
            return pt;
        }
    }
}

/// A nonzero homogeneous form of the given degree.
pub fn random_form(ring: &Ring, degree: u32, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let f = Poly::from_terms(
            ring.clone(),
            ring.monomials_of_degree(degree)
                .into_iter()
                .map(|m| (m, random_rat(rng))),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random valid presentation: linear A, B and quadric Q without common zeros.
pub fn random_presentation(ring: &Ring, rng: &mut ChaCha8Rng) -> Result<Presentation> {
    loop {
        let a = random_form(ring, 1, rng);
        let b = random_form(ring, 1, rng);
        let q = random_form(ring, 2, rng);
        match Presentation::new(a, b, q) {
            Ok(p) => return Ok(p),
            Err(crate::error::Error::CommonZero { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// A random independent section quadruple; with `require_generating` the
/// quadruple is also checked to generate the bundle.
pub fn random_quadruple(
    p: &Presentation,
    require_generating: bool,
    rng: &mut ChaCha8Rng,
) -> Result<SectionQuadruple> {
    let basis = section_basis(p);
    loop {
        let coords: Vec<[Rat; 5]> = (0..4)
            .map(|_| std::array::from_fn(|_| random_rat(rng)))
            .collect();
        let sections: Vec<_> = coords.iter().map(|c| section_combine(c, &basis)).collect();
        let Ok(q) = SectionQuadruple::new(sections.try_into().expect("four sections")) else {
            continue;
        };
        if require_generating && !generates_check(&plucker_map(&q, p)?)? {
            continue;
        }
        return Ok(q);
    }
}

/// A random invertible square matrix with small integer entries.
pub fn random_invertible_matrix(n: usize, rng: &mut ChaCha8Rng) -> RatMatrix {
    loop {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.random_range(-5..=5), 1)).collect())
            .collect();
        let m = RatMatrix::from_rows(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
}
