//! Rank-2 bundle presentations as cokernels of a map given by a triple of
//! forms (A, B, Q) of degrees (1, 1, 2) without common projective zeros,
//! their Chern classes, and the five-dimensional space of global sections.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::is_empty_projective;
use crate::monomial::MonomialOrder;
use crate::poly::{Poly, Ring};
use crate::rat::Rat;

/// The datum (A, B, Q) of a short exact sequence presenting a rank-2 bundle
/// with Chern classes (2, 2). Validation rejects triples with a common
/// projective zero; a nowhere-zero section already gives an injective bundle
/// map, so no separate injectivity test is needed.
#[derive(Clone, Debug)]
pub struct Presentation {
    a: Poly,
    b: Poly,
    q: Poly,
}

impl Presentation {
    pub fn new(a: Poly, b: Poly, q: Poly) -> Result<Presentation> {
        a.same_ring(&b)?;
        a.same_ring(&q)?;
        let ring = a.ring().clone();
        if ring.nvars() != 3 {
            return Err(Error::Unsupported(
                "presentations live over a three-variable ring".into(),
            ));
        }
        for (f, what) in [(&a, "form A"), (&b, "form B")] {
            if f.is_zero() || !f.is_homogeneous_of(1) {
                return Err(Error::DegreeMismatch { what, expected: 1 });
            }
        }
        if q.is_zero() || !q.is_homogeneous_of(2) {
            return Err(Error::DegreeMismatch {
                what: "form Q",
                expected: 2,
            });
        }
        let ideal = Ideal::new(ring, vec![a.clone(), b.clone(), q.clone()]);
        if !is_empty_projective(&ideal)? {
            let witness = ideal.saturate_irrelevant()?;
            let gens = witness
                .groebner_basis(MonomialOrder::GrevLex)?
                .iter()
                .map(|g| g.to_string())
                .collect();
            return Err(Error::CommonZero { witness: gens });
        }
        Ok(Presentation { a, b, q })
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }
}

/// A global section (a, b, g) of O^2 + O(1): two rational constants and a
/// linear form. Sections of the quotient bundle are represented by these
/// lifts, which is lossless for the (2,2) presentations used here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionE {
    pub a: Rat,
    pub b: Rat,
    pub g: Poly,
}

impl SectionE {
    pub fn new(a: Rat, b: Rat, g: Poly) -> Result<SectionE> {
        if !g.is_homogeneous_of(1) {
            return Err(Error::DegreeMismatch {
                what: "section linear part",
                expected: 1,
            });
        }
        Ok(SectionE { a, b, g })
    }

    /// Coordinates in the fixed basis (1,0,0), (0,1,0), (0,0,x), (0,0,y), (0,0,z).
    pub fn coords(&self) -> [Rat; 5] {
        let ring = self.g.ring();
        let mut out = [
            self.a.clone(),
            self.b.clone(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        for i in 0..3 {
            out[2 + i] = self
                .g
                .coeff(&crate::monomial::Monomial::var(ring.nvars(), i));
        }
        out
    }
}

/// Integer Chern class pair (c1, c2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChernPair {
    pub c1: i64,
    pub c2: i64,
}

/// Chern classes of the cokernel of a map between sums of line bundles with
/// the given twists, by truncated power-series division of total Chern
/// classes in Z[h]/(h^3).
pub fn chern_of_cokernel(source: &[i64], target: &[i64]) -> Result<ChernPair> {
    if target.len() != source.len() + 2 {
        return Err(Error::Unsupported(format!(
            "cokernel rank must be 2: source rank {}, target rank {}",
            source.len(),
            target.len()
        )));
    }
    let total = |twists: &[i64]| -> (i64, i64) {
        let mut c1 = 0i64;
        let mut c2 = 0i64;
        for &d in twists {
            // (1 + c1 h + c2 h^2)(1 + d h) truncated
            c2 += c1 * d;
            c1 += d;
        }
        (c1, c2)
    };
    let (sigma1, sigma2) = total(target);
    let (s1, s2) = total(source);
    let c1 = sigma1 - s1;
    let c2 = sigma2 - s2 - s1 * c1;
    Ok(ChernPair { c1, c2 })
}

/// The fixed basis of the five-dimensional section space:
/// (1,0,0), (0,1,0), (0,0,x), (0,0,y), (0,0,z).
pub fn section_basis(p: &Presentation) -> [SectionE; 5] {
    let ring = p.ring().clone();
    let lin = |i: usize| ring.var(i);
    [
        SectionE {
            a: Rat::one(),
            b: Rat::zero(),
            g: ring.zero(),
        },
        SectionE {
            a: Rat::zero(),
            b: Rat::one(),
            g: ring.zero(),
        },
        SectionE {
            a: Rat::zero(),
            b: Rat::zero(),
            g: lin(0),
        },
        SectionE {
            a: Rat::zero(),
            b: Rat::zero(),
            g: lin(1),
        },
        SectionE {
            a: Rat::zero(),
            b: Rat::zero(),
            g: lin(2),
        },
    ]
}

/// Rational linear combination of sections.
pub fn section_combine(coeffs: &[Rat], basis: &[SectionE]) -> SectionE {
    assert_eq!(coeffs.len(), basis.len());
    assert!(!basis.is_empty());
    let ring = basis[0].g.ring().clone();
    let mut a = Rat::zero();
    let mut b = Rat::zero();
    let mut g = ring.zero();
    for (c, s) in coeffs.iter().zip(basis) {
        a += c * &s.a;
        b += c * &s.b;
        g = g.add(&s.g.scale(c));
    }
    SectionE { a, b, g }
}
