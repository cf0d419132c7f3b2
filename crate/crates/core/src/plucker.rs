//! The morphism to Gr(2, C^4) built from four sections: the six Plucker
//! quadrics via the twisted 3x3 determinant, generation checks, the normal
//! form for section quadruples, and the ambient Grassmannian quadric.
//!
//! The determinant is the single source of truth for Plucker coordinates; it
//! reproduces the worked example sextuples term by term. Index order is fixed
//! as (p12, p13, p14, p23, p24, p34) = (Z0, ..., Z5). Under this convention
//! the quadric vanishing on every image is Z0*Z5 - Z1*Z4 + Z2*Z3.

use num_traits::One;

use crate::bundle::{Presentation, SectionE};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::is_empty_projective;
use crate::matrix::RatMatrix;
use crate::poly::{Poly, Ring};
use crate::rat::Rat;

/// Index pairs behind the fixed coordinate order.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// The homogeneous coordinate ring of the target projective 5-space.
pub fn plucker_ring() -> Ring {
    Ring::new(vec!["Z0", "Z1", "Z2", "Z3", "Z4", "Z5"])
}

/// Four sections with their 4x5 coordinate matrix in the fixed section basis.
#[derive(Clone, Debug)]
pub struct SectionQuadruple {
    sections: [SectionE; 4],
    coeff_matrix: RatMatrix,
}

impl SectionQuadruple {
    /// Rejects linearly dependent quadruples.
    pub fn new(sections: [SectionE; 4]) -> Result<SectionQuadruple> {
        let rows: Vec<Vec<Rat>> = sections.iter().map(|s| s.coords().to_vec()).collect();
        let coeff_matrix = RatMatrix::from_rows(rows);
        if coeff_matrix.rank() != 4 {
            return Err(Error::DependentSections);
        }
        Ok(SectionQuadruple {
            sections,
            coeff_matrix,
        })
    }

    /// Builds the quadruple from coordinates in the fixed section basis.
    pub fn from_coords(p: &Presentation, coords: &[[Rat; 5]; 4]) -> Result<SectionQuadruple> {
        let basis = crate::bundle::section_basis(p);
        let sections: Vec<SectionE> = coords
            .iter()
            .map(|row| crate::bundle::section_combine(row, &basis))
            .collect();
        SectionQuadruple::new(sections.try_into().expect("four sections"))
    }

    pub fn sections(&self) -> &[SectionE; 4] {
        &self.sections
    }

    pub fn coeff_matrix(&self) -> &RatMatrix {
        &self.coeff_matrix
    }
}

/// The six Plucker quadrics of a quadruple, in the fixed index order.
#[derive(Clone, Debug)]
pub struct PluckerMap {
    quadrics: [Poly; 6],
}

impl PluckerMap {
    pub fn quadrics(&self) -> &[Poly; 6] {
        &self.quadrics
    }

    pub fn components(&self) -> &[Poly] {
        &self.quadrics
    }

    pub fn ring(&self) -> &Ring {
        self.quadrics[0].ring()
    }
}

/// The formal determinant of the 3x3 matrix with rows (a_u, b_u, g_u),
/// (a_v, b_v, g_v), (A, B, Q); homogeneous of degree 2, alternating in u, v.
pub fn wedge_quadric(u: &SectionE, v: &SectionE, p: &Presentation) -> Poly {
    let ring = p.ring();
    let cst = |r: &Rat| Poly::constant(ring.clone(), r.clone());
    // expand along the first row
    let m11 = cst(&v.b).mul(p.q()).sub(&v.g.mul(p.b()));
    let m12 = cst(&v.a).mul(p.q()).sub(&v.g.mul(p.a()));
    let m13 = cst(&v.a).mul(p.b()).sub(&cst(&v.b).mul(p.a()));
    cst(&u.a)
        .mul(&m11)
        .sub(&cst(&u.b).mul(&m12))
        .add(&u.g.mul(&m13))
}

/// The six wedge quadrics of the quadruple; the Plucker identity
/// p12*p34 - p13*p24 + p14*p23 = 0 is checked before returning.
pub fn plucker_map(s: &SectionQuadruple, p: &Presentation) -> Result<PluckerMap> {
    let w = s.sections();
    let q: Vec<Poly> = PAIRS
        .iter()
        .map(|&(i, j)| wedge_quadric(&w[i - 1], &w[j - 1], p))
        .collect();
    let identity = q[0].mul(&q[5]).sub(&q[1].mul(&q[4])).add(&q[2].mul(&q[3]));
    if !identity.is_zero() {
        return Err(Error::Internal(
            "Plucker identity violated by wedge construction".into(),
        ));
    }
    Ok(PluckerMap {
        quadrics: q.try_into().expect("six quadrics"),
    })
}

/// True iff the six quadrics have no common projective zero, i.e. the
/// quadruple generates the bundle everywhere.
pub fn generates_check(m: &PluckerMap) -> Result<bool> {
    let ring = m.ring().clone();
    let gens: Vec<Poly> = m
        .quadrics
        .iter()
        .filter(|q| !q.is_zero())
        .cloned()
        .collect();
    if gens.is_empty() {
        return Ok(false);
    }
    is_empty_projective(&Ideal::new(ring, gens))
}

/// A quadruple brought to the proof's shape (1,0,f1), (0,1,f2), (0,0,f3),
/// (0,0,f4) by an invertible rational change of basis.
#[derive(Clone, Debug)]
pub struct NormalizedQuadruple {
    pub f1: Poly,
    pub f2: Poly,
    pub f3: Poly,
    pub f4: Poly,
    pub change_of_basis: RatMatrix,
}

impl NormalizedQuadruple {
    pub fn sections(&self) -> [SectionE; 4] {
        use num_traits::Zero;
        [
            SectionE {
                a: Rat::one(),
                b: Rat::zero(),
                g: self.f1.clone(),
            },
            SectionE {
                a: Rat::zero(),
                b: Rat::one(),
                g: self.f2.clone(),
            },
            SectionE {
                a: Rat::zero(),
                b: Rat::zero(),
                g: self.f3.clone(),
            },
            SectionE {
                a: Rat::zero(),
                b: Rat::zero(),
                g: self.f4.clone(),
            },
        ]
    }
}

/// Gaussian elimination on the constant parts; fails when the (a, b)
/// coordinates of the quadruple do not span the rank-2 trivial summand.
pub fn normalize_sections(s: &SectionQuadruple) -> Result<NormalizedQuadruple> {
    use num_traits::Zero;
    let m = s.coeff_matrix();
    let mut work = m.clone();
    let mut t = RatMatrix::identity(4);
    // pivot for column 0, then column 1
    for col in 0..2 {
        let Some(pivot) = (col..4).find(|&r| !work.get(r, col).is_zero()) else {
            return Err(Error::NonSpanningSections);
        };
        swap_rows(&mut work, col, pivot);
        swap_rows(&mut t, col, pivot);
        let inv = work.get(col, col).recip();
        scale_row(&mut work, col, &inv);
        scale_row(&mut t, col, &inv);
        for r in 0..4 {
            if r != col && !work.get(r, col).is_zero() {
                let f = work.get(r, col).clone();
                sub_scaled_row(&mut work, r, col, &f);
                sub_scaled_row(&mut t, r, col, &f);
            }
        }
    }
    let ring = s.sections()[0].g.ring().clone();
    let linear = |row: usize| -> Poly {
        let mut g = ring.zero();
        for i in 0..3 {
            g = g.add(&ring.var(i).scale(work.get(row, 2 + i)));
        }
        g
    };
    let f3 = linear(2);
    let f4 = linear(3);
    // rows 2 and 3 have zero constant part; independence of f3, f4 follows
    // from the quadruple's rank but is asserted anyway
    let coeff = crate::matrix::coefficient_matrix(&[f3.clone(), f4.clone()], 1)?;
    if coeff.rank() != 2 {
        return Err(Error::Internal(
            "normalized tail forms are dependent".into(),
        ));
    }
    Ok(NormalizedQuadruple {
        f1: linear(0),
        f2: linear(1),
        f3,
        f4,
        change_of_basis: t,
    })
}

fn swap_rows(m: &mut RatMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let va = m.get(a, j).clone();
        let vb = m.get(b, j).clone();
        m.set(a, j, vb);
        m.set(b, j, va);
    }
}

fn scale_row(m: &mut RatMatrix, r: usize, c: &Rat) {
    for j in 0..m.cols() {
        let v = m.get(r, j) * c;
        m.set(r, j, v);
    }
}

fn sub_scaled_row(m: &mut RatMatrix, r: usize, src: usize, c: &Rat) {
    for j in 0..m.cols() {
        let v = m.get(r, j) - c * m.get(src, j);
        m.set(r, j, v);
    }
}

/// The quadric in Z0..Z5 vanishing identically on every Plucker image under
/// this crate's determinant convention: Z0*Z5 - Z1*Z4 + Z2*Z3.
pub fn grassmann_relation() -> Poly {
    let ring = plucker_ring();
    ring.var(0)
        .mul(&ring.var(5))
        .sub(&ring.var(1).mul(&ring.var(4)))
        .add(&ring.var(2).mul(&ring.var(3)))
}
