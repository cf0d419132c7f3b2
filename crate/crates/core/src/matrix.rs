//! Dense exact-rational matrices: echelon forms, rank, kernels, determinants,
//! and the symmetric matrix of a quadratic form.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "dimensions must be positive");
        let c = rows[0].len();
        assert!(
            c > 0 && rows.iter().all(|row| row.len() == c),
            "ragged rows"
        );
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis read off the reduced echelon form: one vector
    /// per free column, with a 1 in the free slot.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact rank and canonical kernel basis in one call.
pub fn matrix_rank_kernel(m: &RatMatrix) -> (usize, Vec<Vec<Rat>>) {
    (m.rank(), m.kernel_basis())
}

/// Symmetric matrix M of a quadratic form q, with q = v^T M v.
///
/// Off-diagonal entries are half the mixed coefficients, so denominators of 2
/// are expected; this matches the classical rank stratification of conics.
pub fn quadratic_form_matrix(q: &Poly) -> Result<RatMatrix> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !q.is_homogeneous_of(2) {
        return Err(Error::DegreeMismatch {
            what: "quadratic form",
            expected: 2,
        });
    }
    let n = q.ring().nvars();
    let mut m = RatMatrix::zeros(n, n);
    let half = Rat::new(1.into(), 2.into());
    for (mono, c) in q.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| mono.exp(i) > 0).collect();
        match support.as_slice() {
            [i] => m.set(*i, *i, c.clone()),
            [i, j] => {
                m.set(*i, *j, c * &half);
                m.set(*j, *i, c * &half);
            }
            _ => unreachable!("degree-2 monomial has one or two variables"),
        }
    }
    Ok(m)
}

/// Re-expands v^T M v as a polynomial in the given ring.
pub fn quadratic_form_poly(m: &RatMatrix, ring: &crate::poly::Ring) -> Poly {
    assert_eq!(m.rows(), m.cols());
    assert_eq!(m.rows(), ring.nvars());
    let mut q = Poly::zero(ring.clone());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_zero() {
                continue;
            }
            let mut exps = vec![0u32; ring.nvars()];
            exps[i] += 1;
            exps[j] += 1;
            q.add_term(Monomial::from_exps(exps), m.get(i, j).clone());
        }
    }
    q
}

/// Coefficient matrix of homogeneous degree-`d` forms in the fixed descending
/// grevlex monomial basis; one row per form.
pub fn coefficient_matrix(forms: &[Poly], d: u32) -> Result<RatMatrix> {
    let Some(first) = forms.first() else {
        return Err(Error::ZeroInput);
    };
    let ring = first.ring().clone();
    let basis = ring.monomials_of_degree(d);
    let mut rows = Vec::with_capacity(forms.len());
    for f in forms {
        if *f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !f.is_homogeneous_of(d) {
            return Err(Error::DegreeMismatch {
                what: "coefficient matrix entry",
                expected: d as usize,
            });
        }
        rows.push(basis.iter().map(|m| f.coeff(m)).collect());
    }
    Ok(RatMatrix::from_rows(rows))
}

/// A maximal linearly independent subset of same-degree homogeneous forms,
/// kept in input order. Zero polynomials are dropped.
pub fn independent_subset(forms: &[Poly], d: u32) -> Result<Vec<Poly>> {
    let nonzero: Vec<Poly> = forms.iter().filter(|f| !f.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let m = coefficient_matrix(&nonzero, d)?;
    let mut kept: Vec<Poly> = Vec::new();
    let mut kept_rows: Vec<Vec<Rat>> = Vec::new();
    for (i, f) in nonzero.iter().enumerate() {
        let mut candidate = kept_rows.clone();
        candidate.push(m.row(i).to_vec());
        if RatMatrix::from_rows(candidate.clone()).rank() == candidate.len() {
            kept.push(f.clone());
            kept_rows = candidate;
        }
    }
    Ok(kept)
}
