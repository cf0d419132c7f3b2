//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by the intrinsic grevlex order, so
//! iteration is canonical and zero coefficients are never kept. Values are
//! immutable after construction; every operation is a pure function.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::rat::{rat_string, Rat};

/// An ordered list of variable names shared by the polynomials living in it.
#[derive(Clone, Eq)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Ring {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "ring needs at least one variable");
        Ring {
            vars: Arc::new(vars),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The i-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Poly {
        Poly::from_term(self.clone(), Monomial::var(self.nvars(), i), Rat::one())
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.clone())
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self.clone(), Rat::one())
    }

    /// All monomials of total degree `d`, descending grevlex.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        fn rec(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exps(exps.clone()));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(exps, i + 1, left - e, out);
                exps[i] = 0;
            }
        }
        rec(&mut exps, 0, d, &mut out);
        out.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
        out
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.vars.join(","))
    }
}

/// Homogeneity status of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(ring: Ring) -> Poly {
        Poly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: Ring, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(ring.nvars()), c);
        }
        Poly { ring, terms }
    }

    pub fn from_term(ring: Ring, m: Monomial, c: Rat) -> Poly {
        assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring, terms }
    }

    pub fn from_terms(ring: Ring, it: impl IntoIterator<Item = (Monomial, Rat)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.nvars(), self.ring.nvars());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending intrinsic (grevlex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::unit(self.ring.nvars()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Homogeneity::Zero;
        };
        let d = first.degree();
        if it.all(|m| m.degree() == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::Mixed
        }
    }

    /// True for the zero polynomial or an exactly degree-`d` homogeneous one.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        matches!(self.homogeneity(), Homogeneity::Zero)
            || self.homogeneity() == Homogeneity::Degree(d)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rat)> {
        match order {
            MonomialOrder::GrevLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b)),
        }
    }

    pub fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(self.ring == other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert!(self.ring == other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.ring == other.ring, "ring mismatch");
        let mut out = Poly::zero(self.ring.clone());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = self.ring.one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact composition: one image per ring variable, all in a common ring.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => {
                return Err(Error::ArityMismatch {
                    expected: self.ring.nvars(),
                    got: 0,
                })
            }
        };
        for im in images {
            if *im.ring() != target {
                return Err(Error::RingMismatch);
            }
        }
        // cache powers of each image up to its maximal exponent
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![target.one(), p.clone()])
            .collect();
        for (i, pw) in powers.iter_mut().enumerate() {
            let maxe = self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0) as usize;
            while pw.len() <= maxe {
                let next = pw.last().unwrap().mul(&images[i]);
                pw.push(next);
            }
        }
        let mut out = Poly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target.clone(), c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Exact formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.ring.clone());
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::from_exps(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Multiplies by the smallest positive rational making the coefficients
    /// integral with content 1 and positive leading coefficient (grevlex).
    pub fn primitive_part(&self) -> Poly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        if self
            .leading_term(MonomialOrder::GrevLex)
            .unwrap()
            .1
            .is_negative()
        {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Leading coefficient 1 under the given order.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Canonical text: terms descending in `order`, explicit `*` and `^`,
    /// coefficients as `p/q` with `/q` omitted when 1.
    pub fn to_string_with(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(rat_string(&abs));
            }
            for (v, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.var_name(v), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(MonomialOrder::GrevLex))
    }
}

/// Jacobian: entry (i, j) is the formal derivative of `polys[i]` by variable j.
pub fn jacobian_matrix(polys: &[Poly]) -> Vec<Vec<Poly>> {
    polys
        .iter()
        .map(|p| (0..p.ring().nvars()).map(|j| p.derivative(j)).collect())
        .collect()
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "square matrix required"
    );
    let ring = m[0][0].ring().clone();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero(ring);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&poly_det(&minor));
        det = if j % 2 == 0 {
            det.add(&cof)
        } else {
            det.sub(&cof)
        };
    }
    det
}
