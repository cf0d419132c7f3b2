//! Univariate polynomials with rational coefficients.
//!
//! Small supporting arithmetic for Hilbert numerators and binary-form work:
//! exact division, Euclidean gcd, square-free part, rational root extraction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat_string, Rat};

/// Coefficients ascending in the variable; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    /// The monomial c * t^k.
    pub fn term(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Quotient and remainder of field division.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / &lc;
            let shift = rd - dd;
            quot[shift] = f.clone();
            let scaled: Vec<Rat> = std::iter::repeat_n(Rat::zero(), shift)
                .chain(divisor.coeffs.iter().map(|c| c * &f))
                .collect();
            rem = rem.sub(&UniPoly::from_coeffs(scaled));
        }
        (UniPoly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// Monic Euclidean gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lc) => {
                let inv = lc.recip();
                a.scale(&inv)
            }
        }
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        let p = self.div_exact(&g);
        let inv = p.leading().unwrap().recip();
        p.scale(&inv)
    }

    /// Primitive integer coefficients with positive leading entry.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for v in &mut ints {
            *v /= &g;
        }
        ints
    }

    /// All rational roots with multiplicities, and the root-free cofactor.
    ///
    /// Degrees one and two are solved in closed form (perfect-square
    /// discriminant test). Higher degrees find candidate roots modulo a
    /// prime avoiding the discriminant, Hensel-lift them, and recover p/q by
    /// rational reconstruction; every candidate is verified exactly before
    /// deflation, so no root is ever reported on modular evidence alone.
    pub fn rational_roots(&self) -> (Vec<(Rat, usize)>, UniPoly) {
        let mut roots: Vec<(Rat, usize)> = Vec::new();
        if self.is_zero() {
            return (roots, UniPoly::zero());
        }
        let mut rest = self.clone();
        let mut zero_mult = 0usize;
        while rest.degree().is_some() && rest.coeff(0).is_zero() {
            rest = UniPoly::from_coeffs(rest.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rat::zero(), zero_mult));
        }
        loop {
            let deg = rest.degree().unwrap_or(0);
            if deg == 0 {
                break;
            }
            let Some(cand) = next_rational_root(&rest) else {
                break;
            };
            let mut mult = 0usize;
            let lin = UniPoly::from_coeffs(vec![-cand.clone(), Rat::one()]);
            while rest.degree().unwrap_or(0) >= 1 && rest.eval(&cand).is_zero() {
                rest = rest.div_exact(&lin);
                mult += 1;
            }
            debug_assert!(mult > 0);
            roots.push((cand, mult));
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let body = match i {
                0 => rat_string(&abs),
                _ => {
                    let pow = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if abs.is_one() {
                        pow
                    } else {
                        format!("{}*{}", rat_string(&abs), pow)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(if neg {
                    format!("-{body}")
                } else {
                    format!("+{body}")
                });
            }
        }
        parts.concat()
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

/// One rational root of `f` (degree >= 1), or None if there is none.
fn next_rational_root(f: &UniPoly) -> Option<Rat> {
    let ints = f.primitive_integer_coeffs();
    let deg = ints.len() - 1;
    match deg {
        0 => None,
        1 => Some(Rat::new(-ints[0].clone(), ints[1].clone())),
        2 => {
            // perfect-square discriminant
            let disc = &ints[1] * &ints[1] - BigInt::from(4) * &ints[0] * &ints[2];
            if disc.is_negative() {
                return None;
            }
            let s = disc.sqrt();
            if &s * &s != disc {
                return None;
            }
            Some(Rat::new(-&ints[1] + s, BigInt::from(2) * &ints[2]))
        }
        _ => hensel_rational_root(f),
    }
}

/// Modular-scan root search: pick a prime avoiding the leading coefficient
/// and the discriminant of the square-free part, scan the residues, lift the
/// simple roots, and rationally reconstruct. The caller re-verifies exactly.
fn hensel_rational_root(f: &UniPoly) -> Option<Rat> {
    let sf = f.square_free_part();
    let sf_ints = sf.primitive_integer_coeffs();
    let lead = sf_ints.last().unwrap().clone();
    let disc = integer_resultant(&sf_ints, &derivative_ints(&sf_ints));
    debug_assert!(!disc.is_zero(), "square-free part has nonzero discriminant");
    let bad = (&lead * &disc).abs();
    let mut p: u64 = 101;
    let prime = loop {
        if is_small_prime(p) && !(&bad % BigInt::from(p)).is_zero() {
            break p;
        }
        p += 2;
        if p > 1_000_000 {
            return None; // cannot happen for desk-scale data
        }
    };
    // residue scan over Z/p
    let coeffs_mod: Vec<u64> = sf_ints
        .iter()
        .map(|c| {
            let m = ((c % BigInt::from(prime)) + BigInt::from(prime)) % BigInt::from(prime);
            u64::try_from(&m).expect("reduced residue fits")
        })
        .collect();
    let horner = |x: u64| -> u64 {
        let mut acc: u128 = 0;
        for c in coeffs_mod.iter().rev() {
            acc = (acc * x as u128 + *c as u128) % prime as u128;
        }
        acc as u64
    };
    // lifting precision: a root p/q of the square-free part has |p| and q
    // bounded by its extreme coefficients
    let bound = sf_ints
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::one);
    let target = BigInt::from(4) * &bound * &bound + BigInt::one();
    for r0 in 0..prime {
        if horner(r0) != 0 {
            continue;
        }
        // Newton lifting of a simple root
        let mut modulus = BigInt::from(prime);
        let mut root = BigInt::from(r0);
        while modulus < target {
            modulus = &modulus * &modulus;
            let fv = eval_ints_mod(&sf_ints, &root, &modulus);
            let dv = eval_ints_mod(&derivative_ints(&sf_ints), &root, &modulus);
            let Some(dinv) = mod_inverse(&dv, &modulus) else {
                break;
            };
            root = ((&root - fv * dinv) % &modulus + &modulus) % &modulus;
        }
        if modulus < target {
            continue;
        }
        if let Some(cand) = rational_reconstruct(&root, &modulus) {
            if f.eval(&cand).is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

fn derivative_ints(c: &[BigInt]) -> Vec<BigInt> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, v)| v * BigInt::from(i))
        .collect()
}

fn eval_ints_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for v in c.iter().rev() {
        acc = (acc * x + v) % m;
    }
    ((acc % m) + m) % m
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(((e.x % m) + m) % m)
    } else {
        None
    }
}

/// Recovers p/q from its image mod M with |p|, q <= sqrt(M/2).
fn rational_reconstruct(v: &BigInt, modulus: &BigInt) -> Option<Rat> {
    let limit = (modulus / BigInt::from(2)).sqrt();
    let mut r0 = modulus.clone();
    let mut r1 = v.clone();
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > limit {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > limit {
        return None;
    }
    Some(Rat::new(r1 * t1.signum(), t1.abs()))
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sylvester resultant of two integer coefficient lists (ascending).
fn integer_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let m = g.len() - 1;
    let size = n + m;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in f.iter().enumerate() {
            row[shift + (n - k)] = Rat::from_integer(c.clone());
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![Rat::zero(); size];
        for (k, c) in g.iter().enumerate() {
            row[shift + (m - k)] = Rat::from_integer(c.clone());
        }
        rows.push(row);
    }
    let det = crate::matrix::RatMatrix::from_rows(rows).det();
    debug_assert!(det.is_integer());
    det.numer().clone()
}
