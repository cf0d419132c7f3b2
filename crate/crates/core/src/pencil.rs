//! Pencils of quadrics: restriction to a hyperplane, generic rank, and the
//! rank stratification of the parameter line.
//!
//! Binary forms in the pencil parameters are handled exactly: the strata are
//! the common roots of the maximal-rank minors, found as the gcd of those
//! forms. Rational parameters are evaluated directly; irrational ones are
//! reported by a square-free minimal polynomial in t = lambda/mu, and their
//! rank is read off divisibility against the lower minor gcds.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{quadratic_form_matrix, RatMatrix};
use crate::poly::{poly_det, Poly, Ring};
use crate::rat::{rat_string, Rat};
use crate::rng::{random_rat, rng_from_seed};
use crate::uni::UniPoly;

/// A pencil lambda*M1 + mu*M2 of symmetric matrices, with the generating
/// quadrics kept for labeling.
#[derive(Clone, Debug)]
pub struct QuadricPencil {
    pub m1: RatMatrix,
    pub m2: RatMatrix,
    pub q1: Poly,
    pub q2: Poly,
}

impl QuadricPencil {
    pub fn new(m1: RatMatrix, m2: RatMatrix, q1: Poly, q2: Poly) -> Result<QuadricPencil> {
        if m1.rows() != m2.rows()
            || m1.cols() != m2.cols()
            || !m1.is_symmetric()
            || !m2.is_symmetric()
        {
            return Err(Error::Unsupported(
                "pencil needs two symmetric matrices of equal size".into(),
            ));
        }
        Ok(QuadricPencil { m1, m2, q1, q2 })
    }

    /// Pencil of two quadrics in their own ambient ring.
    pub fn from_quadrics(q1: &Poly, q2: &Poly) -> Result<QuadricPencil> {
        q1.same_ring(q2)?;
        QuadricPencil::new(
            quadratic_form_matrix(q1)?,
            quadratic_form_matrix(q2)?,
            q1.clone(),
            q2.clone(),
        )
    }

    /// Pencil of two quadrics restricted to the hyperplane h = 0.
    pub fn restricted(q1: &Poly, q2: &Poly, h: &Poly) -> Result<QuadricPencil> {
        let (r1, m1) = restrict_to_hyperplane_full(q1, h)?;
        let (r2, m2) = restrict_to_hyperplane_full(q2, h)?;
        QuadricPencil::new(m1, m2, r1, r2)
    }

    pub fn size(&self) -> usize {
        self.m1.rows()
    }

    pub fn member(&self, lam: &Rat, mu: &Rat) -> RatMatrix {
        let n = self.size();
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, lam * self.m1.get(i, j) + mu * self.m2.get(i, j));
            }
        }
        m
    }

    /// Entries of lambda*M1 + mu*M2 as linear forms in a two-variable ring.
    fn symbolic(&self) -> Vec<Vec<Poly>> {
        let ring = Ring::new(vec!["lambda", "mu"]);
        let l = ring.var(0);
        let m = ring.var(1);
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| l.scale(self.m1.get(i, j)).add(&m.scale(self.m2.get(i, j))))
                    .collect()
            })
            .collect()
    }
}

/// Reduces q modulo the linear form h (solving h for its first unit-pivot
/// variable) and re-expresses the result in the remaining coordinates.
pub fn restrict_to_hyperplane(q: &Poly, h: &Poly) -> Result<RatMatrix> {
    Ok(restrict_to_hyperplane_full(q, h)?.1)
}

fn restrict_to_hyperplane_full(q: &Poly, h: &Poly) -> Result<(Poly, RatMatrix)> {
    q.same_ring(h)?;
    if h.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !h.is_homogeneous_of(1) {
        return Err(Error::DegreeMismatch {
            what: "hyperplane",
            expected: 1,
        });
    }
    if !q.is_homogeneous_of(2) {
        return Err(Error::DegreeMismatch {
            what: "pencil quadric",
            expected: 2,
        });
    }
    let ring = q.ring().clone();
    let n = ring.nvars();
    let pivot = (0..n)
        .find(|&i| !h.coeff(&crate::monomial::Monomial::var(n, i)).is_zero())
        .expect("nonzero linear form has a pivot");
    let c = h.coeff(&crate::monomial::Monomial::var(n, pivot));
    // x_pivot = -(h - c x_pivot)/c on the hyperplane
    let tail = h.sub(&ring.var(pivot).scale(&c));
    let image_pivot = tail.scale(&(-c.recip()));
    let images: Vec<Poly> = (0..n)
        .map(|i| {
            if i == pivot {
                image_pivot.clone()
            } else {
                ring.var(i)
            }
        })
        .collect();
    let restricted = q.substitute(&images)?;
    let sub = Ring::new(
        (0..n)
            .filter(|&i| i != pivot)
            .map(|i| ring.var_name(i).to_string())
            .collect::<Vec<_>>(),
    );
    let projected = project_dropping(&restricted, pivot, &sub);
    let m = if projected.is_zero() {
        RatMatrix::zeros(sub.nvars(), sub.nvars())
    } else {
        quadratic_form_matrix(&projected)?
    };
    Ok((projected, m))
}

fn project_dropping(f: &Poly, dropped: usize, sub: &Ring) -> Poly {
    Poly::from_terms(
        sub.clone(),
        f.terms().map(|(m, c)| {
            debug_assert_eq!(m.exp(dropped), 0);
            let exps: Vec<u32> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != dropped)
                .map(|(_, &e)| e)
                .collect();
            (crate::monomial::Monomial::from_exps(exps), c.clone())
        }),
    )
}

/// Generic rank by seed-fixed sampling at two parameters, cross-checked, plus
/// the full symbolic determinant (identically zero exactly when no member has
/// full rank).
#[derive(Clone, Debug)]
pub struct PencilRank {
    pub generic_rank: usize,
    pub det_identically_zero: bool,
}

pub fn pencil_generic_rank(pencil: &QuadricPencil, seed: u64) -> Result<PencilRank> {
    let det = poly_det(&pencil.symbolic());
    let det_identically_zero = det.is_zero();
    let mut rng = rng_from_seed(seed);
    for _ in 0..5 {
        let (l1, m1) = (random_rat(&mut rng), random_rat(&mut rng));
        let (l2, m2) = (random_rat(&mut rng), random_rat(&mut rng));
        if (l1.is_zero() && m1.is_zero()) || (l2.is_zero() && m2.is_zero()) {
            continue;
        }
        let r1 = pencil.member(&l1, &m1).rank();
        let r2 = pencil.member(&l2, &m2).rank();
        if r1 == r2 {
            return Ok(PencilRank {
                generic_rank: r1,
                det_identically_zero,
            });
        }
    }
    Err(Error::Internal(
        "pencil rank samples kept disagreeing".into(),
    ))
}

/// A parameter value (lambda : mu), exact or by minimal polynomial in
/// t = lambda/mu.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StratumParam {
    Point(Rat, Rat),
    MinPoly(UniPoly),
}

impl StratumParam {
    pub fn display(&self) -> String {
        match self {
            StratumParam::Point(l, m) => format!("({}:{})", rat_string(l), rat_string(m)),
            StratumParam::MinPoly(p) => format!("lambda/mu root of {}", p.to_string_in("t")),
        }
    }
}

/// One parameter where the pencil member drops below the generic rank.
#[derive(Clone, Debug)]
pub struct RankStratum {
    pub parameter: StratumParam,
    pub rank: usize,
}

/// Binary form in (lambda, mu) tracked as total degree + dehomogenization in
/// t = lambda/mu; the multiplicity of the root (1:0) is `deg - f.degree()`.
#[derive(Clone, Debug)]
struct BForm {
    deg: usize,
    f: UniPoly,
}

impl BForm {
    fn from_poly(p: &Poly) -> Option<BForm> {
        if p.is_zero() {
            return None;
        }
        let deg = p.total_degree().unwrap() as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(0) as usize] = c.clone();
        }
        Some(BForm {
            deg,
            f: UniPoly::from_coeffs(coeffs),
        })
    }

    fn mu_mult(&self) -> usize {
        self.deg - self.f.degree().expect("nonzero form")
    }

    fn gcd(&self, other: &BForm) -> BForm {
        let mu = self.mu_mult().min(other.mu_mult());
        let f = self.f.gcd(&other.f);
        let deg = f.degree().expect("gcd of nonzero forms") + mu;
        BForm { deg, f }
    }

    fn is_constant(&self) -> bool {
        self.mu_mult() == 0 && self.f.degree() == Some(0)
    }
}

/// gcd over all k x k minors of the symbolic pencil; None when every minor
/// vanishes identically.
fn minor_gcd(sym: &[Vec<Poly>], k: usize) -> Option<BForm> {
    let n = sym.len();
    let mut acc: Option<BForm> = None;
    for rows in combinations(n, k) {
        for cols in combinations(n, k) {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| sym[r][c].clone()).collect())
                .collect();
            if let Some(b) = BForm::from_poly(&poly_det(&sub)) {
                acc = Some(match acc {
                    None => b,
                    Some(a) => a.gcd(&b),
                });
                if acc.as_ref().is_some_and(BForm::is_constant) {
                    return acc;
                }
            }
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Parameters where the member rank drops below the generic rank of the
/// pencil. Parameters whose member is the zero matrix (degenerate, not a
/// quadric) are not reported.
pub fn rank_strata(pencil: &QuadricPencil) -> Result<Vec<RankStratum>> {
    let sym = pencil.symbolic();
    let n = pencil.size();
    // exact generic rank: largest k with a not-identically-zero k x k minor
    let gcds: Vec<Option<BForm>> = (0..=n)
        .map(|k| if k == 0 { None } else { minor_gcd(&sym, k) })
        .collect();
    let Some(generic) = (1..=n).rev().find(|&k| gcds[k].is_some()) else {
        return Ok(Vec::new()); // zero pencil
    };
    let g = gcds[generic].clone().unwrap();
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let entries_gcd = {
        let mut acc: Option<BForm> = None;
        for row in &sym {
            for e in row {
                if let Some(b) = BForm::from_poly(e) {
                    acc = Some(match acc {
                        None => b,
                        Some(a) => a.gcd(&b),
                    });
                }
            }
        }
        acc.expect("pencil has nonzero entries")
    };
    let mut strata: Vec<RankStratum> = Vec::new();
    // the root at (1:0)
    if g.mu_mult() > 0 {
        let member = pencil.member(&Rat::one(), &Rat::zero());
        let rank = member.rank();
        if rank > 0 {
            strata.push(RankStratum {
                parameter: StratumParam::Point(Rat::one(), Rat::zero()),
                rank,
            });
        }
    }
    let (mut roots, cofactor) = g.f.square_free_part().rational_roots();
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    for (t0, _) in roots {
        let member = pencil.member(&t0, &Rat::one());
        let rank = member.rank();
        if rank > 0 {
            strata.push(RankStratum {
                parameter: point_param(&t0),
                rank,
            });
        }
    }
    // irrational parameters: split the square-free cofactor by rank using the
    // lower minor gcds
    let mut cur = cofactor.clone();
    if cur.degree().unwrap_or(0) >= 1 {
        for k in (0..generic).rev() {
            if cur.degree().unwrap_or(0) < 1 {
                break;
            }
            let lower = if k == 0 {
                UniPoly::one()
            } else {
                gcds[k]
                    .as_ref()
                    .map(|b| b.f.clone())
                    .unwrap_or_else(UniPoly::zero)
            };
            let drop_further = if lower.is_zero() {
                cur.clone()
            } else {
                cur.gcd(&lower)
            };
            let exactly_k = cur.div_exact(&drop_further);
            if exactly_k.degree().unwrap_or(0) >= 1 {
                // skip pieces where the whole member matrix vanishes
                let degenerate = exactly_k.gcd(&entries_gcd.f);
                let honest = exactly_k.div_exact(&degenerate);
                if honest.degree().unwrap_or(0) >= 1 {
                    strata.push(RankStratum {
                        parameter: StratumParam::MinPoly(monic(&honest)),
                        rank: k,
                    });
                }
            }
            cur = drop_further;
        }
    }
    Ok(strata)
}

fn monic(p: &UniPoly) -> UniPoly {
    let inv = p.leading().expect("nonzero").recip();
    p.scale(&inv)
}

/// Canonical (lambda : mu) for a finite ratio t0 = lambda/mu: primitive
/// integer pair with positive mu.
fn point_param(t0: &Rat) -> StratumParam {
    StratumParam::Point(
        Rat::from_integer(t0.numer().clone()),
        Rat::from_integer(t0.denom().clone()),
    )
}
