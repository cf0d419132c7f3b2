//! Buchberger's algorithm with Gebauer-Moeller pair pruning, reduced bases,
//! elimination, intersection and saturation.
//!
//! Reduction work is capped by a configurable step budget (default 10^6);
//! blowing the budget is an explicit `ResourceLimit` error, never a silently
//! wrong answer. Inputs here are desk scale (few variables, low degree), so
//! plain Buchberger with both classical criteria is the right tool.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Poly, Ring};
use crate::rat::Rat;

static DEFAULT_MAX_STEPS: AtomicU64 = AtomicU64::new(1_000_000);
static TOTAL_REDUCTION_STEPS: AtomicU64 = AtomicU64::new(0);
static TOTAL_GB_RUNS: AtomicU64 = AtomicU64::new(0);

/// Sets the process-wide default reduction-step budget.
pub fn set_default_max_steps(steps: u64) {
    DEFAULT_MAX_STEPS.store(steps, AtomicOrdering::Relaxed);
}

pub fn default_max_steps() -> u64 {
    DEFAULT_MAX_STEPS.load(AtomicOrdering::Relaxed)
}

/// Monotonic engine counters, for report diagnostics: (basis runs, reduction steps).
pub fn engine_counters() -> (u64, u64) {
    (
        TOTAL_GB_RUNS.load(AtomicOrdering::Relaxed),
        TOTAL_REDUCTION_STEPS.load(AtomicOrdering::Relaxed),
    )
}

/// A polynomial ideal with write-once caching of reduced Groebner bases per order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Vec<Poly>>>>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

impl Ideal {
    /// Builds an ideal, silently dropping zero generators.
    pub fn new(ring: Ring, gens: Vec<Poly>) -> Ideal {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(*g.ring() == ring, "generator outside the ring");
        }
        Ideal {
            ring,
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn all_generators_homogeneous(&self) -> bool {
        self.gens
            .iter()
            .all(|g| !matches!(g.homogeneity(), crate::poly::Homogeneity::Mixed))
    }

    /// The unique reduced Groebner basis for `order` (cached).
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Poly>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(
            &self.ring,
            &self.gens,
            order,
            default_max_steps(),
        )?);
        self.cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// Unique remainder of `f` modulo the reduced basis; zero iff `f` is a member.
    pub fn normal_form(&self, f: &Poly, order: MonomialOrder) -> Result<Poly> {
        f.same_ring(&self.ring.zero())?;
        let gb = self.groebner_basis(order)?;
        let basis: Vec<OrdPoly> = gb.iter().map(|g| OrdPoly::from_poly(g, order)).collect();
        let mut steps = 0u64;
        let r = reduce_full(
            OrdPoly::from_poly(f, order),
            &basis,
            order,
            &mut steps,
            default_max_steps(),
        )?;
        Ok(r.into_poly(&self.ring))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f, MonomialOrder::GrevLex)?.is_zero())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(gb.len() == 1 && gb[0].total_degree() == Some(0))
    }

    /// Equality via coincidence of reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let a = self.groebner_basis(MonomialOrder::GrevLex)?;
        let b = other.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(*a == *b)
    }

    /// Intersection with the subring dropping the first `k` variables,
    /// computed through a block-elimination basis. The result lives in the
    /// smaller ring; eliminating every variable leaves only the constants,
    /// reported over the unchanged ring (the zero ideal unless 1 is a member).
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        assert!(k <= self.ring.nvars());
        if k == 0 {
            return Ok(self.clone());
        }
        if k == self.ring.nvars() {
            let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
            let constants: Vec<Poly> = gb
                .iter()
                .filter(|g| g.total_degree() == Some(0))
                .cloned()
                .collect();
            return Ok(Ideal::new(self.ring.clone(), constants));
        }
        let gb = self.groebner_basis(MonomialOrder::Elim(k))?;
        let sub = Ring::new(self.ring.vars()[k..].to_vec());
        let kept: Vec<Poly> = gb
            .iter()
            .filter(|g| g.terms().all(|(m, _)| m.prefix_degree(k) == 0))
            .map(|g| project_poly(g, k, &sub))
            .collect();
        Ok(Ideal::new(sub, kept))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::new(self.ring.clone(), vec![]));
        }
        let (ext, t) = extend_ring(&self.ring);
        let one_minus_t = ext.one().sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(lift_poly(g, &ext).mul(&t));
        }
        for h in &other.gens {
            gens.push(lift_poly(h, &ext).mul(&one_minus_t));
        }
        let big = Ideal::new(ext, gens);
        let cut = big.eliminate(1)?;
        Ok(Ideal::new(self.ring.clone(), cut.gens))
    }

    /// (I : f^inf) by the auxiliary-variable method: append t, add 1 - t*f,
    /// eliminate t.
    pub fn saturate_poly(&self, f: &Poly) -> Result<Ideal> {
        f.same_ring(&self.ring.zero())?;
        if f.is_zero() {
            return Err(Error::ZeroInput);
        }
        if f.total_degree() == Some(0) {
            return Ok(self.clone());
        }
        let (ext, t) = extend_ring(&self.ring);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| lift_poly(g, &ext)).collect();
        gens.push(ext.one().sub(&t.mul(&lift_poly(f, &ext))));
        let big = Ideal::new(ext, gens);
        let cut = big.eliminate(1)?;
        Ok(Ideal::new(self.ring.clone(), cut.gens))
    }

    /// (I : J^inf) as the intersection of the single-generator saturations.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::ZeroInput);
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let s = self.saturate_poly(f)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// Saturation by the irrelevant maximal ideal of the ring.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        let vars: Vec<Poly> = (0..self.ring.nvars()).map(|i| self.ring.var(i)).collect();
        self.saturate(&Ideal::new(self.ring.clone(), vars))
    }
}

/// Appends a fresh auxiliary variable in front of the ring.
fn extend_ring(ring: &Ring) -> (Ring, Poly) {
    let mut name = "t".to_string();
    let mut n = 0usize;
    while ring.index_of(&name).is_some() {
        name = format!("t{n}");
        n += 1;
    }
    let mut vars = vec![name];
    vars.extend(ring.vars().iter().cloned());
    let ext = Ring::new(vars);
    let t = ext.var(0);
    (ext, t)
}

/// Re-expresses `f` in a ring with `k` extra leading variables.
pub(crate) fn lift_poly(f: &Poly, ext: &Ring) -> Poly {
    let k = ext.nvars() - f.ring().nvars();
    Poly::from_terms(
        ext.clone(),
        f.terms().map(|(m, c)| {
            let mut exps = vec![0u32; k];
            exps.extend_from_slice(m.exps());
            (Monomial::from_exps(exps), c.clone())
        }),
    )
}

/// Drops the first `k` (zero-exponent) variables of every monomial.
pub(crate) fn project_poly(f: &Poly, k: usize, sub: &Ring) -> Poly {
    Poly::from_terms(
        sub.clone(),
        f.terms().map(|(m, c)| {
            debug_assert_eq!(m.prefix_degree(k), 0);
            (Monomial::from_exps(m.exps()[k..].to_vec()), c.clone())
        }),
    )
}

// ---------------------------------------------------------------------------
// engine internals: term vectors sorted ascending in the active order
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct OrdPoly {
    /// ascending, so the leading term is `terms.last()`
    terms: Vec<(Monomial, Rat)>,
}

impl OrdPoly {
    fn from_poly(p: &Poly, order: MonomialOrder) -> OrdPoly {
        let mut terms: Vec<(Monomial, Rat)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(a, b));
        OrdPoly { terms }
    }

    fn into_poly(self, ring: &Ring) -> Poly {
        Poly::from_terms(ring.clone(), self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &Rat {
        &self.terms.last().unwrap().1
    }

    /// self - c * m * g, merging sorted term lists.
    fn sub_scaled(&self, g: &OrdPoly, m: &Monomial, c: &Rat, order: MonomialOrder) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < g.terms.len() {
            if i == self.terms.len() {
                let (gm, gc) = &g.terms[j];
                out.push((gm.mul(m), -(gc * c)));
                j += 1;
                continue;
            }
            if j == g.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let gm = g.terms[j].0.mul(m);
            match order.cmp(&self.terms[i].0, &gm) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((gm, -(&g.terms[j].1 * c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = &self.terms[i].1 - &g.terms[j].1 * c;
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        OrdPoly { terms: out }
    }

    /// Integer coefficients, content 1, positive leading coefficient.
    fn make_primitive(&mut self) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Signed;
        if self.terms.is_empty() {
            return;
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        let mut scale = Rat::new(den, num);
        if self.lc().is_negative() {
            scale = -scale;
        }
        for (_, c) in &mut self.terms {
            *c *= &scale;
        }
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let inv = self.lc().recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }
}

fn reduce_full(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: MonomialOrder,
    steps: &mut u64,
    max_steps: u64,
) -> Result<OrdPoly> {
    let mut work = f;
    let mut rem: Vec<(Monomial, Rat)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.terms.last().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            if g.lm().divides(&lm) {
                *steps += 1;
                TOTAL_REDUCTION_STEPS.fetch_add(1, AtomicOrdering::Relaxed);
                if *steps > max_steps {
                    return Err(Error::ResourceLimit { steps: *steps });
                }
                let m = lm.try_div(g.lm()).unwrap();
                let c = &lc / g.lc();
                work = work.sub_scaled(g, &m, &c, order);
                continue 'outer;
            }
        }
        work.terms.pop();
        rem.push((lm, lc));
    }
    rem.reverse();
    Ok(OrdPoly { terms: rem })
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// The unique reduced Groebner basis of `gens` under `order`.
pub fn buchberger(
    ring: &Ring,
    gens: &[Poly],
    order: MonomialOrder,
    max_steps: u64,
) -> Result<Vec<Poly>> {
    TOTAL_GB_RUNS.fetch_add(1, AtomicOrdering::Relaxed);
    let mut steps = 0u64;
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut og = OrdPoly::from_poly(g, order);
        og.make_primitive();
        add_element(&mut basis, &mut pairs, og, order);
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree, then smallest lcm in the order
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let mut r = reduce_full(s, &basis, order, &mut steps, max_steps)?;
        if !r.is_zero() {
            r.make_primitive();
            add_element(&mut basis, &mut pairs, r, order);
        }
    }
    interreduce(ring, basis, order, &mut steps, max_steps)
}

fn spoly(f: &OrdPoly, g: &OrdPoly, order: MonomialOrder) -> OrdPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.try_div(f.lm()).unwrap();
    let mg = lcm.try_div(g.lm()).unwrap();
    // g.lc * (m_f * f) - f.lc * (m_g * g); the leads cancel
    let scaled_f = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mf), c * g.lc()))
            .collect(),
    };
    scaled_f.sub_scaled(g, &mg, f.lc(), order)
}

/// Gebauer-Moeller pair update on appending a basis element.
fn add_element(basis: &mut Vec<OrdPoly>, pairs: &mut Vec<Pair>, h: OrdPoly, order: MonomialOrder) {
    let _ = order;
    let t = basis.len();
    let mt = h.lm().clone();
    // prune old pairs covered by the newcomer
    pairs.retain(|p| {
        let covered = mt.divides(&p.lcm)
            && basis[p.i].lm().lcm(&mt) != p.lcm
            && basis[p.j].lm().lcm(&mt) != p.lcm;
        !covered
    });
    // candidate pairs (i, t), criterion M: drop strictly dominated lcms
    let cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: basis[i].lm().lcm(&mt),
        })
        .collect();
    let mut keep: Vec<Pair> = Vec::new();
    for p in &cand {
        let dominated = cand.iter().any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm));
        if !dominated {
            keep.push(p.clone());
        }
    }
    // criterion F/B: one representative per lcm, and an entire class dies
    // when some member has coprime leading monomials
    let mut by_lcm: Vec<(Monomial, Vec<Pair>)> = Vec::new();
    for p in keep {
        match by_lcm.iter_mut().find(|(m, _)| *m == p.lcm) {
            Some((_, v)) => v.push(p),
            None => by_lcm.push((p.lcm.clone(), vec![p])),
        }
    }
    for (_, class) in by_lcm {
        if class.iter().any(|p| basis[p.i].lm().coprime(&mt)) {
            continue;
        }
        pairs.push(class.into_iter().next().unwrap());
    }
    basis.push(h);
}

fn interreduce(
    ring: &Ring,
    basis: Vec<OrdPoly>,
    order: MonomialOrder,
    steps: &mut u64,
    max_steps: u64,
) -> Result<Vec<Poly>> {
    // minimalize: drop elements whose lead another lead divides
    let mut minimal: Vec<OrdPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for (i, g) in sorted.iter().enumerate() {
        let redundant = sorted
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    // tail-reduce to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<OrdPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let mut r = reduce_full(minimal[i].clone(), &others, order, steps, max_steps)?;
            r.make_primitive();
            if r.terms != minimal[i].terms {
                minimal[i] = r;
                changed = true;
            }
        }
        minimal.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }
    for p in &mut minimal {
        p.make_monic();
    }
    minimal.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(minimal.into_iter().map(|p| p.into_poly(ring)).collect())
}
