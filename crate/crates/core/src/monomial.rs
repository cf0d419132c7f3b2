//! Monomials as fixed-length exponent vectors, plus the monomial orders.

use std::cmp::Ordering;

/// Exponent vector; the length always equals the ambient ring's variable count.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Total degree in the first `k` variables.
    pub fn prefix_degree(&self, k: usize) -> u32 {
        self.exps[..k].iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn try_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Intrinsic order = grevlex; used for canonical term storage.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::GrevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total orders on monomials compatible with multiplication.
///
/// `Elim(k)` is the block order eliminating the first `k` variables: degrees
/// in the first block dominate, grevlex breaks ties inside each block. Any
/// monomial touching an eliminated variable exceeds every monomial free of
/// them, which is the property elimination ideals need.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Elim(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Elim(k) => {
                let da = a.prefix_degree(k);
                let db = b.prefix_degree(k);
                da.cmp(&db)
                    .then_with(|| grevlex(&a.exps[..k], &b.exps[..k]))
                    .then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Stable name used in reports.
    pub fn tag(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elim(k) => format!("elim({k})"),
        }
    }
}

/// a > b iff deg a > deg b, or degrees tie and the last nonzero entry of
/// a - b is negative.
fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // smaller trailing exponent means larger monomial
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex_degree_two_chain() {
        // x^2 > xy > y^2 > xz > yz > z^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(MonomialOrder::GrevLex.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn lex_prefers_leading_variable() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])),
            Ordering::Greater
        );
    }

    #[test]
    fn elimination_property() {
        // any monomial containing an eliminated variable beats any free of them
        let order = MonomialOrder::Elim(2);
        assert_eq!(
            order.cmp(&m(&[0, 1, 0, 0]), &m(&[0, 0, 7, 7])),
            Ordering::Greater
        );
        assert_eq!(
            order.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 1, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn orders_respect_multiplication() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 1, 1]);
        let c = m(&[0, 3, 2]);
        for order in [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elim(1),
        ] {
            let ab = order.cmp(&a, &b);
            assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
        }
    }
}
