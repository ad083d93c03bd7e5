//! Monomials (exponent vectors) and monomial orders.

use std::cmp::Ordering;

/// A monomial in a ring with a fixed number of variables, stored as its
/// exponent vector. The structural `Ord` (lexicographic on the vector) is only
/// used for deterministic map storage; order-sensitive comparisons go through
/// [`MonomialOrder::cmp`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The monomial x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
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

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders: one global order, two local orders (1 greater than every
/// variable), and a block-elimination order whose leading block is an explicit
/// set of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Global degree-reverse-lexicographic order.
    DegRevLex,
    /// Local order: smaller total degree wins, ties broken reverse-lex.
    NegDegRevLex,
    /// Local order: smaller total degree wins, ties broken lexicographically.
    NegDegLex,
    /// Global elimination order: degrevlex on the block variables first, then
    /// degrevlex on the rest. A Groebner basis under this order intersected
    /// with the block-free subring generates the elimination ideal.
    Elimination { block: Vec<usize> },
    /// Mixed elimination order for localized rings: degrevlex on the block
    /// variables first (global there), then NegDegRevLex on the rest (local
    /// there). A standard basis under this order, restricted to its
    /// block-free elements, generates the intersection of the ideal with the
    /// local ring at the origin of the remaining variables.
    LocalElimination { block: Vec<usize> },
    /// Internal order behind standard-basis computations by homogenization
    /// (Lazard's method): total degree over all variables — including the
    /// homogenizing variable, which by convention is the last one — decides
    /// first, ties fall back to the wrapped local order on the remaining
    /// variables. Degree-compatible, hence a well-order; on the dehomogenized
    /// leading terms it agrees with the wrapped local order.
    Homogenized { inner: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn is_global(&self) -> bool {
        matches!(
            self,
            MonomialOrder::DegRevLex
                | MonomialOrder::Elimination { .. }
                | MonomialOrder::Homogenized { .. }
        )
    }

    pub fn is_local(&self) -> bool {
        !self.is_global()
    }

    /// Compares two monomials; `Greater` means `a` is larger in the order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        self.cmp_exps(a.exps(), b.exps())
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::NegDegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                match da.cmp(&db) {
                    Ordering::Equal => revlex_tie(a, b),
                    ord => ord.reverse(),
                }
            }
            MonomialOrder::NegDegLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                match da.cmp(&db) {
                    Ordering::Equal => lex_tie(a, b),
                    ord => ord.reverse(),
                }
            }
            MonomialOrder::Elimination { block } => {
                // degrevlex on the block part, then degrevlex on the rest,
                // comparing in place: this runs in the innermost loops of
                // every elimination, so no subvectors are materialized
                let da: u32 = block.iter().map(|&i| a[i]).sum();
                let db: u32 = block.iter().map(|&i| b[i]).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for idx in (0..block.len()).rev() {
                            let (x, y) = (a[block[idx]], b[block[idx]]);
                            if x != y {
                                return y.cmp(&x);
                            }
                        }
                        let ra = a.iter().sum::<u32>() - da;
                        let rb = b.iter().sum::<u32>() - db;
                        match ra.cmp(&rb) {
                            Ordering::Equal => {
                                for i in (0..a.len()).rev() {
                                    if block.contains(&i) {
                                        continue;
                                    }
                                    if a[i] != b[i] {
                                        return b[i].cmp(&a[i]);
                                    }
                                }
                                Ordering::Equal
                            }
                            ord => ord,
                        }
                    }
                    ord => ord,
                }
            }
            MonomialOrder::LocalElimination { block } => {
                let da: u32 = block.iter().map(|&i| a[i]).sum();
                let db: u32 = block.iter().map(|&i| b[i]).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for idx in (0..block.len()).rev() {
                            let (x, y) = (a[block[idx]], b[block[idx]]);
                            if x != y {
                                return y.cmp(&x);
                            }
                        }
                        // local on the rest: smaller degree wins
                        let ra = a.iter().sum::<u32>() - da;
                        let rb = b.iter().sum::<u32>() - db;
                        match ra.cmp(&rb) {
                            Ordering::Equal => {
                                for i in (0..a.len()).rev() {
                                    if block.contains(&i) {
                                        continue;
                                    }
                                    if a[i] != b[i] {
                                        return b[i].cmp(&a[i]);
                                    }
                                }
                                Ordering::Equal
                            }
                            ord => ord.reverse(),
                        }
                    }
                    ord => ord,
                }
            }
            MonomialOrder::Homogenized { inner } => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                match da.cmp(&db) {
                    Ordering::Equal => {
                        inner.cmp_exps(&a[..a.len() - 1], &b[..b.len() - 1])
                    }
                    ord => ord,
                }
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => revlex_tie(a, b),
        ord => ord,
    }
}

/// Reverse-lex tie break: scan from the last variable; the monomial with the
/// smaller exponent at the first difference is the larger one.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x > y > z in three variables
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x*z vs y^2: same degree, revlex compares last exponent
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // every variable beats 1
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn local_orders_put_one_on_top() {
        for o in [MonomialOrder::NegDegRevLex, MonomialOrder::NegDegLex] {
            assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
            assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_block_dominates() {
        // eliminate variable 2 (say u): any monomial containing u beats any without
        let o = MonomialOrder::Elimination { block: vec![2] };
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_into(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
    }
}
