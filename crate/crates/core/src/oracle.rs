//! Independent verification paths: the delta invariant of a numerical
//! semigroup (for irreducible monomial curves), the 2*delta - r + 1 Milnor
//! formula, and a truncated Macaulay-matrix colength computed by pure linear
//! algebra, with no Groebner machinery involved.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Exponents of a monomial parametrization u -> (u^a1, ..., u^an). Requires
/// gcd 1 so that the parametrization is birational onto its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupSpec {
    generators: Vec<u64>,
}

impl SemigroupSpec {
    pub fn new(generators: Vec<u64>) -> Result<Self> {
        if generators.is_empty() || generators.iter().any(|&g| g == 0) {
            return Err(Error::Degenerate(
                "semigroup generators must be positive".into(),
            ));
        }
        let g = generators.iter().fold(0u64, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(Error::Degenerate(format!(
                "semigroup generators have gcd {g}; the parametrization is not birational"
            )));
        }
        Ok(SemigroupSpec { generators })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }
}

/// Delta invariant of the numerical semigroup: the number of gaps (natural
/// numbers not representable as non-negative combinations of the generators),
/// together with the ascending gap list. The scan stops once max(generators)
/// consecutive representable integers have been seen, which certifies that
/// everything beyond is representable.
pub fn semigroup_delta(spec: &SemigroupSpec) -> (u64, Vec<u64>) {
    let max_gen = *spec.generators.iter().max().unwrap() as usize;
    let mut representable = vec![false];
    representable[0] = true;
    let mut gaps = Vec::new();
    let mut run = 1usize; // consecutive representable count, seeded by 0
    let mut k = 1usize;
    while run < max_gen {
        let hit = spec
            .generators
            .iter()
            .any(|&g| k >= g as usize && representable[k - g as usize]);
        representable.push(hit);
        if hit {
            run += 1;
        } else {
            run = 0;
            gaps.push(k as u64);
        }
        k += 1;
    }
    (gaps.len() as u64, gaps)
}

/// Buchweitz-Greuel formula mu = 2*delta - r + 1 for a reduced curve with r
/// branches.
pub fn milnor_from_delta(delta: u64, branches: u64) -> u64 {
    assert!(branches >= 1, "a curve has at least one branch");
    let mu = 2 * delta as i64 - branches as i64 + 1;
    assert!(mu >= 0, "2*delta - r + 1 must be non-negative for a curve");
    mu as u64
}

/// Dimension of R/(I + m^D) as a rational vector space, computed by
/// row-reducing the Macaulay matrix of generator multiples truncated below
/// degree D. `stable` reports whether the value is unchanged from cap D-1;
/// once stable, the value equals the colength of I at the origin.
pub fn truncated_colength(ideal: &Ideal, cap: u32) -> (u64, bool) {
    assert!(cap >= 1);
    let value = truncated_value(ideal, cap);
    let prev = if cap == 1 {
        0
    } else {
        truncated_value(ideal, cap - 1)
    };
    (value, value == prev)
}

fn truncated_value(ideal: &Ideal, cap: u32) -> u64 {
    let n = ideal.ring.nvars();
    let monos = monomials_below(n, cap);
    let index: std::collections::HashMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in ideal.gens.iter().filter(|g| !g.is_zero()) {
        for m in &monos {
            let prod = g.mul_monomial(m);
            let mut row = vec![BigInt::zero(); monos.len()];
            let mut lcm = BigInt::one();
            for (pm, c) in prod.terms() {
                if pm.degree() < cap {
                    lcm = lcm.lcm(c.denom());
                }
            }
            let mut nonzero = false;
            for (pm, c) in prod.terms() {
                if pm.degree() < cap {
                    let scaled = c * num::BigRational::from_integer(lcm.clone());
                    debug_assert!(scaled.is_integer());
                    row[index[pm]] = scaled.to_integer();
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    monos.len() as u64 - integer_rank(rows)
}

/// All monomials of total degree below `cap`, in a deterministic order.
fn monomials_below(nvars: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    collect_monomials(&mut exps, 0, cap, &mut out);
    out
}

fn collect_monomials(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..remaining {
        exps[pos] = e;
        collect_monomials(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Rank of an integer matrix by fraction-free (Bareiss-style) elimination.
fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> u64 {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        // find a pivot with the smallest nonzero magnitude to limit growth
        let pivot = (row..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].magnitude().clone());
        let Some(p) = pivot else { continue };
        rows.swap(row, p);
        let pv = rows[row][col].clone();
        for r in row + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..cols {
                let v = &rows[r][c] * &pv - &rows[row][c] * &f;
                rows[r][c] = v;
            }
            // keep entries small: divide the row by its content
            let mut content = BigInt::zero();
            for c in col..cols {
                content = content.gcd(&rows[r][c]);
            }
            if content > BigInt::one() {
                for c in col..cols {
                    rows[r][c] = &rows[r][c] / &content;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rank as u64
}
