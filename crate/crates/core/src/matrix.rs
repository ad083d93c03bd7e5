//! Polynomial and constant matrices: Jacobians, minors, seeded random
//! constant matrices, and rank over the rationals.

use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{rat_int, Poly, Rat};

/// Rectangular matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(if r == c {
                    Poly::one(nvars)
                } else {
                    Poly::zero(nvars)
                });
            }
        }
        PolyMatrix::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    /// Determinant of the square submatrix picked by `rows`/`cols`, by
    /// cofactor expansion along the first selected row.
    fn subdet(&self, rows: &[usize], cols: &[usize]) -> Poly {
        debug_assert_eq!(rows.len(), cols.len());
        let nvars = self.entries[0].nvars();
        match rows.len() {
            0 => Poly::one(nvars),
            1 => self.at(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Poly::zero(nvars);
                let rest_rows = &rows[1..];
                for (j, &c) in cols.iter().enumerate() {
                    let e = self.at(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &cc)| cc)
                        .collect();
                    let minor = self.subdet(rest_rows, &rest_cols);
                    let signed = if j % 2 == 0 { minor } else { minor.neg() };
                    acc = acc.add(&e.mul(&signed));
                }
                acc
            }
        }
    }

    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let rows: Vec<usize> = (0..self.rows).collect();
        self.subdet(&rows, &rows)
    }

    /// All k-by-k minors, enumerated over row subsets then column subsets in
    /// lexicographic order. The enumeration order is part of the contract:
    /// seeded random combinations of minors are reproducible.
    pub fn minors_of_size(&self, k: usize) -> Result<Vec<Poly>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::Degenerate(format!(
                "minor size {k} out of range for {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = Vec::new();
        for rows in subsets(self.rows, k) {
            for cols in subsets(self.cols, k) {
                out.push(self.subdet(&rows, &cols));
            }
        }
        Ok(out)
    }

    /// Matrix product `A * self` with a constant matrix on the left.
    pub fn left_mul_const(&self, a: &ConstMatrix) -> PolyMatrix {
        assert_eq!(a.cols, self.rows);
        let nvars = self.entries[0].nvars();
        let mut entries = Vec::with_capacity(a.rows * self.cols);
        for r in 0..a.rows {
            for c in 0..self.cols {
                let mut acc = Poly::zero(nvars);
                for k in 0..self.rows {
                    acc = acc.add(&self.at(k, c).scale(a.at(r, k)));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(a.rows, self.cols, entries)
    }

    /// Matrix product `self * B` with a constant matrix on the right.
    pub fn right_mul_const(&self, b: &ConstMatrix) -> PolyMatrix {
        assert_eq!(self.cols, b.rows);
        let nvars = self.entries[0].nvars();
        let mut entries = Vec::with_capacity(self.rows * b.cols);
        for r in 0..self.rows {
            for c in 0..b.cols {
                let mut acc = Poly::zero(nvars);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).scale(b.at(k, c)));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(self.rows, b.cols, entries)
    }
}

/// The Jacobian matrix (d f_i / d x_j) of the given equations with respect to
/// the listed variable indices; rows follow the equation order.
pub fn jacobian_matrix(equations: &[Poly], vars: &[usize]) -> Result<PolyMatrix> {
    if equations.is_empty() {
        return Err(Error::Degenerate("empty equation list".into()));
    }
    let mut entries = Vec::with_capacity(equations.len() * vars.len());
    for f in equations {
        for &v in vars {
            entries.push(f.derivative(v));
        }
    }
    Ok(PolyMatrix::new(equations.len(), vars.len(), entries))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Rectangular matrix of rational constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl ConstMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        ConstMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| rat_int(v)))
            .collect();
        ConstMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    /// Applies the matrix to a vector of polynomials: row i of the result is
    /// sum_j a_ij * f_j.
    pub fn apply(&self, polys: &[Poly]) -> Vec<Poly> {
        assert_eq!(self.cols, polys.len());
        let nvars = polys[0].nvars();
        (0..self.rows)
            .map(|r| {
                let mut acc = Poly::zero(nvars);
                for (j, f) in polys.iter().enumerate() {
                    acc = acc.add(&f.scale(self.at(r, j)));
                }
                acc
            })
            .collect()
    }

    /// Rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot = (rank..self.rows).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(rank, p);
            let inv = Rat::one() / &m[rank][col];
            for c in col..self.cols {
                let v = &m[rank][c] * &inv;
                m[rank][c] = v;
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..self.cols {
                        let v = &m[r][c] - &m[rank][c] * &f;
                        m[r][c] = v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Seeded random constant matrix with entries uniform over the nonzero
/// integers in [-bound, bound]. Deterministic given (seed, rows, cols, bound).
pub fn random_matrix(rows: usize, cols: usize, seed: u64, bound: u32) -> ConstMatrix {
    assert!(bound >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed ^ (rows as u64).wrapping_mul(0x9E3779B97F4A7C15)
            ^ (cols as u64).wrapping_mul(0xC2B2AE3D27D4EB4F)
            ^ (bound as u64).wrapping_mul(0x165667B19E3779F9),
    );
    let entries = (0..rows * cols)
        .map(|_| {
            let mag = rng.gen_range(1..=bound) as i64;
            let sign = if rng.gen::<bool>() { 1 } else { -1 };
            rat_int(sign * mag)
        })
        .collect();
    ConstMatrix::new(rows, cols, entries)
}

/// Derives a purpose-specific seed from a base seed so independent random
/// draws inside one trial do not share a stream.
pub fn sub_seed(seed: u64, purpose: u64) -> u64 {
    seed.wrapping_mul(0x9E3779B97F4A7C15)
        .wrapping_add(purpose.wrapping_mul(0x2545F4914F6CDD1D))
}
