//! Dense exact-rational linear algebra.
//!
//! Rank, reduced row-echelon form, and right-kernel bases for the matrices
//! arising from graded pieces. Elimination is fraction-free (Bareiss): each
//! row is first scaled to integers, the forward pass works on `BigInt` minors
//! so intermediate entries stay bounded, and a final division pass produces
//! the rational reduced form. Everything is deterministic: leftmost-nonzero
//! pivot, rows processed in the given order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::rational::Rational;

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::RaggedMatrix);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for small integer matrices.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&n| Rational::from_integer(BigInt::from(n))))
            .collect();
        RatMatrix {
            rows: rows.len(),
            cols: rows.first().map_or(0, |r| r.len()),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let (_, pivots) = bareiss_echelon(self.to_integer_rows(), self.rows, self.cols);
        pivots.len()
    }

    /// Reduced row-echelon form together with the pivot column list.
    ///
    /// The result is the canonical RREF: nonzero rows first, each with pivot
    /// 1 and zeros elsewhere in its pivot column.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let (ech, pivots) = bareiss_echelon(self.to_integer_rows(), self.rows, self.cols);
        let cols = self.cols;
        let rank = pivots.len();
        let mut data = vec![Rational::zero(); self.rows * cols];
        // division pass: normalize each pivot row to pivot 1
        for (i, &pc) in pivots.iter().enumerate() {
            let pivot = Rational::from_integer(ech[i * cols + pc].clone());
            for j in pc..cols {
                let e = &ech[i * cols + j];
                if !e.is_zero() {
                    data[i * cols + j] = Rational::from_integer(e.clone()) / &pivot;
                }
            }
        }
        // back-elimination above each pivot, bottom pivot first
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let (above, rest) = data.split_at_mut(i * cols);
            let pivot_row = &rest[..cols];
            par::for_each_row_mut(above, cols, |row| {
                if !row[pc].is_zero() {
                    let factor = std::mem::replace(&mut row[pc], Rational::zero());
                    for j in pc + 1..cols {
                        if !pivot_row[j].is_zero() {
                            row[j] -= &factor * &pivot_row[j];
                        }
                    }
                }
            });
        }
        (
            RatMatrix {
                rows: self.rows,
                cols,
                data,
            },
            pivots,
        )
    }

    /// Basis of the right kernel.
    ///
    /// Normalization: each free variable is set to 1 in turn, pivot variables
    /// are back-substituted from the RREF; the basis is ordered by free-column
    /// index.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        nullspace_from_rref(&rref, &pivots)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = RatMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.at(r, n + c).clone());
            }
        }
        Some(inv)
    }

    fn to_integer_rows(&self) -> Vec<BigInt> {
        let cols = self.cols;
        let mut out = vec![BigInt::zero(); self.rows * cols];
        let chunks: Vec<(usize, &[Rational])> = self.data.chunks(cols.max(1)).enumerate().collect();
        let rows = par::map_collect(chunks, |(_, row)| clear_denominators(row));
        for (r, row) in rows.into_iter().enumerate() {
            out[r * cols..(r + 1) * cols].clone_from_slice(&row);
        }
        out
    }
}

/// Scale a rational row by the lcm of its denominators.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in row {
        if !e.is_zero() {
            lcm = lcm.lcm(e.denom());
        }
    }
    row.iter()
        .map(|e| {
            if e.is_zero() {
                BigInt::zero()
            } else {
                e.numer() * (&lcm / e.denom())
            }
        })
        .collect()
}

/// Fraction-free forward elimination. Returns the echelon data and the pivot
/// column list; rows beyond the rank are zero.
fn bareiss_echelon(mut data: Vec<BigInt>, rows: usize, cols: usize) -> (Vec<BigInt>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(r * cols + j, p * cols + j);
            }
        }
        let (upper, lower) = data.split_at_mut((r + 1) * cols);
        let pivot_row = &upper[r * cols..];
        let pivot = pivot_row[c].clone();
        par::for_each_row_mut(lower, cols, |row| {
            let head = std::mem::replace(&mut row[c], BigInt::zero());
            if head.is_zero() {
                // Bareiss still rescales zero-headed rows: entries stay minors
                // and later divisions stay exact.
                for e in row[c + 1..].iter_mut() {
                    if !e.is_zero() {
                        let t = &pivot * &*e;
                        *e = t / &prev;
                    }
                }
            } else {
                for j in c + 1..cols {
                    let t = &pivot * &row[j] - &head * &pivot_row[j];
                    row[j] = t / &prev;
                }
            }
        });
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (data, pivots)
}

fn nullspace_from_rref(rref: &RatMatrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = rref.cols();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                let e = rref.at(i, fc);
                if !e.is_zero() {
                    v[pc] = -e.clone();
                }
            }
            v
        })
        .collect()
}

/// Row space of a set of vectors, kept in canonical reduced form; supports
/// cheap membership tests and deterministic greedy completion.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        let (rref, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
        RowSpace {
            cols: m.cols(),
            rows,
            pivots,
        }
    }

    pub fn from_vectors(cols: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        if rows.is_empty() {
            return RowSpace::new(cols);
        }
        Self::from_matrix(&RatMatrix::from_rows(rows).expect("equal row lengths"))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Pivot column indices, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the row space.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !v[pc].is_zero() {
                let factor = std::mem::replace(&mut v[pc], Rational::zero());
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() {
                        v[j] -= &factor * &row[j];
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Insert `v` if it enlarges the span; returns whether it did. The
    /// internal form stays canonical, so the result does not depend on
    /// insertion order.
    pub fn try_insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let lead = v[pc].clone();
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e /= &lead;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let factor = std::mem::replace(&mut row[pc], Rational::zero());
                for j in pc + 1..self.cols {
                    if !v[j].is_zero() {
                        row[j] -= &factor * &v[j];
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }
}
