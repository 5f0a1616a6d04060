//! Dense matrices over an exact field: echelon forms, rank, kernels, solving.
//!
//! Everything here is plain Gaussian elimination with exact pivots; sizes are
//! small (category Hom spaces, subspace bases), so no effort is spent on
//! asymptotics.

use super::field::Field;
use crate::error::{Error, Result};

/// A dense `rows × cols` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<K: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<K::Elem>,
}

impl<K: Field> Mat<K> {
    pub fn zero(k: &K, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &K, n: usize) -> Self {
        let mut m = Self::zero(k, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = k.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(k: &K, rows: &[Vec<K::Elem>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let _ = k;
        Mat::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
    }

    pub fn at(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut K::Elem {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, k: &K, other: &Mat<K>) -> Mat<K> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = k.zero();
            for t in 0..self.cols {
                acc = k.add(&acc, &k.mul(self.at(i, t), other.at(t, j)));
            }
            acc
        })
    }

    pub fn add(&self, k: &K, other: &Mat<K>) -> Mat<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| k.add(self.at(i, j), other.at(i, j)))
    }

    pub fn scale(&self, k: &K, c: &K::Elem) -> Mat<K> {
        Mat::from_fn(self.rows, self.cols, |i, j| k.mul(self.at(i, j), c))
    }

    pub fn neg(&self, k: &K) -> Mat<K> {
        Mat::from_fn(self.rows, self.cols, |i, j| k.neg(self.at(i, j)))
    }

    pub fn apply(&self, k: &K, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for j in 0..self.cols {
                    acc = k.add(&acc, &k.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self, k: &K) -> (Mat<K>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !k.is_zero(m.at(i, c))) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(r, j).clone();
                *m.at_mut(r, j) = m.at(pr, j).clone();
                *m.at_mut(pr, j) = tmp;
            }
            let inv = k.inv(m.at(r, c));
            for j in 0..m.cols {
                *m.at_mut(r, j) = k.mul(m.at(r, j), &inv);
            }
            for i in 0..m.rows {
                if i != r && !k.is_zero(m.at(i, c)) {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let t = k.mul(&f, m.at(r, j));
                        *m.at_mut(i, j) = k.sub(m.at(i, j), &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, k: &K) -> usize {
        self.rref(k).1.len()
    }

    /// Basis of the right kernel, one vector per row of the result.
    pub fn kernel_basis(&self, k: &K) -> Vec<Vec<K::Elem>> {
        let (r, pivots) = self.rref(k);
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(r.at(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `self · x = b`.
    pub fn solve(&self, k: &K, b: &[K::Elem]) -> Result<Vec<K::Elem>> {
        assert_eq!(self.rows, b.len());
        // Augment, reduce, read off.
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref(k);
        if pivots.contains(&self.cols) {
            return Err(Error::InconsistentSystem(format!(
                "{}x{} system has no solution",
                self.rows, self.cols
            )));
        }
        let mut x = vec![k.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Row-space basis (nonzero rows of the rref).
    pub fn row_basis(&self, k: &K) -> Vec<Vec<K::Elem>> {
        let (r, pivots) = self.rref(k);
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }
}

/// Rank of the span of `vectors` (each of length `dim`).
pub fn span_rank<K: Field>(k: &K, vectors: &[Vec<K::Elem>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_fn(vectors.len(), dim, |i, j| vectors[i][j].clone()).rank(k)
}
