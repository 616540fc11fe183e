//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Self::from_fn(rows, cols, |r, c| q(vals[r * cols + c]))
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else { continue };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a.get(row, col).recip();
        for c in col..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let f = a.get(r, col).clone();
            if f.is_zero() {
                continue;
            }
            for c in col..a.cols {
                let pv = a.get(row, c);
                if pv.is_zero() {
                    continue;
                }
                let v = a.get(r, c) - &f * pv;
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &Mat) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); m.cols];
        v[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_subset(vectors: &[Vec<Q>], dim: usize) -> Vec<usize> {
    // Incremental echelon basis: (pivot position, normalised vector).
    let mut echelon: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        assert_eq!(v.len(), dim);
        let mut w = v.clone();
        for (p, b) in &echelon {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = w[p].recip();
            for x in w.iter_mut() {
                *x *= &inv;
            }
            echelon.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

/// Coordinates of `target` in terms of the (independent) columns of `basis`,
/// or `None` if it is outside their span.
pub fn solve(basis: &Mat, target: &[Q]) -> Option<Vec<Q>> {
    let n = basis.cols;
    let aug = Mat::from_fn(basis.rows, n + 1, |r, c| if c < n { basis.get(r, c).clone() } else { target[r].clone() });
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red.get(row, n).clone();
    }
    Some(x)
}
