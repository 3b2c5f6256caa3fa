//! Dense exact linear algebra over the rationals.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Row-major matrix with rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Q) {
        let e = &mut self.data[i * self.cols + j];
        *e += v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            if !inv.is_one() {
                for j in c..cols {
                    let x = &mut self.data[r * cols + j];
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
            }
            let pivot_row: Vec<(usize, Q)> = (c..cols)
                .filter(|&j| !self.get(r, j).is_zero())
                .map(|j| (j, self.get(r, j).clone()))
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let x = &mut self.data[i * cols + j];
                    *x -= &f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (k, &p) in pivots.iter().enumerate() {
                let x = r.get(k, free);
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_cols(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Incremental row echelon basis of a subspace of `Q^dim`.
///
/// Rows are kept reduced against earlier pivots, so reducing a vector in
/// insertion order never reintroduces an eliminated pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn from_vectors(dim: usize, vs: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        debug_assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((p, v));
        true
    }

    /// A basis of the span (the stored echelon rows).
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Coordinates of `v` in the given linearly independent `basis`.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(Vec::new()) } else { None };
    }
    Matrix::from_cols(v.len(), basis).solve(v)
}

/// Solves many right-hand sides against one basis by a single elimination.
pub struct CoordSolver {
    dim: usize,
    // rref of [basis^T | I] style data: pivot rows expressing coordinates
    pivots: Vec<usize>,
    reduced: Matrix,
    nbasis: usize,
}

impl CoordSolver {
    pub fn new(dim: usize, basis: &[Vec<Q>]) -> Self {
        let a = Matrix::from_cols(dim, basis);
        // Row-reduce [A | I]; the left block gives pivots, the right block
        // records the row operations so any b can be solved by one product.
        let (r, pivots) = a.hstack(&Matrix::identity(dim)).rref();
        let pivots: Vec<usize> = pivots.into_iter().filter(|&p| p < basis.len()).collect();
        assert_eq!(pivots.len(), basis.len(), "basis vectors are dependent");
        CoordSolver { dim, pivots, reduced: r, nbasis: basis.len() }
    }

    pub fn solve(&self, v: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(v.len(), self.dim);
        let n = self.nbasis;
        // rows beyond the rank must annihilate v
        let apply = |row: usize| -> Q {
            let mut s = Q::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let c = self.reduced.get(row, n + j);
                    if !c.is_zero() {
                        s += c * x;
                    }
                }
            }
            s
        };
        for row in self.pivots.len()..self.dim {
            if !apply(row).is_zero() {
                return None;
            }
        }
        let mut out = vec![Q::zero(); n];
        for (k, &p) in self.pivots.iter().enumerate() {
            out[p] = apply(k);
        }
        Some(out)
    }
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
}
