//! Exact linear algebra over any [`Field`]: dense matrices and an incremental
//! sparse row-echelon reducer for large overdetermined systems.

use std::fmt;

use crate::scalars::{Conductor, Field};

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    cond: Conductor,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(c: Conductor, rows: usize, cols: usize) -> Self {
        Matrix {
            cond: c,
            rows,
            cols,
            data: vec![F::zero(c); rows * cols],
        }
    }

    pub fn identity(c: Conductor, n: usize) -> Self {
        let mut m = Self::zeros(c, n, n);
        for i in 0..n {
            m.set(i, i, F::one(c));
        }
        m
    }

    pub fn from_fn(c: Conductor, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { cond: c, rows, cols, data }
    }

    pub fn from_rows(c: Conductor, rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == k), "ragged rows");
        Matrix {
            cond: c,
            rows: r,
            cols: k,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            cond: self.cond,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cond, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::<F>::zeros(self.cond, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    out.data[i * rhs.cols + j].add_mul_assign(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            cond: self.cond,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            cond: self.cond,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix {
            cond: self.cond,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(s)).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero(self.cond);
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Matrix<F> {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.cond, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero(self.cond);
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign_ref(self.get(i, i));
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv_ref().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).sub_ref(&factor.mul_ref(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(self.cond, self.cols, &pivots, |row, col| r.get(row, col).clone())
    }

    /// Basis of the column space, as columns of `self` at the pivot positions.
    pub fn column_space(&self) -> Vec<Vec<F>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|j| self.column(j)).collect()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::from_fn(self.cond, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one(self.cond)
            } else {
                F::zero(self.cond)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.cond, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// One solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.cond, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(self.cond); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

fn nullspace_from_rref<F: Field>(
    c: Conductor,
    ncols: usize,
    pivots: &[usize],
    entry: impl Fn(usize, usize) -> F,
) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![F::zero(c); ncols];
            v[free] = F::one(c);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = entry(row, free).neg_ref();
            }
            v
        })
        .collect()
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Incremental row-echelon form with sparse rows.
///
/// Rows are fed one at a time and reduced against the current basis, so
/// systems with many redundant equations never materialize as a dense matrix.
pub struct Echelon<F> {
    cond: Conductor,
    ncols: usize,
    /// Rows with leading coefficient 1 at their pivot, zero before it.
    rows: Vec<Vec<(usize, F)>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(c: Conductor, ncols: usize) -> Self {
        Echelon {
            cond: c,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `w` in place against the basis.
    fn reduce(&self, w: &mut [F]) {
        for col in 0..self.ncols {
            let Some(ri) = self.pivot_row[col] else { continue };
            if w[col].is_zero() {
                continue;
            }
            let factor = w[col].clone();
            for (j, v) in &self.rows[ri] {
                let d = factor.mul_ref(v);
                w[*j] = w[*j].sub_ref(&d);
            }
        }
    }

    /// Adds a sparse row; returns whether it increased the rank.
    pub fn insert_sparse(&mut self, entries: &[(usize, F)]) -> bool {
        if entries.iter().all(|(_, v)| v.is_zero()) || self.is_full() {
            return false;
        }
        let mut w = vec![F::zero(self.cond); self.ncols];
        for (j, v) in entries {
            w[*j].add_assign_ref(v);
        }
        self.insert_dense_owned(w)
    }

    pub fn insert_dense(&mut self, row: &[F]) -> bool {
        assert_eq!(row.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        self.insert_dense_owned(row.to_vec())
    }

    fn insert_dense_owned(&mut self, mut w: Vec<F>) -> bool {
        self.reduce(&mut w);
        let Some(lead) = w.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = w[lead].inv_ref().unwrap();
        let row: Vec<(usize, F)> = w
            .into_iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.mul_ref(&inv)))
            .collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// `v` reduced modulo the row space; zero at every pivot column.
    pub fn reduced(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        v
    }

    pub fn contains(&self, row: &[F]) -> bool {
        let mut w = row.to_vec();
        self.reduce(&mut w);
        w.iter().all(F::is_zero)
    }

    /// Fully reduced rows ordered by pivot, as `(pivot, dense row)`.
    fn rref_rows(&self) -> Vec<(usize, Vec<F>)> {
        let mut out: Vec<(usize, Vec<F>)> = Vec::with_capacity(self.rows.len());
        for col in (0..self.ncols).rev() {
            let Some(ri) = self.pivot_row[col] else { continue };
            let mut w = vec![F::zero(self.cond); self.ncols];
            for (j, v) in &self.rows[ri] {
                w[*j] = v.clone();
            }
            // Clear later pivot columns using the already reduced rows.
            for (p, r) in &out {
                if !w[*p].is_zero() {
                    let factor = w[*p].clone();
                    for (j, v) in r.iter().enumerate() {
                        if !v.is_zero() {
                            w[j] = w[j].sub_ref(&factor.mul_ref(v));
                        }
                    }
                }
            }
            out.push((col, w));
        }
        out.reverse();
        out
    }

    /// Basis of the solutions of the homogeneous system.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let rows = self.rref_rows();
        let pivots: Vec<usize> = rows.iter().map(|(p, _)| *p).collect();
        nullspace_from_rref(self.cond, self.ncols, &pivots, |r, c| rows[r].1[c].clone())
    }

    /// Treats the last column as the right-hand side and returns the unique
    /// or a particular solution (free variables zero), `None` if inconsistent.
    pub fn affine_solution(&self) -> Option<Vec<F>> {
        let rhs = self.ncols - 1;
        if self.pivot_row[rhs].is_some() {
            return None;
        }
        let mut x = vec![F::zero(self.cond); rhs];
        for (p, row) in self.rref_rows() {
            x[p] = row[rhs].neg_ref();
        }
        Some(x)
    }

    /// Number of free unknowns when the last column is the right-hand side.
    pub fn affine_freedom(&self) -> usize {
        (self.ncols - 1) - self.rank()
    }
}
