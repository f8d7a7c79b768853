//! Dense matrices over an exact field.
//!
//! Vectors are columns; a matrix of shape `rows x cols` maps `k^cols -> k^rows`.
//! Entries are stored row-major.

use std::fmt;

use super::field::{Field, Scalar};
use crate::error::LinalgError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub reduced: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> ExactMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<ExactMatrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|s| !field.owns(s)) {
            return Err(LinalgError::Shape("entry from a different field".into()));
        }
        Ok(ExactMatrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> ExactMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        ExactMatrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// A single column.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> ExactMatrix {
        let rows = entries.len();
        ExactMatrix {
            field,
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ExactMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> ExactMatrix {
        let data = self.data.iter().map(|a| -a).collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        self.with_data(data)
    }

    /// `self` if `positive`, otherwise `-self`.
    pub fn signed(&self, positive: bool) -> ExactMatrix {
        if positive {
            self.clone()
        } else {
            self.neg()
        }
    }

    fn with_data(&self, data: Vec<Scalar>) -> ExactMatrix {
        ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product; row `(i, k)` has index `i * b.rows + k` (left factor major).
    pub fn kronecker(&self, b: &ExactMatrix) -> ExactMatrix {
        let (br, bc) = b.shape();
        ExactMatrix::from_fn(self.field, self.rows * br, self.cols * bc, |r, c| {
            let a = self.get(r / br, c / bc);
            if a.is_zero() {
                return self.field.zero();
            }
            a * b.get(r % br, c % bc)
        })
    }

    pub fn hstack(parts: &[&ExactMatrix], field: Field, rows: usize) -> ExactMatrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = ExactMatrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            out.set_block(0, c0, p);
            c0 += p.cols;
        }
        out
    }

    pub fn vstack(parts: &[&ExactMatrix], field: Field, cols: usize) -> ExactMatrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = ExactMatrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            out.set_block(r0, 0, p);
            r0 += p.rows;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Row-major flattening into a single column (entry `(i, j)` at `i * cols + j`).
    pub fn vectorize(&self) -> ExactMatrix {
        ExactMatrix::column_vector(self.field, self.data.clone())
    }

    /// Inverse of [`vectorize`](Self::vectorize) applied to column `col` of `v`.
    pub fn unvectorize(v: &ExactMatrix, col: usize, rows: usize, cols: usize) -> ExactMatrix {
        assert_eq!(v.rows, rows * cols);
        ExactMatrix::from_fn(v.field, rows, cols, |i, j| v.get(i * cols + j, col).clone())
    }

    pub fn row_echelon(&self) -> RowEchelon {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols);
        RowEchelon { reduced: m, pivots }
    }

    /// Gauss-Jordan elimination restricted to pivots among the first `pivot_cols` columns.
    fn reduce_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let pv = self.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&factor * pv);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.row_echelon().pivots.len()
    }

    /// Columns form a basis of the null space. Each basis vector has a `1` in its own
    /// free coordinate and `0` in the other free coordinates.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let ech = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = ExactMatrix::zeros(self.field, self.cols, free.len());
        for (t, &f) in free.iter().enumerate() {
            k.set(f, t, self.field.one());
            for (row, &p) in ech.pivots.iter().enumerate() {
                k.set(p, t, -ech.reduced.get(row, f));
            }
        }
        k
    }

    /// Free coordinates of [`kernel_basis`](Self::kernel_basis), in order.
    pub fn kernel_free_columns(&self) -> (ExactMatrix, Vec<usize>) {
        let k = self.kernel_basis();
        let ech_pivots = self.row_echelon().pivots;
        let free = (0..self.cols).filter(|c| !ech_pivots.contains(c)).collect();
        (k, free)
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &ExactMatrix) -> Result<Option<ExactMatrix>, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::Shape(format!(
                "system has {} rows but right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let mut aug = ExactMatrix::hstack(&[self, b], self.field, self.rows);
        let pivots = aug.reduce_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if (self.cols..aug.cols).any(|j| !aug.get(i, j).is_zero()) {
                return Ok(None);
            }
        }
        let mut x = ExactMatrix::zeros(self.field, self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, aug.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<ExactMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = ExactMatrix::hstack(&[self, &ExactMatrix::identity(self.field, n)], self.field, n);
        let pivots = aug.reduce_in_place(n);
        if pivots.len() < n {
            return Err(LinalgError::Singular);
        }
        Ok(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Indices of a maximal independent subset of the columns (earliest first).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.row_echelon().pivots
    }

    /// A basis (as columns) of the column space.
    pub fn column_space(&self) -> ExactMatrix {
        self.select_cols(&self.independent_columns())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            write!(f, "\n  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
