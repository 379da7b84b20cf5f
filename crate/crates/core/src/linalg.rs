//! Exact dense matrices and sparse row reduction over the cyclotomic field.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{CycScalar, FieldContext};

pub type SparseRow = Vec<(usize, CycScalar)>;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldContext,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: FieldContext, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldContext, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn diagonal(field: FieldContext, diag: &[CycScalar]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_rows(field: FieldContext, rows: Vec<Vec<CycScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldContext, nrows: usize, cols: &[Vec<CycScalar>]) -> Self {
        let mut m = Self::zeros(field, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldContext {
        self.field
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

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &CycScalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> CycScalar {
        assert!(self.is_square());
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Kronecker product; index `(i, j)` of `self` and `(k, l)` of `other`
    /// map to `(i·other.rows + k, j·other.cols + l)`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Self::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows)
            .map(|i| self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for row in self.sparse_rows() {
            e.insert(row);
        }
        e.rank()
    }

    /// Basis of `{x : self·x = 0}` as column vectors.
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let mut e = Echelon::new(self.field, self.cols);
        for row in self.sparse_rows() {
            e.insert(row);
        }
        e.kernel()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field, n));
        let mut e = Echelon::new(self.field, 2 * n);
        for row in aug.sparse_rows() {
            e.insert(row);
        }
        if (0..n).any(|c| !e.pivots.contains_key(&c)) {
            return None;
        }
        let mut out = Self::zeros(self.field, n, n);
        for (c, row) in &e.pivots {
            for (j, x) in row {
                if *j >= n {
                    out[(*c, j - n)] = x.clone();
                }
            }
        }
        Some(out)
    }

    pub fn determinant(&self) -> CycScalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let factor = &a[(i, c)] * &inv;
                for j in c..n {
                    if !a[(c, j)].is_zero() {
                        let t = &factor * &a[(c, j)];
                        a[(i, j)] -= &t;
                    }
                }
            }
        }
        det
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Pivot rows are kept fully reduced against each other and normalized so
/// the pivot entry is one.
pub struct Echelon {
    field: FieldContext,
    ncols: usize,
    pub(crate) pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(y: &SparseRow, a: &CycScalar, x: &SparseRow) -> SparseRow {
    // y - a·x, both sorted by column
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j >= x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i >= y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, -(a * &x[j].1)));
            j += 1;
        } else {
            let v = &y[i].1 - &(a * &x[j].1);
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(field: FieldContext, ncols: usize) -> Self {
        Echelon { field, ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|(_, x)| !x.is_zero());
        row.sort_by_key(|(c, _)| *c);
        let hits: Vec<(usize, CycScalar)> =
            row.iter().filter(|(c, _)| self.pivots.contains_key(c)).cloned().collect();
        for (c, a) in hits {
            row = axpy(&row, &a, &self.pivots[&c]);
        }
        row
    }

    /// Adds a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        let (c, lead) = row[0].clone();
        let inv = lead.inv().expect("nonzero leading entry");
        let row: SparseRow = row.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        for other in self.pivots.values_mut() {
            if let Ok(pos) = other.binary_search_by_key(&c, |(j, _)| *j) {
                let a = other[pos].1.clone();
                *other = axpy(other, &a, &row);
            }
        }
        self.pivots.insert(c, row);
        true
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    pub fn pivot_row(&self, c: usize) -> Option<&SparseRow> {
        self.pivots.get(&c)
    }

    /// Basis of the null space of the inserted rows, one vector per free
    /// column (in increasing order).
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut index = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            index[f] = k;
        }
        let mut basis = vec![vec![self.field.zero(); self.ncols]; free.len()];
        for (k, &f) in free.iter().enumerate() {
            basis[k][f] = self.field.one();
        }
        for (&c, row) in &self.pivots {
            for (j, x) in row {
                if *j != c {
                    let k = index[*j];
                    debug_assert!(k != usize::MAX);
                    basis[k][c] = -x;
                }
            }
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field_init;

    #[test]
    fn inverse_and_kernel() {
        let f = field_init(5).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![vec![f.q(), f.int(1), f.zero()], vec![f.int(2), f.qint(2), f.int(1)], vec![f.zero(), f.int(3), f.q_pow(2)]],
        );
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(!m.determinant().is_zero());
        let sing = Matrix::from_rows(f, vec![vec![f.int(1), f.int(2)], vec![f.int(2), f.int(4)]]);
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_none());
        assert!(sing.determinant().is_zero());
        let k = sing.kernel();
        assert_eq!(k.len(), 1);
        assert!(sing.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kron_shape() {
        let f = field_init(3).unwrap();
        let a = Matrix::identity(f, 2);
        let b = Matrix::from_rows(f, vec![vec![f.int(1), f.int(2)], vec![f.int(3), f.int(4)]]);
        let k = a.kron(&b);
        assert_eq!(k[(3, 2)], f.int(3));
        assert!(k[(0, 2)].is_zero());
    }
}
