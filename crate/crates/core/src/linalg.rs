//! Exact dense matrices and a sparse incremental row-echelon span.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::ONE)
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    m[(i, j)] = v.clone();
                }
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
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

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Scalar {
        assert_eq!((self.cols, self.rows), (other.rows, other.cols), "shape");
        let mut acc = Scalar::ZERO;
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if !a.is_zero() {
                    let b = &other[(k, i)];
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::ZERO;
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Nonzero entries of each row, used to skip zeros in products.
    fn sparse_rows(&self) -> Vec<Vec<(usize, &Scalar)>> {
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape");
        let b = other.sparse_rows();
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, bv) in &b[k] {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * *bv;
                }
            }
        }
        out
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.matmul(self);
        }
        acc
    }

    /// `exp(self)` for a nilpotent matrix, summed until the powers vanish.
    ///
    /// # Panics
    /// If no power up to the dimension vanishes.
    pub fn exp_nilpotent(&self) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n as i64 + 1 {
            term = term.matmul(self).scale(&Scalar::from_ratio(1, k));
            if term.is_zero() {
                return acc;
            }
            acc = &acc + &term;
        }
        panic!("exp_nilpotent called on a matrix that is not nilpotent");
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m[(rank, c)].inv().expect("nonzero pivot");
            for i in rank + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    if m[(rank, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&f * &m[(rank, j)]);
                    m[(i, j)] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::ONE
            } else {
                Scalar::ZERO
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(self.is_square());
        let n = self.rows;
        assert_eq!(b.len(), n, "shape");
        let aug = Matrix::from_fn(n, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some((0..n).map(|i| r[(i, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(u32, Scalar)>;

pub fn to_sparse(dense: &[Scalar]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i as u32, v.clone()))
        .collect()
}

/// `a + c·b`
fn sparse_axpy(a: &[(u32, Scalar)], c: &Scalar, b: &[(u32, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(u32::MAX, |e| e.0);
        let kb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn sparse_get(v: &[(u32, Scalar)], k: u32) -> Option<&Scalar> {
    v.binary_search_by_key(&k, |e| e.0).ok().map(|i| &v[i].1)
}

struct EchelonRow {
    pivot: u32,
    entries: SparseVec,
    /// This row as a combination of the generators accepted so far.
    combo: Vec<Scalar>,
}

/// Incrementally maintained reduced row echelon basis of a subspace of
/// `Scalar^len`, with every basis row expressed in the accepted generators.
pub struct Span {
    len: usize,
    rows: Vec<EchelonRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Span { len, rows: Vec::new(), pivot_row: vec![None; len] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    /// Residual of `v` after reduction and the coefficients (over accepted
    /// generators) of the part removed.
    fn reduce(&self, v: &[(u32, Scalar)]) -> (SparseVec, Vec<Scalar>) {
        // Rows are fully reduced, so only pivots where `v` itself is nonzero
        // contribute, each with coefficient equal to that entry.
        let mut residual: SparseVec = v.to_vec();
        let mut coeffs = vec![Scalar::ZERO; self.rows.len()];
        for (k, val) in v {
            if let Some(r) = self.pivot_row[*k as usize] {
                let row = &self.rows[r];
                residual = sparse_axpy(&residual, &-val, &row.entries);
                for (c, x) in coeffs.iter_mut().zip(&row.combo) {
                    if !x.is_zero() {
                        *c += val * x;
                    }
                }
            }
        }
        (residual, coeffs)
    }

    pub fn contains(&self, v: &[(u32, Scalar)]) -> bool {
        self.reduce(v).0.is_empty()
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.contains(&to_sparse(v))
    }

    /// Coordinates of `v` in terms of the accepted generators, if `v` lies
    /// in the span.
    pub fn coordinates(&self, v: &[(u32, Scalar)]) -> Option<Vec<Scalar>> {
        let (res, coeffs) = self.reduce(v);
        res.is_empty().then_some(coeffs)
    }

    /// Adds `v` if it is independent of the current span. Returns whether it
    /// was accepted.
    pub fn insert(&mut self, v: &[(u32, Scalar)]) -> bool {
        assert!(v.last().is_none_or(|e| (e.0 as usize) < self.len), "index out of range");
        let (residual, coeffs) = self.reduce(v);
        if residual.is_empty() {
            return false;
        }
        let n = self.rows.len();
        // residual = v − Σ coeffs·generators, as a combination over n+1 generators.
        let mut combo: Vec<Scalar> = coeffs.iter().map(|c| -c).collect();
        combo.push(Scalar::ONE);
        let pivot = residual[0].0;
        let inv = residual[0].1.inv().expect("nonzero");
        let entries: SparseVec = residual.iter().map(|(k, x)| (*k, x * &inv)).collect();
        let combo: Vec<Scalar> = combo.iter().map(|x| x * &inv).collect();
        for row in &mut self.rows {
            row.combo.push(Scalar::ZERO);
            if let Some(f) = sparse_get(&row.entries, pivot).cloned() {
                row.entries = sparse_axpy(&row.entries, &-&f, &entries);
                for (c, x) in row.combo.iter_mut().zip(&combo) {
                    if !x.is_zero() {
                        *c -= &f * x;
                    }
                }
            }
        }
        self.pivot_row[pivot as usize] = Some(n);
        self.rows.push(EchelonRow { pivot, entries, combo });
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(&to_sparse(v))
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            &rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_and_inverse() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.rank(), 2);
        assert!(a.inverse().is_none());
        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.matmul(&inv), Matrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4], &[3, 6]]).rank(), 1);
    }

    #[test]
    fn solve_small_system() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let x = a.solve(&[Scalar::from_int(3), Scalar::from_int(5)]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(5), Scalar::from_int(3)]);
    }

    #[test]
    fn nilpotent_exponential() {
        let n = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e = n.exp_nilpotent();
        assert_eq!(e[(0, 2)], Scalar::from_ratio(1, 2));
        assert_eq!(e.matmul(&n.scale(&Scalar::from_int(-1)).exp_nilpotent()), Matrix::identity(3));
    }

    #[test]
    fn span_tracks_coordinates() {
        let mut s = Span::new(4);
        let v1 = to_sparse(&[1, 2, 0, 1].map(Scalar::from_int));
        let v2 = to_sparse(&[0, 1, 1, 0].map(Scalar::from_int));
        assert!(s.insert(&v1));
        assert!(s.insert(&v2));
        let w = to_sparse(&[2, 1, -3, 2].map(Scalar::from_int));
        assert!(!s.insert(&w));
        assert_eq!(s.coordinates(&w).unwrap(), vec![Scalar::from_int(2), Scalar::from_int(-3)]);
        assert!(!s.contains(&to_sparse(&[0, 0, 0, 1].map(Scalar::from_int))));
        assert_eq!(s.dim(), 2);
    }
}
