//! Exact dense linear algebra over a [`Field`]: row reduction, kernels,
//! images, the subspace lattice and quotient coordinates.
//!
//! Vectors are plain `Vec<T>` / `&[T]`. A [`Subspace`] always stores its
//! basis in reduced row echelon form, so two subspaces are equal exactly when
//! their stored bases are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("the first space is not contained in the second")]
    NotSubspace,
    #[error("vector does not lie in the space")]
    NotInSpace,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors of common length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix { rows: nrows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = vec![T::zero(); self.rows];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_mul(a, vj);
                }
            }
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(cols: usize, parts: &[&Matrix<T>]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref<T> {
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = T::one() / rows[r][c].clone();
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        x.sub_mul(&f, p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: Matrix::from_rows(self.cols, rows), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Subspace<T> {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rref.pivots.contains(c)).collect();
        let vectors = free.iter().map(|&f| {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (i, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.matrix.get(i, f).clone();
            }
            v
        });
        Subspace::span(self.cols, vectors)
    }

    /// Column space.
    pub fn image(&self) -> Subspace<T> {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut rows = self.to_rows();
        let n = self.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return T::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det = det * pivot.clone();
            let pivot_row = rows[c].clone();
            for row in rows.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone() / pivot.clone();
                for (x, q) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !q.is_zero() {
                        x.sub_mul(&f, q);
                    }
                }
            }
        }
        det
    }

    /// The unique `x` with `self · x = y`, if `self` has full column rank and `y` is in its image.
    pub fn solve(&self, y: &[T]) -> Option<Vec<T>> {
        assert_eq!(y.len(), self.rows, "right-hand side has the wrong length");
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                y[i].clone()
            }
        });
        let rref = aug.rref();
        if rref.pivots.len() != self.cols || rref.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        Some((0..self.cols).map(|i| rref.matrix.get(i, self.cols).clone()).collect())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] >= n {
            return None;
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Some(rref.matrix.select_columns(&right))
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols.max(1)).take(self.rows) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

/// Result of [`Matrix::rref`]. Zero rows are kept so the shape matches the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<T: Field> {
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Field> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// A linear subspace of `T^ambient`, stored as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<T>>,
    {
        let rows: Vec<Vec<T>> = vectors.into_iter().collect();
        Self::from_matrix_rows(&Matrix::from_rows(ambient, rows))
    }

    /// The row space of `m`.
    pub fn from_matrix_rows(m: &Matrix<T>) -> Self {
        let rref = m.rref();
        let rank = rref.rank();
        let keep: Vec<Vec<T>> = rref.matrix.rows().take(rank).map(|r| r.to_vec()).collect();
        Subspace { ambient: m.ncols(), basis: Matrix::from_rows(m.ncols(), keep), pivots: rref.pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows, in canonical RREF.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies in the span.
    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    x.sub_mul(&f, b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.rows().all(|r| other.contains(r))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix_rows(&Matrix::vstack(self.ambient, &[&self.basis, &other.basis])))
    }

    /// Intersection by the Zassenhaus algorithm: reduce the block matrix
    /// `[[A, A], [B, 0]]`; rows whose left half vanishes span `A ∩ B` on the right.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis.rows() {
            rows.push(r.iter().chain(r.iter()).cloned().collect::<Vec<T>>());
        }
        for r in other.basis.rows() {
            rows.push(r.iter().cloned().chain(std::iter::repeat_n(T::zero(), n)).collect());
        }
        let rref = Matrix::from_rows(2 * n, rows).rref();
        let vectors = rref
            .matrix
            .rows()
            .take(rref.rank())
            .filter(|r| r[..n].iter().all(|x| x.is_zero()))
            .map(|r| r[n..].to_vec());
        Ok(Self::span(n, vectors))
    }

    /// Image of the subspace under `m` (vectors are columns: `v ↦ m v`).
    pub fn map(&self, m: &Matrix<T>) -> Self {
        assert_eq!(m.ncols(), self.ambient, "map dimension mismatch");
        Self::span(m.nrows(), self.basis.rows().map(|r| m.mul_vec(r)))
    }

    /// `{ x ∈ self : x · w = 0 for all w ∈ other }` under the standard dot product.
    pub fn orthogonal_complement_within(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        // Coefficients c with (c · B_self) orthogonal to every row of B_other.
        let gram = &other.basis * &self.basis.transpose();
        let coeffs = gram.kernel();
        Ok(Self::span(self.ambient, coeffs.basis.rows().map(|c| row_combination(c, &self.basis))))
    }
}

impl<T: fmt::Display> fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.basis.rows, self.ambient, self.basis)
    }
}

/// `Σ c_i · rows_i`.
pub fn row_combination<T: Field>(coeffs: &[T], rows: &Matrix<T>) -> Vec<T> {
    let mut out = vec![T::zero(); rows.ncols()];
    for (c, r) in coeffs.iter().zip(rows.rows()) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(r) {
            if !x.is_zero() {
                o.add_mul(c, x);
            }
        }
    }
    out
}

pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// The quotient `v / w` with representatives spanning the orthogonal
/// complement of `w` inside `v`.
#[derive(Clone, Debug)]
pub struct Quotient<T: Field> {
    sub: Subspace<T>,
    space: Subspace<T>,
    representatives: Vec<Vec<T>>,
    /// Pivot columns of `space`; restricting `[w-basis; representatives]` to
    /// them gives an invertible square matrix `S`.
    pivots: Vec<usize>,
    /// `(S^-1)^T`
    solve: Matrix<T>,
}

impl<T: Field> Quotient<T> {
    pub fn new(w: &Subspace<T>, v: &Subspace<T>) -> Result<Self, LinalgError> {
        w.check_ambient(v)?;
        if !w.is_subspace_of(v) {
            return Err(LinalgError::NotSubspace);
        }
        let complement = v.orthogonal_complement_within(w)?;
        let representatives = complement.basis_vectors();
        let combined = Matrix::vstack(v.ambient, &[&w.basis, &complement.basis]);
        let pivots = v.pivots.clone();
        let solve = combined
            .select_columns(&pivots)
            .inverse()
            .expect("basis restricted to pivot columns is invertible")
            .transpose();
        Ok(Quotient { sub: w.clone(), space: v.clone(), representatives, pivots, solve })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Vec<T>] {
        &self.representatives
    }

    pub fn sub(&self) -> &Subspace<T> {
        &self.sub
    }

    pub fn space(&self) -> &Subspace<T> {
        &self.space
    }

    /// Coordinates of the class of `x` relative to the representatives.
    pub fn coordinates(&self, x: &[T]) -> Result<Vec<T>, LinalgError> {
        if x.len() != self.space.ambient {
            return Err(LinalgError::AmbientMismatch { left: x.len(), right: self.space.ambient });
        }
        if !self.space.contains(x) {
            return Err(LinalgError::NotInSpace);
        }
        let restricted: Vec<T> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        // x = c · combined  ⇒  x[P] = c · S  ⇒  c = x[P] · S^-1.
        let c = self.solve.mul_vec(&restricted);
        Ok(c[self.sub.dim()..].to_vec())
    }

    /// `Σ c_i · representative_i`.
    pub fn lift(&self, coords: &[T]) -> Vec<T> {
        let m = Matrix::from_rows(self.space.ambient, self.representatives.clone());
        row_combination(coords, &m)
    }
}

/// Free-function spelling of [`Quotient::new`].
pub fn quotient_structure<T: Field>(w: &Subspace<T>, v: &Subspace<T>) -> Result<Quotient<T>, LinalgError> {
    Quotient::new(w, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rref_proportional_rows() {
        let r = mat(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix, mat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity_and_swap() {
        let id = Matrix::<Rational>::identity(4);
        assert_eq!(id.rref().matrix, id);
        assert_eq!(id.rank(), 4);
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).rref().matrix, mat(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::<Rational>::identity(3).kernel().is_zero());
        assert_eq!(Matrix::<Rational>::zeros(2, 2).kernel(), Subspace::full(2));
        let m = mat(&[&[1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn image_examples() {
        assert_eq!(Matrix::<Rational>::identity(3).image(), Subspace::full(3));
        assert!(Matrix::<Rational>::zeros(3, 2).image().is_zero());
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.image().dim() + m.kernel().dim(), m.ncols());
    }

    #[test]
    fn sum_and_intersection_basics() {
        let a = Subspace::span(2, vec![vec![q(1), q(0)]]);
        let b = Subspace::span(2, vec![vec![q(0), q(1)]]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum(&Subspace::zero(2)).unwrap(), a);
        assert_eq!(a.intersect(&Subspace::full(2)).unwrap(), a);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
        assert_eq!(
            a.sum(&Subspace::zero(3)),
            Err(LinalgError::AmbientMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn canonical_equality_from_different_generators() {
        let a = Subspace::span(3, vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let b = Subspace::span(3, vec![vec![q(1), q(2), q(1)], vec![q(1), q(0), q(-1)], vec![q(2), q(2), q(0)]]);
        assert_eq!(a, b);
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::span(3, vec![vec![q(1), q(2), q(0)]]);
        assert!(s.contains(&[q(1), q(2), q(0)]));
        assert!(s.contains(&[q(0), q(0), q(0)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn quotient_edge_cases() {
        let v = Subspace::span(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(1)]]);
        let same = Quotient::new(&v, &v).unwrap();
        assert_eq!(same.dim(), 0);
        let all = Quotient::new(&Subspace::zero(3), &v).unwrap();
        assert_eq!(all.representatives(), v.basis_vectors().as_slice());
        let w = Subspace::span(3, vec![vec![q(1), q(1), q(1)]]);
        let part = Quotient::new(&w, &v).unwrap();
        assert_eq!(part.dim(), 1);
        for (i, r) in part.representatives().iter().enumerate() {
            let mut e = vec![q(0); part.dim()];
            e[i] = q(1);
            assert_eq!(part.coordinates(r).unwrap(), e);
            assert!(dot(r, &[q(1), q(1), q(1)]).is_zero());
        }
        assert_eq!(part.coordinates(&[q(2), q(2), q(2)]).unwrap(), vec![q(0)]);
        let outside = Subspace::span(3, vec![vec![q(0), q(0), q(1)]]);
        assert_eq!(Quotient::new(&outside, &v).unwrap_err(), LinalgError::NotSubspace);
        assert_eq!(part.coordinates(&[q(0), q(0), q(1)]), Err(LinalgError::NotInSpace));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn determinant_and_solve() {
        let m = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        // 2(12 − 1) − 1(4 − 0) = 18
        assert_eq!(m.determinant(), q(18));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), q(0));
        assert_eq!(Matrix::<Rational>::zeros(0, 0).determinant(), q(1));
        let x = m.solve(&[q(3), q(5), q(5)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(3), q(5), q(5)]);
        let tall = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.solve(&[q(1), q(2), q(3)]), Some(vec![q(1), q(2)]));
        assert_eq!(tall.solve(&[q(1), q(2), q(4)]), None);
    }

    #[test]
    fn works_over_fixed_width_ratios() {
        type Small = num_rational::Ratio<i64>;
        let m = Matrix::<Small>::from_rows(
            3,
            vec![
                vec![Small::from_int(1), Small::from_int(2), Small::from_int(3)],
                vec![Small::from_int(2), Small::from_int(4), Small::from_int(7)],
            ],
        );
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel().dim(), 1);
    }
}
