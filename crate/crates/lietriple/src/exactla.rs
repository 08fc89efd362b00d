//! Exact dense linear algebra over an arbitrary field.
//!
//! Everything in this module is scalar-type-agnostic: [`Matrix`] and
//! [`Subspace`] are generic over a [`Scalar`] (any field-like type with exact
//! equality), with arbitrary-precision rationals [`crate::Q`] as the default.
//! Elimination uses the first nonzero entry in row-major order as pivot, so
//! identical inputs always produce identical echelon forms, ranks, and bases.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Div, Neg, Sub};

use crate::{Error, Result, Q};

/// Field-like scalar: exact arithmetic and exact equality.
///
/// Implemented by any type with the listed bounds, in particular
/// `num_rational::BigRational`. Floating-point types satisfy the bounds but
/// make rank/kernel decisions meaningless; use an exact type.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<S: Scalar = Q> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    /// All-zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![S::zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds a matrix from a row-major entry vector.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<S>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, entries }
    }

    /// Builds a matrix from columns.
    pub fn from_columns(ambient_rows: usize, cols: Vec<Vec<S>>) -> Self {
        let ncols = cols.len();
        let mut m = Self::zero(ambient_rows, ncols);
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient_rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Builds a matrix entry-wise.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.cols + c] = v;
    }

    /// Adds `v` to the entry at `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, v: S) {
        let idx = r * self.cols + c;
        let cur = std::mem::replace(&mut self.entries[idx], S::zero());
        self.entries[idx] = cur + v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Matrix product. Skips zero entries, so sparse inputs multiply fast.
    ///
    /// Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(r, c, a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics on length mismatch.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "vector length must equal column count");
        let mut out = vec![S::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = S::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = acc + a.clone() * v[c].clone();
            }
            out[r] = acc;
        }
        out
    }

    /// Reduced row echelon form with the pivot column list.
    ///
    /// Pivot choice is the first nonzero entry scanning rows top to bottom in
    /// each column, which keeps the result deterministic over an exact field.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = {
                let p = m.get(row, col).clone();
                S::one() / p
            };
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    /// Row rank via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{ x : self * x = 0 }`, in reduced echelon form.
    pub fn kernel_basis(&self) -> Subspace<S> {
        let rref = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in rref.pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![S::zero(); self.cols];
            x[free] = S::one();
            for (i, &pc) in rref.pivots.iter().enumerate() {
                let v = rref.matrix.get(i, free);
                if !v.is_zero() {
                    x[pc] = -v.clone();
                }
            }
            basis.push(x);
        }
        Subspace { ambient_dim: self.cols, basis }
    }

    /// Solves `self * x = b` when `b` lies in the image; `None` otherwise.
    ///
    /// A returned solution is re-verified by multiplication before it is
    /// handed back. Panics if `b.len() != self.rows()`.
    pub fn solve_in_image(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows, "rhs length must equal row count");
        // Eliminate on the augmented matrix [self | b].
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        aug = aug.rref().matrix;
        let mut x = vec![S::zero(); self.cols];
        for r in 0..self.rows {
            let Some(lead) = (0..=self.cols).find(|&c| !aug.get(r, c).is_zero()) else {
                continue;
            };
            if lead == self.cols {
                return None; // row reads 0 = nonzero
            }
            x[lead] = aug.get(r, self.cols).clone();
        }
        debug_assert_eq!(self.mul_vec(&x), b.to_vec());
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &S) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.entries[idx].is_zero() {
                let cur = std::mem::replace(&mut self.entries[idx], S::zero());
                self.entries[idx] = cur * factor.clone();
            }
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: &S) {
        for c in 0..self.cols {
            let s = self.entries[src * self.cols + c].clone();
            if s.is_zero() {
                continue;
            }
            let idx = dst * self.cols + c;
            let cur = std::mem::replace(&mut self.entries[idx], S::zero());
            self.entries[idx] = cur - s * factor.clone();
        }
    }
}

/// Result of reduced row echelon elimination.
pub struct Rref<S: Scalar = Q> {
    /// The reduced matrix.
    pub matrix: Matrix<S>,
    /// Pivot column indices, one per nonzero row.
    pub pivots: Vec<usize>,
}

/// A subspace given by a list of linearly independent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S: Scalar = Q> {
    ambient_dim: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    /// Zero subspace of the given ambient dimension.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    /// Builds a subspace from an explicit basis, rejecting dependent vectors.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<S>>) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(Error::Dim(format!(
                    "basis vector length {} != ambient dimension {ambient_dim}",
                    v.len()
                )));
            }
        }
        let rank = Matrix::from_rows(basis.clone()).rank();
        if rank != basis.len() {
            return Err(Error::invalid_with(
                "subspace basis independence",
                format!("rank {rank} < basis count {}", basis.len()),
            ));
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// Span of arbitrary vectors, reduced to an echelon basis.
    pub fn from_span(ambient_dim: usize, vectors: Vec<Vec<S>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let rref = Matrix::from_rows(vectors).rref();
        let basis = (0..rref.pivots.len()).map(|r| rref.matrix.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    /// Membership test: is `v` in the span of the basis?
    pub fn contains(&self, v: &[S]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let m = Matrix::from_columns(self.ambient_dim, self.basis.clone());
        m.solve_in_image(v).is_some()
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let m = Matrix::from_columns(self.ambient_dim, self.basis.clone());
        m.solve_in_image(v)
    }
}

impl<S: Scalar> Matrix<S> {
    /// Exact inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                S::one()
            } else {
                S::zero()
            }
        });
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| rref.matrix.get(r, n + c).clone()))
    }
}

/// A direct-sum decomposition of an ambient space into two complementary
/// subspaces, with exact projection maps.
#[derive(Clone, Debug)]
pub struct Splitting<S: Scalar = Q> {
    dim_first: usize,
    ambient_dim: usize,
    /// Columns: first-part basis, then second-part basis.
    basis: Matrix<S>,
    /// Inverse of `basis`; rows give coordinates in the combined basis.
    inv: Matrix<S>,
}

impl<S: Scalar> Splitting<S> {
    /// Builds the splitting, rejecting non-complementary parts.
    pub fn new(first: &Subspace<S>, second: &Subspace<S>) -> Result<Self> {
        if first.ambient_dim() != second.ambient_dim() {
            return Err(Error::Dim("splitting parts live in different ambient spaces".into()));
        }
        let ambient = first.ambient_dim();
        if first.dim() + second.dim() != ambient {
            return Err(Error::invalid_with(
                "splitting complementarity",
                format!("{} + {} != {ambient}", first.dim(), second.dim()),
            ));
        }
        let mut cols = first.basis().to_vec();
        cols.extend(second.basis().to_vec());
        let basis = Matrix::from_columns(ambient, cols);
        let inv = basis.inverse().ok_or_else(|| {
            Error::invalid("splitting complementarity (combined basis is singular)")
        })?;
        Ok(Splitting { dim_first: first.dim(), ambient_dim: ambient, basis, inv })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim_first(&self) -> usize {
        self.dim_first
    }

    pub fn dim_second(&self) -> usize {
        self.ambient_dim - self.dim_first
    }

    /// Coordinates of `v` split into (first-part, second-part) blocks.
    pub fn coords(&self, v: &[S]) -> (Vec<S>, Vec<S>) {
        let c = self.inv.mul_vec(v);
        let (a, b) = c.split_at(self.dim_first);
        (a.to_vec(), b.to_vec())
    }

    /// Projection onto the first part, in ambient coordinates.
    pub fn project_first(&self, v: &[S]) -> Vec<S> {
        let (a, _) = self.coords(v);
        self.embed_first(&a)
    }

    /// Projection onto the second part, in ambient coordinates.
    pub fn project_second(&self, v: &[S]) -> Vec<S> {
        let (_, b) = self.coords(v);
        self.embed_second(&b)
    }

    /// Ambient vector of first-part coordinates.
    pub fn embed_first(&self, a: &[S]) -> Vec<S> {
        assert_eq!(a.len(), self.dim_first);
        let mut full = a.to_vec();
        full.extend(vec![S::zero(); self.dim_second()]);
        self.basis.mul_vec(&full)
    }

    /// Ambient vector of second-part coordinates.
    pub fn embed_second(&self, b: &[S]) -> Vec<S> {
        assert_eq!(b.len(), self.dim_second());
        let mut full = vec![S::zero(); self.dim_first];
        full.extend_from_slice(b);
        self.basis.mul_vec(&full)
    }
}

/// Dimension of the quotient `z / b`, verifying `b ⊆ z` first.
///
/// An inclusion failure is reported as an internal-consistency error: every
/// caller in this crate only quotients a coboundary space by construction
/// contained in the matching cocycle space.
pub fn quotient_dim<S: Scalar>(z: &Subspace<S>, b: &Subspace<S>) -> Result<usize> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::Dim(format!(
            "ambient dimensions differ: {} vs {}",
            z.ambient_dim(),
            b.ambient_dim()
        )));
    }
    for (i, v) in b.basis().iter().enumerate() {
        if !z.contains(v) {
            return Err(Error::Internal(format!(
                "quotient inclusion failure: basis vector {i} of the subspace is not in the ambient space span"
            )));
        }
    }
    Ok(z.dim() - b.dim())
}

/// Zero vector helpers used throughout the crate.
pub fn vec_zero<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::zero(); n]
}

/// `i`-th standard basis vector of length `n`.
pub fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

pub fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vec_sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_neg<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn vec_scale<S: Scalar>(c: &S, a: &[S]) -> Vec<S> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `acc += c * a`, skipping zero work.
pub fn vec_add_scaled<S: Scalar>(acc: &mut [S], c: &S, a: &[S]) {
    if c.is_zero() {
        return;
    }
    assert_eq!(acc.len(), a.len());
    for (dst, x) in acc.iter_mut().zip(a) {
        if x.is_zero() {
            continue;
        }
        let cur = std::mem::replace(dst, S::zero());
        *dst = cur + c.clone() * x.clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr};

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect())
    }

    #[test]
    fn rank_identity_is_full() {
        assert_eq!(Matrix::<Q>::identity(3).rank(), 3);
    }

    #[test]
    fn rank_zero_matrix_is_zero() {
        assert_eq!(Matrix::<Q>::zero(2, 3).rank(), 0);
    }

    #[test]
    fn rank_proportional_rows_is_one() {
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(Matrix::<Q>::identity(2).kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_of_difference_functional() {
        let k = m(vec![vec![1, -1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![q(1), q(1)]);
    }

    #[test]
    fn kernel_vectors_are_annihilated_exactly() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.dim(), 1);
        for v in k.basis() {
            assert!(vec_is_zero(&a.mul_vec(v)));
        }
    }

    #[test]
    fn rank_nullity_holds() {
        let a = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(a.rank() + a.kernel_basis().dim(), a.cols());
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![q(3), q(-7)];
        assert_eq!(Matrix::<Q>::identity(2).solve_in_image(&b), Some(b));
    }

    #[test]
    fn solve_zero_map_rejects_nonzero_rhs() {
        assert_eq!(Matrix::<Q>::zero(2, 2).solve_in_image(&[q(1), q(0)]), None);
    }

    #[test]
    fn solve_scalar_inverse() {
        assert_eq!(m(vec![vec![2]]).solve_in_image(&[q(1)]), Some(vec![qr(1, 2)]));
    }

    #[test]
    fn solve_result_satisfies_equation() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let b = vec![q(3), q(6)];
        let x = a.solve_in_image(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn quotient_dim_of_equal_spaces_is_zero() {
        let z = Subspace::from_span(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        assert_eq!(quotient_dim(&z, &z).unwrap(), 0);
    }

    #[test]
    fn quotient_dim_by_zero_space() {
        let z: Subspace = Subspace::from_span(6, (0..6).map(|i| unit(6, i)).collect());
        assert_eq!(quotient_dim(&z, &Subspace::zero(6)).unwrap(), 6);
    }

    #[test]
    fn quotient_dim_rejects_non_inclusion() {
        let z = Subspace::from_span(2, vec![vec![q(1), q(0)]]);
        let b = Subspace::from_span(2, vec![vec![q(0), q(1)]]);
        assert!(matches!(quotient_dim(&z, &b), Err(Error::Internal(_))));
    }

    #[test]
    fn rref_is_deterministic() {
        let a = m(vec![vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 5]]);
        let r1 = a.rref();
        let r2 = a.rref();
        assert_eq!(r1.matrix, r2.matrix);
        assert_eq!(r1.pivots, r2.pivots);
    }

    #[test]
    fn generic_scalar_rank_over_f64() {
        // The kernel is scalar-generic; floats work mechanically even though
        // exact types are the supported use.
        let a: Matrix<f64> =
            Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 2.0]]);
        assert_eq!(a.rank(), 2);
    }
}
