//! Dense exact linear algebra over an abstract field.
//!
//! Fields are passed as context objects implementing [`FieldOps`] rather
//! than as traits on the element type, because cyclotomic arithmetic needs
//! the modulus `Phi_m` at every operation and elements do not carry it.
//! Pivoting is first-nonzero, so every result is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arithmetic context for an exact field.
pub trait FieldOps {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }
}

/// The rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Convenience: an exact rational from an integer.
pub fn rat(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Is the rational a non-negative integer? Used by dimension checks.
pub fn rat_is_nonneg_int(v: &BigRational) -> bool {
    v.denom().is_one() && !v.numer().is_negative()
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

pub fn identity<F: FieldOps>(field: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::filled(n, n, field.zero());
    for i in 0..n {
        m.set(i, i, field.one());
    }
    m
}

pub fn mat_mul<F: FieldOps>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>, Error> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch);
    }
    let mut out = Matrix::filled(a.rows, b.cols, field.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.at(i, k);
            if field.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = field.add(out.at(i, j), &field.mul(aik, b.at(k, j)));
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

pub fn mat_sub<F: FieldOps>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>, Error> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch);
    }
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, field.sub(a.at(i, j), b.at(i, j)));
        }
    }
    Ok(out)
}

pub fn transpose<T: Clone>(m: &Matrix<T>) -> Matrix<T> {
    let mut rows = Vec::with_capacity(m.cols);
    for c in 0..m.cols {
        rows.push((0..m.rows).map(|r| m.at(r, c).clone()).collect());
    }
    Matrix::from_rows(rows).expect("transpose is rectangular")
}

/// Reduces `m` in place to reduced row echelon form; returns the pivot
/// columns in increasing order (their count is the rank).
pub fn rref<F: FieldOps>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pivot_row) = (row..m.rows).find(|&r| !field.is_zero(m.at(r, col))) else {
            continue;
        };
        m.swap_rows(row, pivot_row);
        let inv = field
            .inv(m.at(row, col))
            .expect("pivot is nonzero by construction");
        for c in col..m.cols {
            let v = field.mul(m.at(row, c), &inv);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r != row && !field.is_zero(m.at(r, col)) {
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = field.sub(m.at(r, c), &field.mul(&factor, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: FieldOps>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// Canonical basis of the right kernel `{v : Mv = 0}`, one vector per free
/// column: the free coordinate is 1, pivot coordinates are read off the
/// RREF, everything else is 0. Ordered by free column index.
pub fn nullspace<F: FieldOps>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(field, &mut work);
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(work.at(r, free));
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<F: FieldOps>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    // Augment [m | I] and reduce.
    let mut aug = Matrix::filled(n, 2 * n, field.zero());
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, n + r, field.one());
    }
    let pivots = rref(field, &mut aug);
    // Invertible iff the left block is full-rank: pivots fill columns 0..n.
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Matrix::filled(n, n, field.zero());
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, aug.at(r, n + c).clone());
        }
    }
    Some(out)
}

/// Canonical form of a row space: RREF with zero rows dropped. Two
/// subspaces are equal iff their canonical forms are identical.
pub fn row_space_canonical<F: FieldOps>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    ambient: usize,
) -> Matrix<F::Elem> {
    if vectors.is_empty() {
        return Matrix::filled(0, ambient, field.zero());
    }
    let mut m = Matrix::from_rows(vectors.to_vec()).expect("uniform vector lengths");
    let pivots = rref(field, &mut m);
    let mut rows = Vec::with_capacity(pivots.len());
    for r in 0..pivots.len() {
        rows.push(m.row(r).to_vec());
    }
    Matrix::from_rows(rows).expect("rectangular")
}
