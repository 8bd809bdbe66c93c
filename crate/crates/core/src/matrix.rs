//! Dense matrices of exact rationals.
//!
//! This is the element type for every group computation in the crate, so the
//! operations are exact throughout: multiplication and inversion over Q,
//! rank and determinant by fraction-free (Bareiss) elimination on a
//! denominator-cleared copy, and `det(I - t*g)` via the Faddeev-LeVerrier
//! characteristic polynomial.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::ExactPoly;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixError {
    DimensionMismatch,
    NotSquare,
    Singular,
}

impl core::fmt::Display for MatrixError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatrixError::DimensionMismatch => write!(f, "matrix dimension mismatch"),
            MatrixError::NotSquare => write!(f, "matrix is not square"),
            MatrixError::Singular => write!(f, "matrix is singular"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MatrixError {}

/// Row-major dense matrix over Q.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::DimensionMismatch);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&n| rational::rat_int(n)).collect())
            .collect();
        Self::from_rows(data).expect("ragged integer rows")
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        ExactMatrix { rows: n, cols: n, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == ExactMatrix::identity(self.rows)
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(Rational::is_integer)
    }

    /// Canonical key: the reduced entries in row-major order, comma-joined.
    /// Two matrices of equal shape are equal iff their keys are equal.
    pub fn canonical_key(&self) -> String {
        let mut s = String::new();
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&rational::to_string(e));
        }
        s
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch);
        }
        let mut out = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if rational::is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if rational::is_zero(b) {
                        continue;
                    }
                    out[i * other.cols + j] += a * b;
                }
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: out,
        })
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = vec![Rational::zero(); self.rows * self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: out,
        }
    }

    pub fn trace(&self) -> Rational {
        let n = self.rows.min(self.cols);
        (0..n).map(|i| self.get(i, i).clone()).sum()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<ExactMatrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !rational::is_zero(a.get(r, col)))
                .ok_or(MatrixError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let t = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, t);
                    let t = inv.get(pivot, j).clone();
                    inv.set(pivot, j, inv.get(col, j).clone());
                    inv.set(col, j, t);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j) / &p);
                inv.set(col, j, inv.get(col, j) / &p);
            }
            for r in 0..n {
                if r == col || rational::is_zero(a.get(r, col)) {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let av = a.get(r, j) - &(a.get(col, j) * &f);
                    a.set(r, j, av);
                    let iv = inv.get(r, j) - &(inv.get(col, j) * &f);
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }

    /// Rank over Q via fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared();
        let (r, c) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..c {
            if row >= r {
                break;
            }
            let Some(p) = (row..r).find(|&i| !m[i * c + col].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..c {
                    m.swap(p * c + j, row * c + j);
                }
            }
            let pivot = m[row * c + col].clone();
            for i in row + 1..r {
                let lead = m[i * c + col].clone();
                for j in col + 1..c {
                    let v = (&m[i * c + j] * &pivot - &lead * &m[row * c + j]) / &prev;
                    m[i * c + j] = v;
                }
                m[i * c + col] = BigInt::zero();
            }
            prev = pivot;
            row += 1;
        }
        row
    }

    /// Dimension of the kernel (`cols - rank`).
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Exact determinant via Bareiss elimination.
    pub fn det(&self) -> Result<Rational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut m, scale) = self.cleared();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for col in 0..n - 1 {
            let Some(p) = (col..n).find(|&i| !m[i * n + col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                for j in 0..n {
                    m.swap(p * n + j, col * n + j);
                }
                sign = -sign;
            }
            let pivot = m[col * n + col].clone();
            for i in col + 1..n {
                let lead = m[i * n + col].clone();
                for j in col + 1..n {
                    let v = (&m[i * n + j] * &pivot - &lead * &m[col * n + j]) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + col] = BigInt::zero();
            }
            prev = pivot;
        }
        let det_int = m[n * n - 1].clone() * BigInt::from(sign);
        Ok(Rational::new(det_int, BigInt::one()) / scale)
    }

    /// Characteristic polynomial `det(xI - A)` (ascending coefficients,
    /// monic of degree n) by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> Result<ExactPoly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = ExactMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m).expect("square product");
            let c = -(am.trace() / rational::rat_int(k as i64));
            coeffs[n - k] = c.clone();
            m = am
                .add(&ExactMatrix::identity(n).scale(&c))
                .expect("same shape");
        }
        Ok(ExactPoly::new(coeffs))
    }

    /// `det(I - t*A)` as an exact polynomial in `t` of degree <= n.
    ///
    /// This is the reversed characteristic polynomial, the denominator of the
    /// Molien summand for the element `A`.
    pub fn det_one_minus_t(&self) -> Result<ExactPoly, MatrixError> {
        let cp = self.charpoly()?;
        let n = self.rows;
        let mut rev = vec![Rational::zero(); n + 1];
        for (i, c) in cp.coeffs().iter().enumerate() {
            rev[n - i] = c.clone();
        }
        Ok(ExactPoly::new(rev))
    }

    /// Clears denominators row by row; returns the integer matrix and the
    /// product of the row scaling factors (so `det(self) = det(int) / scale`).
    fn cleared(&self) -> (Vec<BigInt>, Rational) {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut scale = Rational::one();
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = num_integer::lcm(lcm, self.get(i, j).denom().clone());
            }
            if lcm.is_negative() {
                lcm = -lcm;
            }
            for j in 0..self.cols {
                let e = self.get(i, j);
                out.push(e.numer() * (&lcm / e.denom()));
            }
            scale *= Rational::from_integer(lcm);
        }
        (out, scale)
    }
}

impl core::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn antidiag2() -> ExactMatrix {
        ExactMatrix::from_i64(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn mul_identity() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.mul(&i2).unwrap(), i2);
    }

    #[test]
    fn mul_sign_matrices() {
        let a = ExactMatrix::from_i64(&[&[-1, 0], &[0, 1]]);
        let b = ExactMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let expect = ExactMatrix::from_i64(&[&[-1, 0], &[0, -1]]);
        assert_eq!(a.mul(&b).unwrap(), expect);
        assert_eq!(b.mul(&a).unwrap(), expect);
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = ExactMatrix::identity(2);
        let b = ExactMatrix::identity(3);
        assert_eq!(a.mul(&b), Err(MatrixError::DimensionMismatch));
    }

    #[test]
    fn inverse_trivial_cases() {
        let i3 = ExactMatrix::identity(3);
        assert_eq!(i3.inverse().unwrap(), i3);
        let s = antidiag2();
        assert_eq!(s.inverse().unwrap(), s);
    }

    #[test]
    fn inverse_unimodular_is_integral() {
        // Adjugate oracle for a 2x2 unimodular matrix: [[a,b],[c,d]]^{-1}
        // with det 1 is [[d,-b],[-c,a]].
        let m = ExactMatrix::from_i64(&[&[3, 5], &[4, 7]]); // det 1
        let inv = m.inverse().unwrap();
        assert_eq!(inv, ExactMatrix::from_i64(&[&[7, -5], &[-4, 3]]));
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn rank_cases() {
        assert_eq!(ExactMatrix::zero(3, 3).rank(), 0);
        let d = ExactMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let diff = d.sub(&ExactMatrix::identity(3)).unwrap();
        assert_eq!(diff.rank(), 1);
        // Cartan matrix of G2 has rank 2.
        let g2 = ExactMatrix::from_i64(&[&[2, -1], &[-3, 2]]);
        assert_eq!(g2.rank(), 2);
        assert_eq!(g2.det().unwrap(), rat(1, 1));
    }

    #[test]
    fn det_cases() {
        assert_eq!(ExactMatrix::identity(2).det().unwrap(), rat(1, 1));
        assert_eq!(antidiag2().det().unwrap(), rat(-1, 1));
        let m = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn det_one_minus_t_rotation() {
        // Rotation by 2*pi/3 as an integer matrix: det(I - t g) = 1 + t + t^2.
        let g = ExactMatrix::from_i64(&[&[0, -1], &[1, -1]]);
        let p = g.det_one_minus_t().unwrap();
        assert_eq!(p, ExactPoly::from_i64(&[1, 1, 1]));
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.det_one_minus_t().unwrap(), ExactPoly::from_i64(&[1, -2, 1]));
    }
}
