//! Dense exact matrices over Z, Q and Q(sqrt(d)): fraction-free determinants,
//! characteristic polynomials, the integer-like test and eigenvalue-1 checks.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::scalar::{FieldScalar, Int, QuadExt, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;
pub type QuadMatrix = Matrix<QuadExt>;

impl<S: Clone> Matrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j]).clone()
        })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Int::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Int::one() } else { Int::zero() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn diagonal(entries: &[Int]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Int::zero()
            }
        })
    }

    /// Permutation matrix P with P e_j = e_{perm[j]}.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Int::one());
        }
        m
    }

    pub fn block_diagonal(blocks: &[IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows()).sum();
        let mut m = Self::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square());
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.rows();
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix subtraction".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Int::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * &v[k];
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn trace(&self) -> Int {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Int> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, Int::zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        let d = self.det()?;
        Ok(d.abs().is_one())
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|v| Rat::from_integer(v.clone()))
    }

    pub fn to_quad(&self, d: i64) -> QuadMatrix {
        self.map(|v| QuadExt::new(Rat::from_integer(v.clone()), Rat::zero(), d))
    }

    /// Monic characteristic polynomial det(x*I - M), exact.
    pub fn char_poly(&self) -> Result<IntPoly> {
        let p = self.to_rat().char_poly()?;
        Ok(p.to_int_poly()
            .expect("characteristic polynomial of an integer matrix has integer coefficients"))
    }

    /// True exactly when det(M - I) = 0.
    pub fn has_eigenvalue_one(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.sub(&Self::identity(n))?.det()?.is_zero())
    }

    /// Inverse of a matrix with determinant +-1.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let inv = self
            .to_rat()
            .inverse()?
            .ok_or_else(|| Error::NotUnimodular("0".into()))?;
        if !inv.data.iter().all(|v| v.is_integer()) {
            return Err(Error::NotUnimodular(self.det()?.to_string()));
        }
        Ok(inv.map(|v| v.to_integer()))
    }

    /// gcd of all entries.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for v in &self.data {
            g = g.gcd(v);
        }
        g
    }
}

// ---------------------------------------------------------------------------
// Matrices over a field
// ---------------------------------------------------------------------------

impl<S: FieldScalar> Matrix<S> {
    pub fn zeros_field(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::f_zero())
    }

    pub fn identity_field(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::f_one() } else { S::f_zero() })
    }

    pub fn add_field(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).f_add(other.get(i, j))
        }))
    }

    pub fn sub_field(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix subtraction".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).f_sub(other.get(i, j))
        }))
    }

    pub fn mul_field(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = S::f_zero();
            for k in 0..self.cols {
                acc = acc.f_add(&self.get(i, k).f_mul(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn mul_vec_field(&self, v: &[S]) -> Result<Vec<S>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::f_zero();
                for k in 0..self.cols {
                    acc = acc.f_add(&self.get(i, k).f_mul(&v[k]));
                }
                acc
            })
            .collect())
    }

    /// Determinant by Gaussian elimination with exact field arithmetic.
    pub fn det_field(&self) -> Result<S> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(S::f_one());
        }
        let mut a = self.clone();
        let mut det = S::f_one();
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !a.get(i, k).f_is_zero()) {
                Some(i) => i,
                None => return Ok(S::f_zero()),
            };
            if pivot != k {
                a.swap_rows(pivot, k);
                det = det.f_neg();
            }
            let p = a.get(k, k).clone();
            det = det.f_mul(&p);
            for i in k + 1..n {
                if a.get(i, k).f_is_zero() {
                    continue;
                }
                let factor = a.get(i, k).f_div(&p);
                for j in k..n {
                    let v = a.get(i, j).f_sub(&factor.f_mul(a.get(k, j)));
                    a.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let pivot = match (r..a.rows).find(|&i| !a.get(i, c).f_is_zero()) {
                Some(i) => i,
                None => continue,
            };
            a.swap_rows(pivot, r);
            let p = a.get(r, c).clone();
            for j in c..a.cols {
                let v = a.get(r, j).f_div(&p);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).f_is_zero() {
                    continue;
                }
                let factor = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j).f_sub(&factor.f_mul(a.get(r, j)));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// None when the matrix is singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        let n = self.require_square()?;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                S::f_one()
            } else {
                S::f_zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| r.get(i, j + n).clone())))
    }

    /// Solve A x = b; returns None when inconsistent. Free variables are set
    /// to zero, so the solution is deterministic.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve: rhs length".into()));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::f_zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![S::f_zero(); self.cols];
            v[fc] = S::f_one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, fc).f_neg();
            }
            basis.push(v);
        }
        basis
    }
}

// ---------------------------------------------------------------------------
// Rational matrices
// ---------------------------------------------------------------------------

impl RatMatrix {
    pub fn trace_rat(&self) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Monic characteristic polynomial via the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Result<RatPoly> {
        let n = self.require_square()?;
        // coefficients from the leading term down
        let mut coeffs = vec![Rat::one()];
        let mut m = self.clone();
        for k in 1..=n {
            let c = -m.trace_rat() / Rat::from_integer(Int::from(k));
            coeffs.push(c.clone());
            if k < n {
                let shifted = m.add_field(&Self::identity_field(n).scale(&c))?;
                m = self.mul_field(&shifted)?;
            }
        }
        coeffs.reverse();
        Ok(RatPoly::new(coeffs))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        self.map(|v| v * s)
    }

    /// Integer-like: characteristic polynomial has integer coefficients and
    /// constant term +-1.
    pub fn is_integer_like(&self) -> Result<bool> {
        let p = self.char_poly()?;
        if !p.has_integer_coeffs() {
            return Ok(false);
        }
        let c0 = p.coeff(0);
        Ok(c0.to_integer().abs().is_one())
    }

    pub fn has_eigenvalue_one(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self
            .sub_field(&Self::identity_field(n))?
            .det_field()?
            .is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(self.map(|v| v.to_integer()))
    }
}

impl<S: fmt::Display + Clone> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
