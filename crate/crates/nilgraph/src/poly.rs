//! Integer polynomials with exact arithmetic: evaluation, products,
//! reciprocals, resultants and companion matrices.

use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::scalar::{int, Int, Rat};

/// Dense integer polynomial, coefficients stored lowest degree first.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![Int::one()],
        }
    }

    /// x - c
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Reciprocal polynomial x^deg * p(1/x); drops trailing zero coefficients,
    /// so the degree shrinks when the constant term vanishes.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Companion matrix of a monic polynomial of degree >= 1.
    pub fn companion(&self) -> Result<IntMatrix> {
        let d = self
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidInput("companion matrix needs degree >= 1".into()))?;
        if !self.is_monic() {
            return Err(Error::InvalidInput("companion matrix needs a monic polynomial".into()));
        }
        let mut m = IntMatrix::zeros(d, d);
        for i in 1..d {
            m.set(i, i - 1, Int::one());
        }
        for i in 0..d {
            m.set(i, d - 1, -self.coeff(i));
        }
        Ok(m)
    }

    /// Resultant via the Sylvester matrix. Zero exactly when the polynomials
    /// share a root (over the algebraic closure).
    pub fn resultant(&self, other: &Self) -> Result<Int> {
        let m = self
            .degree()
            .ok_or_else(|| Error::InvalidInput("resultant of the zero polynomial".into()))?;
        let n = other
            .degree()
            .ok_or_else(|| Error::InvalidInput("resultant of the zero polynomial".into()))?;
        if m == 0 {
            return Ok(self.leading().pow(n as u32));
        }
        if n == 0 {
            return Ok(other.leading().pow(m as u32));
        }
        let size = m + n;
        let mut s = IntMatrix::zeros(size, size);
        for row in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                s.set(row, row + k, c.clone());
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                s.set(n + row, row + k, c.clone());
            }
        }
        s.det()
    }
}

/// Rational polynomial, used for characteristic polynomials over Q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Exact conversion; fails if some coefficient is not an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if !self.has_integer_coeffs() {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }
}

fn fmt_poly<T: fmt::Display + Signed>(coeffs: &[T], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let unit = abs.is_one() && i > 0;
        if !unit {
            write!(f, "{abs}")?;
        }
        match i {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_mul() {
        // (x - 1)(x + 1) = x^2 - 1
        let p = IntPoly::from_i64(&[-1, 1]);
        let q = IntPoly::from_i64(&[1, 1]);
        assert_eq!(p.mul(&q), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(p.eval(&int(3)), int(2));
    }

    #[test]
    fn companion_has_right_char_poly() {
        let p = IntPoly::from_i64(&[-1, -1, 1]); // x^2 - x - 1
        let c = p.companion().unwrap();
        assert_eq!(c.char_poly().unwrap(), p);
    }

    #[test]
    fn resultant_detects_shared_roots() {
        // p = (x-2)(x-3), q = (x-3)(x-5): common root 3
        let p = IntPoly::from_i64(&[6, -5, 1]);
        let q = IntPoly::from_i64(&[15, -8, 1]);
        assert!(p.resultant(&q).unwrap().is_zero());
        let r = IntPoly::from_i64(&[35, -12, 1]); // (x-5)(x-7)
        assert!(!p.resultant(&r).unwrap().is_zero());
    }

    #[test]
    fn reverse_catches_unit_root_products() {
        // x^2 - 3x + 1 is self-reciprocal: its roots multiply to 1.
        let p = IntPoly::from_i64(&[1, -3, 1]);
        assert!(p.resultant(&p.reverse()).unwrap().is_zero());
        // x^2 - x - 1 has root product -1, no pair of roots multiplies to 1.
        let q = IntPoly::from_i64(&[-1, -1, 1]);
        assert!(!q.resultant(&q.reverse()).unwrap().is_zero());
    }

    #[test]
    fn display_is_readable() {
        let p = IntPoly::from_i64(&[1, -3, 1]);
        assert_eq!(p.to_string(), "x^2 - 3x + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[-1]).to_string(), "-1");
    }
}
