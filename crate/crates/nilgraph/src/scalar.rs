//! Exact scalar types: arbitrary-precision integers and rationals, and the
//! real quadratic extension Q(sqrt(d)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// Field operations needed by generic elimination routines.
pub trait FieldScalar: Clone + PartialEq + fmt::Debug {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    fn f_div(&self, other: &Self) -> Self;
    fn f_neg(&self) -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_from_int(v: &Int) -> Self;
}

impl FieldScalar for Rat {
    fn f_zero() -> Self {
        Rat::zero()
    }
    fn f_one() -> Self {
        Rat::one()
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_div(&self, other: &Self) -> Self {
        self / other
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_from_int(v: &Int) -> Self {
        Rat::from_integer(v.clone())
    }
}

/// An element a + b*sqrt(d) of Q(sqrt(d)) with d > 0 square-free.
///
/// `d == 0` marks a purely rational element whose extension has not been
/// pinned down yet; arithmetic joins the tags and panics on a genuine clash.
#[derive(Clone)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub d: i64,
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        // the tag is irrelevant while the irrational part vanishes
        self.a == other.a
            && self.b == other.b
            && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        QuadExt { a, b, d }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadExt {
            a,
            b: Rat::zero(),
            d: 0,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rat(rat(v))
    }

    /// b*sqrt(d)
    pub fn sqrt_term(b: Rat, d: i64) -> Self {
        QuadExt {
            a: Rat::zero(),
            b,
            d,
        }
    }

    fn join_d(x: i64, y: i64) -> i64 {
        if x == 0 {
            y
        } else if y == 0 {
            x
        } else {
            assert_eq!(x, y, "mixed quadratic extensions Q(sqrt({x})) and Q(sqrt({y}))");
            x
        }
    }

    /// Field norm a^2 - d*b^2; zero exactly on the zero element when d is a
    /// square-free non-square.
    pub fn norm(&self) -> Rat {
        &(&self.a * &self.a) - &(Rat::from_integer(int(self.d)) * &self.b * &self.b)
    }
}

pub fn is_square_free(d: i64) -> bool {
    if d <= 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

pub fn check_square_free(d: i64) -> Result<()> {
    if is_square_free(d) && d > 1 {
        Ok(())
    } else {
        Err(Error::NotSquareFree(d))
    }
}

impl FieldScalar for QuadExt {
    fn f_zero() -> Self {
        QuadExt::from_int(0)
    }
    fn f_one() -> Self {
        QuadExt::from_int(1)
    }
    fn f_add(&self, other: &Self) -> Self {
        QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: Self::join_d(self.d, other.d),
        }
    }
    fn f_sub(&self, other: &Self) -> Self {
        QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: Self::join_d(self.d, other.d),
        }
    }
    fn f_mul(&self, other: &Self) -> Self {
        let d = Self::join_d(self.d, other.d);
        let dd = Rat::from_integer(int(d));
        QuadExt {
            a: &(&self.a * &other.a) + &(&dd * &self.b * &other.b),
            b: &(&self.a * &other.b) + &(&self.b * &other.a),
            d,
        }
    }
    fn f_div(&self, other: &Self) -> Self {
        let n = other.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt(d))");
        let conj = QuadExt {
            a: other.a.clone(),
            b: -other.b.clone(),
            d: other.d,
        };
        let num = self.f_mul(&conj);
        QuadExt {
            a: &num.a / &n,
            b: &num.b / &n,
            d: Self::join_d(self.d, other.d),
        }
    }
    fn f_neg(&self) -> Self {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
    fn f_is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn f_from_int(v: &Int) -> Self {
        QuadExt::from_rat(Rat::from_integer(v.clone()))
    }
}

fn fmt_quadext(q: &QuadExt, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.b.is_zero() {
        write!(f, "{}", q.a)
    } else if q.a.is_zero() {
        write!(f, "{}*sqrt({})", q.b, q.d)
    } else if q.b.is_negative() {
        write!(f, "{} - {}*sqrt({})", q.a, -q.b.clone(), q.d)
    } else {
        write!(f, "{} + {}*sqrt({})", q.a, q.b, q.d)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_quadext(self, f)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_quadext(self, f)
    }
}
