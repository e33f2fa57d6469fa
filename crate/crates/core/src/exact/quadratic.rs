//! Elements `a + b√d` of a quadratic field, `d` a squarefree integer ≠ 0, 1.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadNum {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        QuadNum { a, b, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// `a² − d·b²`; nonzero for nonzero elements since `d` is not a square.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    pub fn recip(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero in Q(√d)");
        let c = self.conj();
        QuadNum { a: c.a / &n, b: c.b / &n, d: c.d }
    }
}

impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, rhs.d);
        QuadNum { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d: self.d.clone() }
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, rhs.d);
        QuadNum { a: &self.a - &rhs.a, b: &self.b - &rhs.b, d: self.d.clone() }
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        debug_assert_eq!(self.d, rhs.d);
        let d = Rational::from_integer(self.d.clone());
        QuadNum {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        }
    }
}
