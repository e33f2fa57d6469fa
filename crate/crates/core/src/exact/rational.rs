//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` keeps every value reduced with a positive
//! denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Squarefree part of a nonzero integer, keeping the sign.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree part of zero");
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out * m * sign
}

/// Writes a positive rational `x` as `f² · s` with `s` a squarefree integer
/// and `f` rational. Returns `(s, f)`.
pub fn split_square(x: &Rational) -> (BigInt, Rational) {
    assert!(!x.is_zero());
    // x = p/q = p·q / q²
    let pq = x.numer() * x.denom();
    let s = squarefree_part(&pq);
    let f2 = &pq / &s;
    let f = f2.sqrt();
    debug_assert_eq!(&f * &f, f2);
    (s, Rational::new(f, x.denom().clone()))
}

/// Exact square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let (s, f) = split_square(x);
    s.is_one().then_some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(parse_rational("10/4").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&BigInt::from(-4)), BigInt::from(-1));
        assert_eq!(squarefree_part(&BigInt::from(72)), BigInt::from(2));
        assert_eq!(squarefree_part(&BigInt::from(15)), BigInt::from(15));
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
        let (s, f) = split_square(&ratio(-8, 3));
        assert_eq!(s, BigInt::from(-6));
        assert_eq!(&f * &f * Rational::from_integer(s), ratio(-8, 3));
    }
}
