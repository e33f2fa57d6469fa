//! Homogeneous binary forms in `x, y` over Q.
//!
//! Common projective roots are detected with a GCD over Q; since the GCD of
//! two polynomials does not change under field extension, a nonconstant
//! result is equivalent to a shared root over the algebraic closure.

use num_traits::{One, Zero};

use super::matrix::MatQ;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `Σ coeffs[k] · x^(degree-k) · y^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    /// Coefficients ordered from `x^degree` down to `y^degree`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Rational::zero(); degree + 1] }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero form of degree zero.
    pub fn is_nonzero_constant(&self) -> bool {
        self.degree() == 0 && !self.is_zero()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * pow(x, n - k) * pow(y, k))
            .sum()
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Multiplicity of `y` as a factor (number of leading zero coefficients).
    fn y_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(x, 1)` as ascending univariate coefficients, trimmed.
    fn dehomogenize(&self) -> Vec<Rational> {
        let mut p: Vec<Rational> = self.coeffs.iter().rev().cloned().collect();
        trim(&mut p);
        p
    }

    /// Scales so the first nonzero coefficient is one.
    pub fn normalized(&self) -> BinaryForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                BinaryForm { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of ascending polynomials; `b` must be nonzero and trimmed.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let (mut a, mut b) = (a, b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Greatest common divisor, normalized so its first nonzero coefficient is
/// one (monic in `x`, or in `y` when `x` does not occur). `gcd(0, 0) = 0`.
pub fn binary_gcd(f: &BinaryForm, g: &BinaryForm) -> BinaryForm {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return BinaryForm::zero(0),
        (true, false) => return g.normalized(),
        (false, true) => return f.normalized(),
        _ => {}
    }
    let e = f.y_valuation().min(g.y_valuation());
    let u = poly_gcd(f.dehomogenize(), g.dehomogenize());
    // u(x) ascending of degree m homogenizes to Σ u_i x^i y^(m-i); then
    // multiply by y^e.
    let m = u.len() - 1;
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); e];
    coeffs.extend(u.into_iter().rev());
    debug_assert_eq!(coeffs.len(), m + e + 1);
    BinaryForm { coeffs }.normalized()
}

/// Sylvester determinant of two nonzero forms, with each form taken at its
/// stated degree. Vanishes exactly when the forms share a projective root,
/// including the root at infinity `[1:0]` when both top coefficients vanish.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let (m, n) = (f.degree(), g.degree());
    if m + n == 0 {
        return Ok(Rational::one());
    }
    let size = m + n;
    let mut s = MatQ::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.coeffs.iter().enumerate() {
            s[(i, i + k)] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs.iter().enumerate() {
            s[(n + i, i + k)] = c.clone();
        }
    }
    s.det()
}
