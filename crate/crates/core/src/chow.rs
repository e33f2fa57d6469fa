//! Intersection theory on the quintic del Pezzo threefold V5.
//!
//! H*(V5, Q) has basis `1, h, l, p` (degrees 0, 2, 4, 6) with
//! `h² = 5l`, `h·l = p`, `h³ = 5p`; anything above degree 6 vanishes.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exact::rational::{rat, ratio, Rational};

/// An element `a0 + a1·h + a2·l + a3·p` of the cohomology ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohClass {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
}

impl CohClass {
    pub fn new(a0: Rational, a1: Rational, a2: Rational, a3: Rational) -> Self {
        CohClass { a0, a1, a2, a3 }
    }

    pub fn from_ints(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        CohClass::new(rat(a0), rat(a1), rat(a2), rat(a3))
    }

    pub fn one() -> Self {
        CohClass::from_ints(1, 0, 0, 0)
    }

    pub fn h() -> Self {
        CohClass::from_ints(0, 1, 0, 0)
    }

    pub fn l() -> Self {
        CohClass::from_ints(0, 0, 1, 0)
    }

    pub fn p() -> Self {
        CohClass::from_ints(0, 0, 0, 1)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CohClass::new(&self.a0 * s, &self.a1 * s, &self.a2 * s, &self.a3 * s)
    }

    /// Degree-6 coefficient, i.e. integration against the fundamental class.
    pub fn degree(&self) -> &Rational {
        &self.a3
    }
}

/// Ring product.
pub fn coh_mul(x: &CohClass, y: &CohClass) -> CohClass {
    let five = rat(5);
    CohClass {
        a0: &x.a0 * &y.a0,
        a1: &x.a0 * &y.a1 + &x.a1 * &y.a0,
        a2: &x.a0 * &y.a2 + &x.a2 * &y.a0 + &five * &x.a1 * &y.a1,
        a3: &x.a0 * &y.a3 + &x.a3 * &y.a0 + &x.a1 * &y.a2 + &x.a2 * &y.a1,
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, y: &CohClass) -> CohClass {
        CohClass::new(&self.a0 + &y.a0, &self.a1 + &y.a1, &self.a2 + &y.a2, &self.a3 + &y.a3)
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, y: &CohClass) -> CohClass {
        CohClass::new(&self.a0 - &y.a0, &self.a1 - &y.a1, &self.a2 - &y.a2, &self.a3 - &y.a3)
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, y: &CohClass) -> CohClass {
        coh_mul(self, y)
    }
}

/// Todd class of V5: `1 + h + (8/3)l + p`.
pub fn todd_v5() -> CohClass {
    CohClass::new(rat(1), rat(1), ratio(8, 3), rat(1))
}

/// Integer Chern data: `c1` in units of `h`, `c2` of `l`, `c3` of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernData {
    pub const fn new(rank: i64, c1: i64, c2: i64, c3: i64) -> Self {
        ChernData { rank, c1, c2, c3 }
    }

    /// `c3 ≡ c1·c2 (mod 2)`. Riemann-Roch gives integer Euler
    /// characteristics for all twists exactly when this holds; every
    /// coherent sheaf satisfies it.
    pub fn satisfies_parity(&self) -> bool {
        (self.c3 - self.c1 * self.c2).rem_euclid(2) == 0
    }
}

pub const CHERN_U: ChernData = ChernData::new(2, -1, 2, 0);
pub const CHERN_QV: ChernData = ChernData::new(3, -1, 3, -1);
pub const CHERN_O: ChernData = ChernData::new(1, 0, 0, 0);
pub const CHERN_INSTANTON: ChernData = ChernData::new(2, 0, 2, 0);

/// Chern character, coefficients of `1, h, l, p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChChar(pub CohClass);

impl ChChar {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational, ch3: Rational) -> Self {
        ChChar(CohClass::new(ch0, ch1, ch2, ch3))
    }

    pub fn from_ints(ch0: i64, ch1: i64, ch2: i64, ch3: i64) -> Self {
        ChChar(CohClass::from_ints(ch0, ch1, ch2, ch3))
    }

    pub fn class(&self) -> &CohClass {
        &self.0
    }

    pub fn coeffs(&self) -> [&Rational; 4] {
        [&self.0.a0, &self.0.a1, &self.0.a2, &self.0.a3]
    }

    /// Dual character: odd-degree parts change sign.
    pub fn dual(&self) -> ChChar {
        let c = &self.0;
        ChChar::new(c.a0.clone(), -c.a1.clone(), c.a2.clone(), -c.a3.clone())
    }

    pub fn scale(&self, s: i64) -> ChChar {
        ChChar(self.0.scale(&rat(s)))
    }
}

impl Add for &ChChar {
    type Output = ChChar;
    fn add(self, y: &ChChar) -> ChChar {
        ChChar(&self.0 + &y.0)
    }
}

impl Sub for &ChChar {
    type Output = ChChar;
    fn sub(self, y: &ChChar) -> ChChar {
        ChChar(&self.0 - &y.0)
    }
}

impl Neg for &ChChar {
    type Output = ChChar;
    fn neg(self) -> ChChar {
        ChChar(self.0.scale(&rat(-1)))
    }
}

/// `ch0 = r`, `ch1 = c1`, `ch2 = (c1² − 2c2)/2`, `ch3 = (c1³ − 3c1c2 + 3c3)/6`,
/// with the products evaluated in the ring.
pub fn chern_to_ch(c: &ChernData) -> ChChar {
    let c1 = CohClass::h().scale(&rat(c.c1));
    let c2 = CohClass::l().scale(&rat(c.c2));
    let c3 = CohClass::p().scale(&rat(c.c3));
    let c1sq = &c1 * &c1;
    let ch2 = (&c1sq - &c2.scale(&rat(2))).scale(&ratio(1, 2));
    let ch3 = (&(&(&c1sq * &c1) - &(&c1 * &c2).scale(&rat(3))) + &c3.scale(&rat(3)))
        .scale(&ratio(1, 6));
    ChChar::new(rat(c.rank), rat(c.c1), ch2.a2, ch3.a3)
}

/// `e^{nh} = 1 + nh + (5n²/2)l + (5n³/6)p`.
pub fn exp_h(n: i64) -> CohClass {
    let n = rat(n);
    CohClass::new(rat(1), n.clone(), ratio(5, 2) * &n * &n, ratio(5, 6) * &n * &n * &n)
}

/// `ch · e^{nh}`, the character of `F(n)`.
pub fn twist(ch: &ChChar, n: i64) -> ChChar {
    ChChar(&ch.0 * &exp_h(n))
}

/// Cubic `c3n·n³ + c2n·n² + c1n·n + c0n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPoly {
    pub c3n: Rational,
    pub c2n: Rational,
    pub c1n: Rational,
    pub c0n: Rational,
}

impl HilbertPoly {
    pub fn new(c3n: Rational, c2n: Rational, c1n: Rational, c0n: Rational) -> Self {
        HilbertPoly { c3n, c2n, c1n, c0n }
    }

    pub fn eval(&self, n: i64) -> Rational {
        let n = rat(n);
        ((&self.c3n * &n + &self.c2n) * &n + &self.c1n) * &n + &self.c0n
    }

    /// Coefficients, highest degree first.
    pub fn coeffs(&self) -> [&Rational; 4] {
        [&self.c3n, &self.c2n, &self.c1n, &self.c0n]
    }
}

/// Riemann-Roch with a chosen Todd class. `Default` uses the Todd class of
/// V5; other classes exist for fault-injection tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiemannRoch {
    todd: CohClass,
}

impl Default for RiemannRoch {
    fn default() -> Self {
        RiemannRoch { todd: todd_v5() }
    }
}

impl RiemannRoch {
    pub fn with_todd(todd: CohClass) -> Self {
        RiemannRoch { todd }
    }

    pub fn todd(&self) -> &CohClass {
        &self.todd
    }

    /// Degree-6 part of `ch · td`.
    pub fn euler_char(&self, ch: &ChChar) -> Rational {
        (&ch.0 * &self.todd).a3
    }

    /// `n ↦ χ(F(n))`, recovered by Newton interpolation on `n = 0..=3`.
    pub fn hilbert_poly(&self, ch: &ChChar) -> HilbertPoly {
        let v: Vec<Rational> = (0..4).map(|n| self.euler_char(&twist(ch, n))).collect();
        // forward differences
        let d1 = &v[1] - &v[0];
        let d2 = &v[2] - &v[1] * rat(2) + &v[0];
        let d3 = &v[3] - &v[2] * rat(3) + &v[1] * rat(3) - &v[0];
        // v0 + d1·n + d2·n(n-1)/2 + d3·n(n-1)(n-2)/6
        let c3n = &d3 / rat(6);
        let c2n = &d2 / rat(2) - &d3 / rat(2);
        let c1n = &d1 - &d2 / rat(2) + &d3 / rat(3);
        HilbertPoly::new(c3n, c2n, c1n, v[0].clone())
    }

    /// `χ(E, F)`: degree-6 part of `ch(E)^∨ · ch(F) · td`.
    pub fn euler_pairing(&self, ch_e: &ChChar, ch_f: &ChChar) -> Rational {
        self.euler_char(&ChChar(&ch_e.dual().0 * &ch_f.0))
    }
}

pub fn euler_char(ch: &ChChar) -> Rational {
    RiemannRoch::default().euler_char(ch)
}

pub fn hilbert_poly(ch: &ChChar) -> HilbertPoly {
    RiemannRoch::default().hilbert_poly(ch)
}

pub fn euler_pairing(ch_e: &ChChar, ch_f: &ChChar) -> Rational {
    RiemannRoch::default().euler_pairing(ch_e, ch_f)
}

/// Fixed Chern characters.
pub mod characters {
    use super::*;

    pub fn ch_u() -> ChChar {
        chern_to_ch(&CHERN_U)
    }

    pub fn ch_qv() -> ChChar {
        chern_to_ch(&CHERN_QV)
    }

    pub fn ch_o() -> ChChar {
        ChChar::from_ints(1, 0, 0, 0)
    }

    /// Structure sheaf of a line: the unique character with `χ(O_l(n)) = n + 1`.
    pub fn ch_oline() -> ChChar {
        ChChar::from_ints(0, 0, 1, 0)
    }

    pub fn ch_iline() -> ChChar {
        &ch_o() - &ch_oline()
    }

    /// Structure sheaf of a conic: `χ(O_C(n)) = 2n + 1`.
    pub fn ch_oconic() -> ChChar {
        ChChar::from_ints(0, 0, 2, -1)
    }

    pub fn ch_iconic() -> ChChar {
        &ch_o() - &ch_oconic()
    }

    /// `θ(1)` for a theta characteristic θ on a smooth conic: `χ = 2n + 2`.
    pub fn ch_theta1() -> ChChar {
        ChChar::from_ints(0, 0, 2, 0)
    }

    pub fn ch_instanton() -> ChChar {
        ChChar::from_ints(2, 0, -2, 0)
    }

    /// Ideal sheaf of a zero-dimensional subscheme of the given length.
    pub fn ch_ipoints(length: i64) -> ChChar {
        ChChar::from_ints(1, 0, 0, -length)
    }
}

impl Zero for CohClass {
    fn zero() -> Self {
        CohClass::from_ints(0, 0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero()
    }
}

impl Add for CohClass {
    type Output = CohClass;
    fn add(self, y: CohClass) -> CohClass {
        &self + &y
    }
}
