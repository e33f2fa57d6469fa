//! Lines on V5 as points of P², ternary quadrics, and the splitting of a
//! degenerate discriminant into its two line factors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{rational_sqrt, split_square};
use crate::exact::{rat, MatQ, QuadNum, Rational};

/// A point `[a1 : a2 : a3]` of P², stored with its first nonzero
/// coordinate equal to one, so derived equality is projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinePoint([Rational; 3]);

impl LinePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Parse("a projective point needs a nonzero coordinate".into()))?
            .recip();
        Ok(LinePoint(coords.map(|c| c * &lead)))
    }

    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        LinePoint::new(c.map(rat))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    /// The linear form `⟨a, t⟩`.
    pub fn pair(&self, t: &[Rational; 3]) -> Rational {
        self.0.iter().zip(t).map(|(a, b)| a * b).sum()
    }
}

/// `d1·t1² + d2·t2² + d3·t3² + m12·t1t2 + m13·t1t3 + m23·t2t3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryQuadric {
    pub d1: Rational,
    pub d2: Rational,
    pub d3: Rational,
    pub m12: Rational,
    pub m13: Rational,
    pub m23: Rational,
}

impl TernaryQuadric {
    pub fn from_coeffs(c: [Rational; 6]) -> Self {
        let [d1, d2, d3, m12, m13, m23] = c;
        TernaryQuadric { d1, d2, d3, m12, m13, m23 }
    }

    /// `(d1, d2, d3, m12, m13, m23)`.
    pub fn coeffs(&self) -> [Rational; 6] {
        [
            self.d1.clone(),
            self.d2.clone(),
            self.d3.clone(),
            self.m12.clone(),
            self.m13.clone(),
            self.m23.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Zero::is_zero)
    }

    /// Symmetric Gram matrix `M` with `q(t) = tᵀ M t`.
    pub fn matrix(&self) -> MatQ {
        let h = |x: &Rational| x / rat(2);
        MatQ::from_rows(vec![
            vec![self.d1.clone(), h(&self.m12), h(&self.m13)],
            vec![h(&self.m12), self.d2.clone(), h(&self.m23)],
            vec![h(&self.m13), h(&self.m23), self.d3.clone()],
        ])
        .expect("3x3")
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    pub fn eval(&self, t: &[Rational; 3]) -> Rational {
        let [t1, t2, t3] = t;
        &self.d1 * t1 * t1
            + &self.d2 * t2 * t2
            + &self.d3 * t3 * t3
            + &self.m12 * t1 * t2
            + &self.m13 * t1 * t3
            + &self.m23 * t2 * t3
    }

    /// Symmetrized product `⟨u, t⟩ · ⟨v, t⟩`.
    pub fn product(u: &[Rational; 3], v: &[Rational; 3]) -> Self {
        let c = |i: usize, j: usize| &u[i] * &v[j] + &u[j] * &v[i];
        TernaryQuadric {
            d1: &u[0] * &v[0],
            d2: &u[1] * &v[1],
            d3: &u[2] * &v[2],
            m12: c(0, 1),
            m13: c(0, 2),
            m23: c(1, 2),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TernaryQuadric::from_coeffs(self.coeffs().map(|c| c * s))
    }

    pub fn sub(&self, other: &TernaryQuadric) -> Self {
        let (a, b) = (self.coeffs(), other.coeffs());
        TernaryQuadric::from_coeffs(std::array::from_fn(|i| &a[i] - &b[i]))
    }

    /// Equal up to a nonzero rational factor.
    pub fn proportional(&self, other: &TernaryQuadric) -> bool {
        let (a, b) = (self.coeffs(), other.coeffs());
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        (0..6).all(|i| (0..6).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }
}

/// The two Jordan-Hölder line factors of a strictly semistable
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LinePair {
    /// Two distinct rational lines, sorted lexicographically.
    Rational([LinePoint; 2]),
    /// A repeated line; the quadric has rank 1.
    Double(LinePoint),
    /// The conjugate lines `u ± √d·v` over Q(√d), `d` squarefree and not a
    /// square. Normalized so `u + √d·v` has first nonzero coordinate one and
    /// the first nonzero coordinate of `v` is positive.
    Conjugate { u: [Rational; 3], v: [Rational; 3], d: BigInt },
}

impl LinePair {
    /// Builds an unordered pair from two rational lines.
    pub fn from_lines(a: LinePoint, b: LinePoint) -> Self {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => LinePair::Double(a),
            std::cmp::Ordering::Less => LinePair::Rational([a, b]),
            std::cmp::Ordering::Greater => LinePair::Rational([b, a]),
        }
    }

    /// Rank of the quadric `⟨a, t⟩·⟨a', t⟩`.
    pub fn quadric_rank(&self) -> usize {
        match self {
            LinePair::Double(_) => 1,
            _ => 2,
        }
    }

    /// The product of the two linear forms, with rational coefficients.
    pub fn product(&self) -> TernaryQuadric {
        match self {
            LinePair::Rational([a, b]) => TernaryQuadric::product(a.coords(), b.coords()),
            LinePair::Double(a) => TernaryQuadric::product(a.coords(), a.coords()),
            LinePair::Conjugate { u, v, d } => {
                // (u + √d v)(u − √d v) = u u − d v v
                TernaryQuadric::product(u, u)
                    .sub(&TernaryQuadric::product(v, v).scale(&Rational::from_integer(d.clone())))
            }
        }
    }
}

fn first_nonzero(v: &[Rational]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

fn normalize_conjugate(u: [Rational; 3], v: [Rational; 3], d: BigInt) -> LinePair {
    let k = (0..3)
        .find(|&i| !u[i].is_zero() || !v[i].is_zero())
        .expect("nonzero line");
    let inv = QuadNum::new(u[k].clone(), v[k].clone(), d.clone()).recip();
    let mut nu: [Rational; 3] = Default::default();
    let mut nv: [Rational; 3] = Default::default();
    for i in 0..3 {
        let z = &QuadNum::new(u[i].clone(), v[i].clone(), d.clone()) * &inv;
        nu[i] = z.a;
        nv[i] = z.b;
    }
    if let Some(j) = first_nonzero(&nv) {
        if nv[j].is_negative() {
            nv = nv.map(|x| -x);
        }
    }
    LinePair::Conjugate { u: nu, v: nv, d }
}

/// Splits a nonzero quadric of rank ≤ 2 into its two linear factors.
pub fn split_quadric(q: &TernaryQuadric) -> Result<LinePair> {
    let m = q.matrix();
    match m.rank() {
        0 => Err(Error::Internal("zero discriminant for a semistable representation".into())),
        1 => {
            // M = c·a·aᵀ, so any nonzero row is proportional to a
            let row = (0..3)
                .map(|i| m.row(i))
                .find(|r| r.iter().any(|x| !x.is_zero()))
                .expect("rank one");
            let a = LinePoint::new([row[0].clone(), row[1].clone(), row[2].clone()])?;
            Ok(LinePair::Double(a))
        }
        2 => {
            let k = m.kernel_basis().remove(0);
            let k: Vec<Rational> = k.entries().to_vec();
            // drop a coordinate where the singular point is nonzero and
            // restrict q to the remaining coordinate plane
            let drop = first_nonzero(&k).expect("kernel vector");
            let [i, j] = match drop {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let a = m[(i, i)].clone();
            let b = &m[(i, j)] * rat(2);
            let c = m[(j, j)].clone();
            // binary form a s² + b s u + c u², factors (α s + β u)
            let lift = |alpha: &Rational, beta: &Rational| -> [Rational; 3] {
                let mut l: [Rational; 3] = Default::default();
                l[i] = alpha.clone();
                l[j] = beta.clone();
                l[drop] = -(alpha * &k[i] + beta * &k[j]) / &k[drop];
                l
            };
            let disc = &b * &b - rat(4) * &a * &c;
            if disc.is_zero() {
                return Err(Error::Internal("rank-2 quadric with a square restriction".into()));
            }
            if a.is_zero() {
                // u (b s + c u)
                let l1 = LinePoint::new(lift(&Rational::zero(), &Rational::one()))?;
                let l2 = LinePoint::new(lift(&b, &c))?;
                return Ok(LinePair::from_lines(l1, l2));
            }
            // a (s − r₁u)(s − r₂u) with r = (−b ± √disc)/(2a); factor
            // 2a·s + (b ∓ √disc)·u
            let two_a = &a * rat(2);
            if let Some(root) = rational_sqrt(&disc) {
                let l1 = LinePoint::new(lift(&two_a, &(&b - &root)))?;
                let l2 = LinePoint::new(lift(&two_a, &(&b + &root)))?;
                return Ok(LinePair::from_lines(l1, l2));
            }
            let (d, f) = split_square(&disc);
            // √disc = f·√d; the line is lift(2a, b) − √d · lift(0, f)
            let u = lift(&two_a, &b);
            let v = lift(&Rational::zero(), &f);
            Ok(normalize_conjugate(u, v, d))
        }
        _ => Err(Error::NotStrictlySemistable),
    }
}
