//! Representations of the three-arrow Kronecker quiver with dimension
//! vector (2,2), their semi-invariants and the group action.

use num_traits::{One, Zero};

use super::lines::{LinePoint, TernaryQuadric};
use crate::error::{Error, Result};
use crate::exact::{rat, MatQ, Rational};

/// Dimension vector of a subrepresentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub d1: u32,
    pub d2: u32,
}

impl DimVector {
    pub const fn new(d1: u32, d2: u32) -> Self {
        DimVector { d1, d2 }
    }
}

/// The stability weight is fixed to Θ = (−1, 1).
pub fn theta_weight(d: DimVector) -> i64 {
    -(d.d1 as i64) + d.d2 as i64
}

/// Three 2×2 matrices `Y1, Y2, Y3`, one per arrow, mapping the first vertex
/// space to the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep22 {
    ys: [MatQ; 3],
}

impl Rep22 {
    pub fn new(y1: MatQ, y2: MatQ, y3: MatQ) -> Result<Self> {
        for y in [&y1, &y2, &y3] {
            if (y.rows(), y.cols()) != (2, 2) {
                return Err(Error::Shape(format!(
                    "arrow matrices must be 2x2, got {}x{}",
                    y.rows(),
                    y.cols()
                )));
            }
        }
        Ok(Rep22 { ys: [y1, y2, y3] })
    }

    pub fn from_ints(ys: [[[i64; 2]; 2]; 3]) -> Self {
        let [a, b, c] = ys.map(MatQ::from_ints);
        Rep22 { ys: [a, b, c] }
    }

    pub fn zero() -> Self {
        Rep22::from_ints([[[0; 2]; 2]; 3])
    }

    pub fn ys(&self) -> &[MatQ; 3] {
        &self.ys
    }

    pub fn y(&self, i: usize) -> &MatQ {
        &self.ys[i]
    }

    /// The 12 coordinates `(a_i, b_i, c_i, d_i)` for `i = 1, 2, 3`.
    pub fn coordinates(&self) -> Vec<Rational> {
        self.ys.iter().flat_map(|y| y.entries().iter().cloned()).collect()
    }

    pub fn from_coordinates(c: &[Rational]) -> Result<Self> {
        if c.len() != 12 {
            return Err(Error::Shape(format!("{} coordinates, expected 12", c.len())));
        }
        let m = |k: usize| MatQ::from_vec(2, 2, c[4 * k..4 * k + 4].to_vec());
        Rep22::new(m(0)?, m(1)?, m(2)?)
    }

    /// `[Y1; Y2; Y3]`, 6×2. Its kernel is the common kernel of the arrows.
    pub fn stacked(&self) -> MatQ {
        MatQ::vstack(&[&self.ys[0], &self.ys[1], &self.ys[2]]).expect("2x2 blocks")
    }

    /// `[Y1 | Y2 | Y3]`, 2×6. Its column space is the sum of the images.
    pub fn concatenated(&self) -> MatQ {
        MatQ::hstack(&[&self.ys[0], &self.ys[1], &self.ys[2]]).expect("2x2 blocks")
    }

    /// `Σ t_i Y_i`.
    pub fn pencil(&self, t: &[Rational; 3]) -> MatQ {
        let mut m = MatQ::zeros(2, 2);
        for (y, ti) in self.ys.iter().zip(t) {
            m = &m + &y.scale(ti);
        }
        m
    }
}

fn det2(m: &MatQ) -> Rational {
    m.det().expect("2x2")
}

/// `(det Y1, det Y2, det Y3, m12, m13, m23)` with
/// `m_ij = det(Y_i + Y_j) − det Y_i − det Y_j`.
pub fn semi_invariants(r: &Rep22) -> [Rational; 6] {
    let [y1, y2, y3] = r.ys();
    let (d1, d2, d3) = (det2(y1), det2(y2), det2(y3));
    let mixed = |a: &MatQ, b: &MatQ, da: &Rational, db: &Rational| det2(&(a + b)) - da - db;
    let m12 = mixed(y1, y2, &d1, &d2);
    let m13 = mixed(y1, y3, &d1, &d3);
    let m23 = mixed(y2, y3, &d2, &d3);
    [d1, d2, d3, m12, m13, m23]
}

/// `t ↦ det(t1·Y1 + t2·Y2 + t3·Y3)`.
///
/// Computed by polarization on the pencil rather than through
/// [`semi_invariants`], so the two agree only if the algebra is right.
pub fn discriminant_form(r: &Rep22) -> TernaryQuadric {
    let e = |i: usize| {
        let mut t = [Rational::zero(), Rational::zero(), Rational::zero()];
        t[i] = Rational::one();
        t
    };
    let q = |t: [Rational; 3]| det2(&r.pencil(&t));
    let diag: Vec<Rational> = (0..3).map(|i| q(e(i))).collect();
    let cross = |i: usize, j: usize| {
        let mut t = e(i);
        t[j] = Rational::one();
        q(t) - &diag[i] - &diag[j]
    };
    TernaryQuadric {
        d1: diag[0].clone(),
        d2: diag[1].clone(),
        d3: diag[2].clone(),
        m12: cross(0, 1),
        m13: cross(0, 2),
        m23: cross(1, 2),
    }
}

/// A point of P⁵ in coordinates `(d1, d2, d3, m12, m13, m23)`, scaled so
/// the first nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuliPoint(pub [Rational; 6]);

impl ModuliPoint {
    pub fn coords(&self) -> &[Rational; 6] {
        &self.0
    }
}

pub fn moduli_point(r: &Rep22) -> Result<ModuliPoint> {
    let s = semi_invariants(r);
    let lead = s.iter().find(|c| !c.is_zero()).ok_or(Error::Unstable)?.recip();
    Ok(ModuliPoint(s.map(|c| c * &lead)))
}

/// `Y_i ↦ g2 · Y_i · g1⁻¹`.
pub fn act(g1: &MatQ, g2: &MatQ, r: &Rep22) -> Result<Rep22> {
    for g in [g1, g2] {
        if (g.rows(), g.cols()) != (2, 2) {
            return Err(Error::Shape("group elements must be 2x2".into()));
        }
    }
    let g1_inv = g1.inverse()?;
    if det2(g2).is_zero() {
        return Err(Error::Singular);
    }
    let [a, b, c] = r.ys().clone().map(|y| &(g2 * &y) * &g1_inv);
    Rep22::new(a, b, c)
}

/// `Y_i = diag(a_i, b_i)`.
pub fn direct_sum(a: &LinePoint, b: &LinePoint) -> Rep22 {
    extension_rep(a, b, &[Rational::zero(), Rational::zero(), Rational::zero()])
}

/// `Y_i = [[a_i, e_i], [0, b_i]]`: an extension with sub `a` and quotient `b`.
pub fn extension_rep(a: &LinePoint, b: &LinePoint, e: &[Rational; 3]) -> Rep22 {
    let y = |i: usize| {
        MatQ::from_vec(
            2,
            2,
            vec![a.coords()[i].clone(), e[i].clone(), Rational::zero(), b.coords()[i].clone()],
        )
        .expect("2x2")
    };
    Rep22 { ys: [y(0), y(1), y(2)] }
}

/// 6×12 Jacobian of [`semi_invariants`] at `r`, columns in
/// [`Rep22::coordinates`] order. Central differences with unit step are
/// exact because every semi-invariant is quadratic.
pub fn semi_invariant_jacobian(r: &Rep22) -> MatQ {
    let base = r.coordinates();
    let half = Rational::new(1.into(), 2.into());
    let mut jac = MatQ::zeros(6, 12);
    for k in 0..12 {
        let mut plus = base.clone();
        let mut minus = base.clone();
        plus[k] += rat(1);
        minus[k] -= rat(1);
        let sp = semi_invariants(&Rep22::from_coordinates(&plus).expect("12 coordinates"));
        let sm = semi_invariants(&Rep22::from_coordinates(&minus).expect("12 coordinates"));
        for i in 0..6 {
            jac[(i, k)] = (&sp[i] - &sm[i]) * &half;
        }
    }
    jac
}

/// Reference representations used throughout the tests and CLI goldens.
pub mod reference {
    use super::Rep22;

    /// `(I, [[0,1],[0,0]], [[0,0],[1,0]])`, stable.
    pub fn r_a() -> Rep22 {
        Rep22::from_ints([[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    }

    /// `(diag(1,0), diag(0,1), 0)`, strictly semistable.
    pub fn r_b() -> Rep22 {
        Rep22::from_ints([[[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 0], [0, 0]]])
    }

    /// `(N, N, N)` with `N = [[0,1],[0,0]]`, unstable.
    pub fn r_c() -> Rep22 {
        let n = [[0, 1], [0, 0]];
        Rep22::from_ints([n, n, n])
    }
}
