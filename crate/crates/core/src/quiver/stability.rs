//! King stability for Θ = (−1, 1).
//!
//! Proper subrepresentations with negative weight have dimension (1,0),
//! (2,0) or (2,1). The first two exist iff the arrows share a kernel
//! vector, the last iff their images lie in a common line. Weight-zero
//! (1,1) subrepresentations decide strict semistability.

use num_traits::Zero;

use super::lines::{split_quadric, LinePair};
use super::rep::{discriminant_form, DimVector, Rep22};
use crate::error::{Error, Result};
use crate::exact::{binary_gcd, BinaryForm, Rational};

pub fn is_semistable(r: &Rep22) -> bool {
    r.stacked().rank() == 2 && r.concatenated().rank() == 2
}

/// The 2×2 minors of `[Y1·v | Y2·v | Y3·v]` for `v = (x, y)`, in column
/// pair order (12, 13, 23).
pub fn oneone_minor_forms(r: &Rep22) -> [BinaryForm; 3] {
    // Y v = (a x + b y, c x + d y)
    let entries = |i: usize| {
        let e = r.y(i).entries();
        (&e[0], &e[1], &e[2], &e[3])
    };
    let minor = |i: usize, j: usize| {
        let (ai, bi, ci, di) = entries(i);
        let (aj, bj, cj, dj) = entries(j);
        BinaryForm::new(vec![
            ai * cj - aj * ci,
            ai * dj + bi * cj - aj * di - bj * ci,
            bi * dj - bj * di,
        ])
    };
    [minor(0, 1), minor(0, 2), minor(1, 2)]
}

/// GCD of the three minor forms; a nonconstant result means some `v`
/// (over the algebraic closure) spans a (1,1)-subrepresentation.
pub fn oneone_gcd(r: &Rep22) -> BinaryForm {
    let [f, g, h] = oneone_minor_forms(r);
    binary_gcd(&binary_gcd(&f, &g), &h)
}

pub fn is_stable(r: &Rep22) -> bool {
    is_semistable(r) && oneone_gcd(r).is_nonzero_constant()
}

/// Concrete evidence of instability.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UnstableWitness {
    /// Basis of the common kernel of the arrows: a (1,0)- or, with two
    /// vectors, (2,0)-subrepresentation.
    Kernel(Vec<[Rational; 2]>),
    /// `w` with `wᵀ·Y_i = 0` for all `i`: the images lie in `ker wᵀ`, a
    /// (2,1)-subrepresentation.
    ImageCovector([Rational; 2]),
}

impl UnstableWitness {
    pub fn dim(&self) -> DimVector {
        match self {
            UnstableWitness::Kernel(vs) => DimVector::new(vs.len() as u32, 0),
            UnstableWitness::ImageCovector(_) => DimVector::new(2, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Stable,
    StrictlySemistable(LinePair),
    Unstable(UnstableWitness),
}

impl StabilityClass {
    pub fn tag(&self) -> &'static str {
        match self {
            StabilityClass::Stable => "stable",
            StabilityClass::StrictlySemistable(_) => "strictly_semistable",
            StabilityClass::Unstable(_) => "unstable",
        }
    }
}

fn as_pair(v: &crate::exact::MatQ) -> [Rational; 2] {
    [v.entries()[0].clone(), v.entries()[1].clone()]
}

fn unstable_witness(r: &Rep22) -> Option<UnstableWitness> {
    let kernel = r.stacked().kernel_basis();
    if !kernel.is_empty() {
        return Some(UnstableWitness::Kernel(kernel.iter().map(as_pair).collect()));
    }
    let cokernel = r.concatenated().transpose().kernel_basis();
    cokernel.first().map(|w| UnstableWitness::ImageCovector(as_pair(w)))
}

pub fn stability_class(r: &Rep22) -> StabilityClass {
    if let Some(w) = unstable_witness(r) {
        return StabilityClass::Unstable(w);
    }
    if oneone_gcd(r).is_nonzero_constant() {
        return StabilityClass::Stable;
    }
    let lines = split_quadric(&discriminant_form(r))
        .expect("strictly semistable representations have a rank 1 or 2 discriminant");
    StabilityClass::StrictlySemistable(lines)
}

/// The Jordan-Hölder lines `{a, a'}` with the same moduli point as `r`.
pub fn s_equiv_lines(r: &Rep22) -> Result<LinePair> {
    match stability_class(r) {
        StabilityClass::StrictlySemistable(pair) => Ok(pair),
        _ => Err(Error::NotStrictlySemistable),
    }
}

/// Checks a witness against its defining linear conditions.
pub fn witness_holds(r: &Rep22, w: &UnstableWitness) -> bool {
    match w {
        UnstableWitness::Kernel(vs) => {
            !vs.is_empty()
                && vs.iter().all(|v| {
                    !(v[0].is_zero() && v[1].is_zero())
                        && r.ys().iter().all(|y| {
                            let e = y.entries();
                            (&e[0] * &v[0] + &e[1] * &v[1]).is_zero()
                                && (&e[2] * &v[0] + &e[3] * &v[1]).is_zero()
                        })
                })
        }
        UnstableWitness::ImageCovector(w) => {
            !(w[0].is_zero() && w[1].is_zero())
                && r.ys().iter().all(|y| {
                    let e = y.entries();
                    (&w[0] * &e[0] + &w[1] * &e[2]).is_zero()
                        && (&w[0] * &e[1] + &w[1] * &e[3]).is_zero()
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::quiver::lines::LinePoint;
    use crate::quiver::rep::reference::*;
    use crate::quiver::rep::{direct_sum, extension_rep};
    use num_bigint::BigInt;

    fn form(c: [i64; 3]) -> BinaryForm {
        BinaryForm::new(c.map(rat).to_vec())
    }

    #[test]
    fn semistability_examples() {
        assert!(is_semistable(&r_a()));
        assert!(!is_semistable(&r_c()));
        assert!(is_semistable(&r_b()));
    }

    #[test]
    fn minor_form_examples() {
        assert_eq!(oneone_minor_forms(&r_a()), [form([0, 0, -1]), form([1, 0, 0]), form([0, 1, 0])]);
        assert_eq!(oneone_minor_forms(&r_b()), [form([0, 1, 0]), form([0; 3]), form([0; 3])]);
        assert!(oneone_minor_forms(&Rep22::zero()).iter().all(BinaryForm::is_zero));
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&r_a()));
        assert!(!is_stable(&r_b()));
        assert_eq!(oneone_gcd(&r_b()), form([0, 1, 0]));
        assert!(!is_stable(&r_c()));
    }

    #[test]
    fn class_examples() {
        assert_eq!(stability_class(&r_a()), StabilityClass::Stable);
        let StabilityClass::Unstable(w) = stability_class(&r_c()) else { panic!() };
        assert_eq!(w, UnstableWitness::Kernel(vec![[rat(1), rat(0)]]));
        assert_eq!(w.dim(), DimVector::new(1, 0));
        assert_eq!(
            stability_class(&r_b()),
            StabilityClass::StrictlySemistable(LinePair::from_lines(
                LinePoint::from_ints([1, 0, 0]).unwrap(),
                LinePoint::from_ints([0, 1, 0]).unwrap()
            ))
        );
    }

    #[test]
    fn all_three_destabilizing_dimensions() {
        let StabilityClass::Unstable(w) = stability_class(&Rep22::zero()) else { panic!() };
        assert_eq!(w.dim(), DimVector::new(2, 0));
        assert!(witness_holds(&Rep22::zero(), &w));
        // images all inside span(e1): (2,1)
        let r = Rep22::from_ints([[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[2, 3], [0, 0]]]);
        let StabilityClass::Unstable(w) = stability_class(&r) else { panic!() };
        assert_eq!(w.dim(), DimVector::new(2, 1));
        assert_eq!(w, UnstableWitness::ImageCovector([rat(0), rat(1)]));
        assert!(witness_holds(&r, &w));
        let StabilityClass::Unstable(w) = stability_class(&r_c()) else { panic!() };
        assert!(witness_holds(&r_c(), &w));
    }

    #[test]
    fn s_equiv_examples() {
        let rot = Rep22::from_ints([[[1, 0], [0, 1]], [[0, -1], [1, 0]], [[0, 0], [0, 0]]]);
        assert_eq!(
            s_equiv_lines(&rot).unwrap(),
            LinePair::Conjugate {
                u: [rat(1), rat(0), rat(0)],
                v: [rat(0), rat(1), rat(0)],
                d: BigInt::from(-1)
            }
        );
        let a = LinePoint::from_ints([2, -1, 5]).unwrap();
        let pair = s_equiv_lines(&direct_sum(&a, &a)).unwrap();
        assert_eq!(pair, LinePair::Double(a.clone()));
        assert_eq!(pair.quadric_rank(), 1);
        assert_eq!(s_equiv_lines(&r_a()), Err(Error::NotStrictlySemistable));
        assert_eq!(s_equiv_lines(&r_c()), Err(Error::NotStrictlySemistable));
    }

    #[test]
    fn extensions_are_never_stable() {
        let a = LinePoint::from_ints([1, 3, -2]).unwrap();
        let b = LinePoint::from_ints([0, 1, 4]).unwrap();
        let r = extension_rep(&a, &b, &[rat(5), rat(-1), rat(2)]);
        assert!(!is_stable(&r));
        assert_eq!(s_equiv_lines(&r).unwrap(), LinePair::from_lines(a, b));
    }
}
