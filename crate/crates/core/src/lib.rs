//! Exact King stability, moduli coordinates and S-equivalence for
//! (2,2)-representations of the three-arrow Kronecker quiver, together with
//! a Riemann-Roch calculator on the Fano threefold V5.
//!
//! All arithmetic is over Q. Questions about the algebraic closure (common
//! roots of binary forms, splitting of quadrics) are decided by GCDs and
//! ranks over Q, with conjugate lines reported over an explicit Q(√d).

pub mod bridge;
pub mod chow;
pub mod error;
pub mod exact;
pub mod json;
pub mod quiver;
pub mod verify;

pub use bridge::{classify_sheaf, cohomology_table, cokernel_chern, ext_table, SheafClass, SheafKind};
pub use chow::{chern_to_ch, euler_char, euler_pairing, hilbert_poly, twist, ChChar, ChernData, CohClass, HilbertPoly};
pub use error::{Error, Result};
pub use exact::{MatQ, Rational};
pub use quiver::{
    act, direct_sum, discriminant_form, extension_rep, is_semistable, is_stable, moduli_point,
    random_rep, s_equiv_lines, semi_invariants, stability_class, LinePair, LinePoint, Rep22,
    StabilityClass,
};
pub use verify::{verify_paper, Report};
