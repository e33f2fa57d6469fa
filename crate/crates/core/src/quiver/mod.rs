//! (2,2)-representations of the Kronecker quiver with three arrows.

pub mod lines;
pub mod rep;
pub mod sample;
pub mod stability;

pub use lines::{split_quadric, LinePair, LinePoint, TernaryQuadric};
pub use rep::{
    act, direct_sum, discriminant_form, extension_rep, moduli_point, semi_invariant_jacobian,
    semi_invariants, theta_weight, DimVector, ModuliPoint, Rep22,
};
pub use sample::{random_rep, random_rep_stream, sample_strata, StrataCounts};
pub use stability::{
    is_semistable, is_stable, oneone_gcd, oneone_minor_forms, s_equiv_lines, stability_class,
    witness_holds, StabilityClass, UnstableWitness,
};
pub use rep::reference;
