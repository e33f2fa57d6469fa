//! From quiver-side verdicts to sheaves on V5.
//!
//! A semistable representation `R` gives an injective map
//! `U ⊗ C² → Q∨ ⊗ C²` whose cokernel `E` has Chern data (2, 0, 2, 0).
//! Stable representations give stable instanton sheaves; strictly
//! semistable ones give extensions of two ideal sheaves of lines.
//! Cohomology and Ext dimensions below are stored tables; only their
//! Riemann-Roch consistency is computed.

use crate::chow::{characters, chern_to_ch, twist, ChChar, ChernData, RiemannRoch, CHERN_INSTANTON};
use crate::error::{Error, Result};
use crate::quiver::{is_semistable, stability_class, LinePair, Rep22, StabilityClass};

fn cokernel_character() -> ChChar {
    &characters::ch_qv().scale(2) - &characters::ch_u().scale(2)
}

/// Chern data of the cokernel sheaf attached to a semistable `r`.
pub fn cokernel_chern(r: &Rep22) -> Result<ChernData> {
    if !is_semistable(r) {
        return Err(Error::Unstable);
    }
    if cokernel_character() != chern_to_ch(&CHERN_INSTANTON) {
        return Err(Error::Internal("2·ch(Q∨) − 2·ch(U) ≠ ch(2,0,2,0)".into()));
    }
    Ok(CHERN_INSTANTON)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SheafKind {
    StableInstantonSheaf,
    ExtensionOfIdealSheavesOfLines(LinePair),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SheafClass {
    pub kind: SheafKind,
    pub chern: ChernData,
}

/// Local freeness is not decided: every stable representation is reported
/// as a stable instanton sheaf.
pub fn classify_sheaf(r: &Rep22) -> Result<SheafClass> {
    let chern = cokernel_chern(r)?;
    let kind = match stability_class(r) {
        StabilityClass::Stable => SheafKind::StableInstantonSheaf,
        StabilityClass::StrictlySemistable(pair) => SheafKind::ExtensionOfIdealSheavesOfLines(pair),
        StabilityClass::Unstable(_) => return Err(Error::Unstable),
    };
    Ok(SheafClass { kind, chern })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SheafId {
    U,
    QV,
}

impl SheafId {
    pub fn name(self) -> &'static str {
        match self {
            SheafId::U => "U",
            SheafId::QV => "QV",
        }
    }

    pub fn character(self) -> ChChar {
        match self {
            SheafId::U => characters::ch_u(),
            SheafId::QV => characters::ch_qv(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CohTableEntry {
    pub sheaf: SheafId,
    pub twist: i64,
    pub h: [u32; 4],
}

impl CohTableEntry {
    pub fn alternating_sum(&self) -> i64 {
        let [h0, h1, h2, h3] = self.h.map(i64::from);
        h0 - h1 + h2 - h3
    }
}

/// `h^i(V5, F(j))` for `F ∈ {U, Q∨}`, `j ∈ {0, −1, −2}`.
pub fn cohomology_table(sheaf: SheafId, twist: i64) -> Result<CohTableEntry> {
    let h = match twist {
        0 | -1 => [0, 0, 0, 0],
        -2 => [0, 0, 0, 5],
        _ => return Err(Error::Range(format!("no stored cohomology for {}({twist})", sheaf.name()))),
    };
    Ok(CohTableEntry { sheaf, twist, h })
}

pub fn cohomology_rows() -> Vec<CohTableEntry> {
    [SheafId::U, SheafId::QV]
        .into_iter()
        .flat_map(|s| [0, -1, -2].map(move |j| cohomology_table(s, j).expect("stored row")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtPair {
    /// `(E, E)` for a conic-type stable sheaf.
    ConicEE,
    /// `(I_l, I_l)`.
    SameLine,
    /// `(I_l, I_l')` with `l ≠ l'`.
    DistinctLines,
    UQv,
    QvU,
}

impl ExtPair {
    pub const ALL: [ExtPair; 5] =
        [ExtPair::ConicEE, ExtPair::SameLine, ExtPair::DistinctLines, ExtPair::UQv, ExtPair::QvU];

    pub fn name(self) -> &'static str {
        match self {
            ExtPair::ConicEE => "(E,E)_conic",
            ExtPair::SameLine => "(I_l,I_l)",
            ExtPair::DistinctLines => "(I_l,I_l')",
            ExtPair::UQv => "(U,QV)",
            ExtPair::QvU => "(QV,U)",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ExtPair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Range(format!("no stored Ext record for {s}")))
    }

    pub fn characters(self) -> (ChChar, ChChar) {
        use characters::*;
        match self {
            ExtPair::ConicEE => (ch_instanton(), ch_instanton()),
            ExtPair::SameLine | ExtPair::DistinctLines => (ch_iline(), ch_iline()),
            ExtPair::UQv => (ch_u(), ch_qv()),
            ExtPair::QvU => (ch_qv(), ch_u()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtRecord {
    pub pair: ExtPair,
    /// `dim Ext^i`, `i = 0..=3`.
    pub ext: [u32; 4],
}

impl ExtRecord {
    pub fn alternating_sum(&self) -> i64 {
        let [e0, e1, e2, e3] = self.ext.map(i64::from);
        e0 - e1 + e2 - e3
    }
}

pub fn ext_table(pair: ExtPair) -> ExtRecord {
    let ext = match pair {
        ExtPair::ConicEE => [1, 5, 0, 0],
        ExtPair::SameLine => [1, 2, 0, 0],
        ExtPair::DistinctLines => [0, 1, 0, 0],
        ExtPair::UQv => [3, 0, 0, 0],
        ExtPair::QvU => [0, 0, 0, 0],
    };
    ExtRecord { pair, ext }
}

/// `χ(F(j))` from Riemann-Roch, for comparison with a stored row.
pub fn expected_alternating_sum(rr: &RiemannRoch, row: &CohTableEntry) -> crate::exact::Rational {
    rr.euler_char(&twist(&row.sheaf.character(), row.twist))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::euler_pairing;
    use crate::exact::rat;
    use crate::quiver::reference::*;
    use crate::quiver::{act, extension_rep, LinePoint};
    use crate::exact::MatQ;

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel_chern(&r_a()).unwrap(), ChernData::new(2, 0, 2, 0));
        assert_eq!(cokernel_chern(&r_b()).unwrap(), ChernData::new(2, 0, 2, 0));
        assert_eq!(cokernel_chern(&r_c()), Err(Error::Unstable));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_sheaf(&r_a()).unwrap().kind, SheafKind::StableInstantonSheaf);
        let e1 = LinePoint::from_ints([1, 0, 0]).unwrap();
        let e2 = LinePoint::from_ints([0, 1, 0]).unwrap();
        assert_eq!(
            classify_sheaf(&r_b()).unwrap().kind,
            SheafKind::ExtensionOfIdealSheavesOfLines(LinePair::from_lines(e1, e2))
        );
        assert_eq!(classify_sheaf(&r_c()), Err(Error::Unstable));
        let a = LinePoint::from_ints([4, -1, 2]).unwrap();
        let b = LinePoint::from_ints([1, 1, 1]).unwrap();
        let ext = extension_rep(&a, &b, &[rat(1), rat(2), rat(3)]);
        assert_eq!(
            classify_sheaf(&ext).unwrap().kind,
            SheafKind::ExtensionOfIdealSheavesOfLines(LinePair::from_lines(a, b))
        );
    }

    #[test]
    fn classify_commutes_with_action() {
        let g1 = MatQ::from_ints([[1, 2], [3, 5]]);
        let g2 = MatQ::from_ints([[2, 0], [1, -1]]);
        for r in [r_a(), r_b()] {
            let moved = act(&g1, &g2, &r).unwrap();
            assert_eq!(classify_sheaf(&moved), classify_sheaf(&r));
        }
    }

    #[test]
    fn cohomology_rows_match_riemann_roch() {
        assert_eq!(cohomology_table(SheafId::U, 0).unwrap().h, [0, 0, 0, 0]);
        assert_eq!(cohomology_table(SheafId::U, -2).unwrap().h, [0, 0, 0, 5]);
        assert_eq!(cohomology_table(SheafId::QV, -1).unwrap().h, [0, 0, 0, 0]);
        assert!(matches!(cohomology_table(SheafId::QV, 1), Err(Error::Range(_))));
        let rr = RiemannRoch::default();
        let rows = cohomology_rows();
        assert_eq!(rows.len(), 6);
        for row in rows {
            assert_eq!(rat(row.alternating_sum()), expected_alternating_sum(&rr, &row));
        }
    }

    #[test]
    fn ext_rows_match_pairing() {
        assert_eq!(ext_table(ExtPair::ConicEE).ext, [1, 5, 0, 0]);
        assert_eq!(ext_table(ExtPair::DistinctLines).ext, [0, 1, 0, 0]);
        assert_eq!(ext_table(ExtPair::QvU).ext, [0, 0, 0, 0]);
        for p in ExtPair::ALL {
            let (e, f) = p.characters();
            assert_eq!(rat(ext_table(p).alternating_sum()), euler_pairing(&e, &f), "{}", p.name());
            assert_eq!(ExtPair::parse(p.name()).unwrap(), p);
        }
        assert!(ExtPair::parse("(O,O)").is_err());
    }
}
