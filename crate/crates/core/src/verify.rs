//! Named identity checks over the Riemann-Roch calculus, the stored
//! tables and the reference representations.

use serde_json::{json, Value};

use crate::bridge::{cohomology_rows, cokernel_chern, expected_alternating_sum, ext_table, ExtPair};
use crate::chow::{characters::*, chern_to_ch, twist, ChChar, CohClass, HilbertPoly, RiemannRoch};
use crate::exact::{rat, ratio, Rational};
use crate::json::{chern_to_json, chchar_to_json, hilbert_to_json, rational_to_json};
use crate::quiver::{reference, semi_invariant_jacobian};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| json!({"check": c.name, "expected": c.expected, "got": c.got, "pass": c.pass}))
                .collect(),
        )
    }

    fn push<T: PartialEq>(&mut self, name: &str, expected: T, got: T, enc: impl Fn(&T) -> Value) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: enc(&expected),
            got: enc(&got),
            pass: expected == got,
        });
    }
}

fn hp(c: [(i64, i64); 4]) -> HilbertPoly {
    let [a, b, cc, d] = c.map(|(p, q)| ratio(p, q));
    HilbertPoly::new(a, b, cc, d)
}

fn r(x: &Rational) -> Value {
    rational_to_json(x)
}

pub fn verify_paper() -> Report {
    verify_paper_with(&RiemannRoch::default())
}

/// Runs every check with the given Riemann-Roch data; a wrong Todd class
/// shows up as failing entries rather than a panic.
pub fn verify_paper_with(rr: &RiemannRoch) -> Report {
    let mut rep = Report { checks: Vec::new() };
    let hpj = |h: &HilbertPoly| hilbert_to_json(h);
    let chj = |c: &ChChar| chchar_to_json(c);

    let (h, l, p) = (CohClass::h(), CohClass::l(), CohClass::p());
    let cls = |c: &CohClass| chchar_to_json(&ChChar(c.clone()));
    rep.push("ring: h^2 = 5l", l.scale(&rat(5)), &h * &h, cls);
    rep.push("ring: h.l = p", p.clone(), &h * &l, cls);
    rep.push("ring: h^3 = 5p", p.scale(&rat(5)), &(&h * &h) * &h, cls);

    rep.push(
        "ch(U) = (2, -1, 1/2, 1/6)",
        ChChar::new(rat(2), rat(-1), ratio(1, 2), ratio(1, 6)),
        ch_u(),
        chj,
    );
    rep.push(
        "ch(QV) = (3, -1, -1/2, 1/6)",
        ChChar::new(rat(3), rat(-1), ratio(-1, 2), ratio(1, 6)),
        ch_qv(),
        chj,
    );

    rep.push("chi(O(n))", hp([(5, 6), (5, 2), (8, 3), (1, 1)]), rr.hilbert_poly(&ch_o()), hpj);
    rep.push("chi(E(n)) instanton", hp([(5, 3), (5, 1), (10, 3), (0, 1)]), rr.hilbert_poly(&ch_instanton()), hpj);
    rep.push("chi(I_C(n)) conic", hp([(5, 6), (5, 2), (2, 3), (0, 1)]), rr.hilbert_poly(&ch_iconic()), hpj);
    for len in [1, 2] {
        rep.push(
            &format!("chi(I_Z(n)) with l(Z) = {len}"),
            hp([(5, 6), (5, 2), (8, 3), (1 - len, 1)]),
            rr.hilbert_poly(&ch_ipoints(len)),
            hpj,
        );
    }
    rep.push("chi(O_l(n)) = n + 1", hp([(0, 1), (0, 1), (1, 1), (1, 1)]), rr.hilbert_poly(&ch_oline()), hpj);
    rep.push("chi(O_C(n)) = 2n + 1", hp([(0, 1), (0, 1), (2, 1), (1, 1)]), rr.hilbert_poly(&ch_oconic()), hpj);

    rep.push("chi(E,E) = -4", rat(-4), rr.euler_pairing(&ch_instanton(), &ch_instanton()), r);
    rep.push("chi(I_l1,I_l2) = -1", rat(-1), rr.euler_pairing(&ch_iline(), &ch_iline()), r);
    rep.push("chi(U,QV) = 3", rat(3), rr.euler_pairing(&ch_u(), &ch_qv()), r);
    rep.push("chi(QV,U) = 0", rat(0), rr.euler_pairing(&ch_qv(), &ch_u()), r);

    for (name, ch) in [("U", ch_u()), ("QV", ch_qv())] {
        for (j, expected) in [(0, 0), (-1, 0), (-2, -5)] {
            rep.push(&format!("chi({name}({j})) = {expected}"), rat(expected), rr.euler_char(&twist(&ch, j)), r);
        }
    }

    rep.push("2ch(QV) - 2ch(U) = ch(2,0,2,0)", chern_to_ch(&crate::chow::CHERN_INSTANTON), &ch_qv().scale(2) - &ch_u().scale(2), chj);
    rep.push("2ch(O) - ch(theta(1)) = ch(2,0,2,0)", ch_instanton(), &ch_o().scale(2) - &ch_theta1(), chj);
    rep.push("2ch(I_l) = ch(2,0,2,0)", ch_instanton(), ch_iline().scale(2), chj);

    for row in cohomology_rows() {
        rep.push(
            &format!("h^*({}({})) alternating sum", row.sheaf.name(), row.twist),
            expected_alternating_sum(rr, &row),
            rat(row.alternating_sum()),
            r,
        );
    }
    for pair in ExtPair::ALL {
        let (e, f) = pair.characters();
        rep.push(
            &format!("Ext^*{} alternating sum", pair.name()),
            rr.euler_pairing(&e, &f),
            rat(ext_table(pair).alternating_sum()),
            r,
        );
    }

    let ra = reference::r_a();
    rep.push(
        "cokernel of R_a has (rank, c1, c2, c3) = (2, 0, 2, 0)",
        Some(crate::chow::CHERN_INSTANTON),
        cokernel_chern(&ra).ok(),
        |c| c.as_ref().map_or(Value::Null, chern_to_json),
    );
    rep.push("semi-invariant Jacobian rank at R_a", 6, semi_invariant_jacobian(&ra).rank(), |n| json!(n));

    rep
}
