//! JSON encodings. Rationals travel as strings `"p/q"` (or `"p"`).

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::bridge::{SheafClass, SheafKind};
use crate::chow::{ChChar, ChernData, HilbertPoly};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, MatQ, Rational};
use crate::quiver::{LinePair, LinePoint, ModuliPoint, Rep22, StabilityClass, StrataCounts, UnstableWitness};

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

/// Accepts `"p/q"` strings and, for convenience, plain JSON integers.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

fn rationals_to_json<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(xs.into_iter().map(rational_to_json).collect())
}

fn array<'a>(v: &'a Value, len: usize, what: &str) -> Result<&'a Vec<Value>> {
    match v.as_array() {
        Some(a) if a.len() == len => Ok(a),
        _ => Err(Error::Parse(format!("{what}: expected an array of length {len}"))),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn int_field(v: &Value, key: &str) -> Result<i64> {
    field(v, key)?
        .as_i64()
        .ok_or_else(|| Error::Parse(format!("field {key:?} must be an integer")))
}

fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        None => Value::String(n.to_string()),
    }
}

pub fn matrix_to_json(m: &MatQ) -> Value {
    Value::Array((0..m.rows()).map(|i| rationals_to_json(m.row(i))).collect())
}

pub fn matrix2_from_json(v: &Value) -> Result<MatQ> {
    let rows = array(v, 2, "2x2 matrix")?;
    let mut entries = Vec::with_capacity(4);
    for row in rows {
        for x in array(row, 2, "matrix row")? {
            entries.push(rational_from_json(x)?);
        }
    }
    MatQ::from_vec(2, 2, entries)
}

pub fn rep_to_json(r: &Rep22) -> Value {
    json!({
        "Y1": matrix_to_json(r.y(0)),
        "Y2": matrix_to_json(r.y(1)),
        "Y3": matrix_to_json(r.y(2)),
    })
}

pub fn rep_from_json(v: &Value) -> Result<Rep22> {
    let m = |k: &str| matrix2_from_json(field(v, k)?);
    Rep22::new(m("Y1")?, m("Y2")?, m("Y3")?)
}

pub fn line_to_json(a: &LinePoint) -> Value {
    rationals_to_json(a.coords())
}

pub fn line_from_json(v: &Value) -> Result<LinePoint> {
    let a = array(v, 3, "line point")?;
    LinePoint::new([rational_from_json(&a[0])?, rational_from_json(&a[1])?, rational_from_json(&a[2])?])
}

pub fn line_pair_to_json(pair: &LinePair) -> Value {
    let (kind, lines, d) = match pair {
        LinePair::Rational([a, b]) => ("rational", json!([line_to_json(a), line_to_json(b)]), Value::Null),
        LinePair::Double(a) => ("double", json!([line_to_json(a), line_to_json(a)]), Value::Null),
        LinePair::Conjugate { u, v, d } => {
            let neg: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
            let lines = json!([
                {"u": rationals_to_json(u), "v": rationals_to_json(v)},
                {"u": rationals_to_json(u), "v": rationals_to_json(&neg)},
            ]);
            ("conjugate", lines, bigint_to_json(d))
        }
    };
    json!({"kind": kind, "lines": lines, "d": d, "rank": pair.quadric_rank()})
}

fn witness_to_json(w: &UnstableWitness) -> Value {
    let dim = w.dim();
    match w {
        UnstableWitness::Kernel(vs) => json!({
            "dim": [dim.d1, dim.d2],
            "kernel": vs.iter().map(|v| rationals_to_json(v)).collect::<Vec<_>>(),
        }),
        UnstableWitness::ImageCovector(c) => json!({
            "dim": [dim.d1, dim.d2],
            "covector": rationals_to_json(c),
        }),
    }
}

pub fn stability_to_json(c: &StabilityClass) -> Value {
    let witness = match c {
        StabilityClass::Stable => Value::Null,
        StabilityClass::StrictlySemistable(pair) => line_pair_to_json(pair),
        StabilityClass::Unstable(w) => witness_to_json(w),
    };
    json!({"class": c.tag(), "witness": witness})
}

pub fn moduli_to_json(p: &ModuliPoint) -> Value {
    rationals_to_json(p.coords())
}

pub fn chern_to_json(c: &ChernData) -> Value {
    json!({"rank": c.rank, "c1": c.c1, "c2": c.c2, "c3": c.c3})
}

pub fn chern_from_json(v: &Value) -> Result<ChernData> {
    Ok(ChernData::new(int_field(v, "rank")?, int_field(v, "c1")?, int_field(v, "c2")?, int_field(v, "c3")?))
}

/// `[ch0, ch1, ch2, ch3]`.
pub fn chchar_to_json(c: &ChChar) -> Value {
    rationals_to_json(c.coeffs())
}

pub fn chchar_from_json(v: &Value) -> Result<ChChar> {
    let a = array(v, 4, "Chern character")?;
    Ok(ChChar::new(
        rational_from_json(&a[0])?,
        rational_from_json(&a[1])?,
        rational_from_json(&a[2])?,
        rational_from_json(&a[3])?,
    ))
}

/// `[n³, n², n, 1]` coefficients.
pub fn hilbert_to_json(h: &HilbertPoly) -> Value {
    rationals_to_json(h.coeffs())
}

pub fn sheaf_class_to_json(s: &SheafClass) -> Value {
    let (class, lines) = match &s.kind {
        SheafKind::StableInstantonSheaf => ("stable_instanton_sheaf", Value::Null),
        SheafKind::ExtensionOfIdealSheavesOfLines(p) => ("extension_of_ideal_sheaves_of_lines", line_pair_to_json(p)),
    };
    json!({"class": class, "lines": lines, "chern": chern_to_json(&s.chern)})
}

pub fn strata_to_json(c: &StrataCounts) -> Value {
    json!({
        "stable": c.stable,
        "strictly_semistable": c.strictly_semistable,
        "unstable": c.unstable,
    })
}

pub fn error_to_json(e: &Error) -> Value {
    let mut m = Map::new();
    m.insert("code".into(), json!(e.code()));
    m.insert("message".into(), json!(e.to_string()));
    json!({"error": m})
}
