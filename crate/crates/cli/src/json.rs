//! JSON rendering of the core data types.
//!
//! Scalars appear both exactly — `{order, coeffs}` with coefficients as
//! `p/q` strings — and as float approximations for human scanning.
//! Reports are deterministic: rerunning the same configuration produces
//! bit-identical output.

use serde_json::{json, Value};

use gvcalc_core::blocks::{BlockOperator, BlockSpace};
use gvcalc_core::cyclotomic::CycNumber;
use gvcalc_core::pointed::{Elem, PointedGVCategory};
use gvcalc_core::report::SuiteReport;

use crate::approx::to_complex;

pub fn scalar_json(x: &CycNumber) -> Value {
    let coeffs: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
    let (re, im) = to_complex(x);
    json!({
        "order": x.order(),
        "coeffs": coeffs,
        "approx": { "re": re, "im": im },
    })
}

pub fn label_json(e: &Elem) -> Value {
    json!(e
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("."))
}

pub fn space_json(space: &BlockSpace) -> Value {
    json!({
        "g": space.genus(),
        "labels": space.labels().iter().map(label_json).collect::<Vec<_>>(),
        "dim": space.dimension(),
        "condition": space.degree_condition(),
    })
}

pub fn operator_json(op: &BlockOperator) -> Value {
    let entries: Vec<Value> = op
        .entries()
        .iter()
        .map(|(&(row, col), v)| json!([row, col, scalar_json(v)]))
        .collect();
    json!({
        "source": space_json(op.source()),
        "target": space_json(op.target()),
        "entries": entries,
    })
}

pub fn suite_json(rep: &SuiteReport) -> Value {
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|f| {
            json!({
                "axiom": f.axiom,
                "witness": f.witness,
                "lhs": f.lhs.as_ref().map(scalar_json),
                "rhs": f.rhs.as_ref().map(scalar_json),
                "detail": f.detail,
            })
        })
        .collect();
    json!({
        "suite": rep.suite,
        "instances": rep.instances,
        "passed": rep.passed(),
        "failures": failures,
    })
}

pub fn category_json(cat: &PointedGVCategory) -> Value {
    json!({
        "group_factors": cat.group().factors(),
        "order": cat.group().order(),
        "g0": label_json(cat.g0()),
        "h0": label_json(cat.h0()),
        "r_category": cat.is_r_category(),
    })
}

/// CSV rows for a diagonal spectrum: `index,exact,re,im`.
pub fn spectrum_csv(op: &BlockOperator) -> String {
    let zero = CycNumber::zero(1);
    let mut out = String::from("index,exact,re,im\n");
    for i in 0..op.source().dimension() {
        let v = op.entry(i, i).unwrap_or(&zero);
        let (re, im) = to_complex(v);
        out.push_str(&format!("{},{},{},{}\n", i, v, re, im));
    }
    out
}
