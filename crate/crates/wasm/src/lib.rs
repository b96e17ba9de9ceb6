//! Browser bindings for the demo page in `www/`.
//!
//! Every entry point takes family specs and returns a JSON string, so the same
//! functions run natively under `cargo test`.

use serde::Serialize;
use uninorm_core::{
    build_family, classify_and_check, decompose, region_of, Choice, Error, RegionTag, TheoremCase, Uninorm,
    Violation,
};

/// Largest chain the page will draw; the tables are rendered cell by cell.
pub const MAX_DEMO_N: usize = 12;

#[derive(Serialize)]
struct TableView {
    scale: usize,
    neutral: usize,
    rows: Vec<Vec<usize>>,
    regions: Vec<Vec<RegionTag>>,
    idempotent: bool,
    locally_internal: bool,
}

impl TableView {
    fn of(u: &Uninorm) -> Self {
        let n = u.n();
        let e = u.neutral();
        TableView {
            scale: n,
            neutral: e,
            rows: u.rows(),
            regions: (0..=n).map(|x| (0..=n).map(|y| region_of(x, y, e)).collect()).collect(),
            idempotent: u.is_idempotent(),
            locally_internal: u.is_locally_internal(),
        }
    }
}

fn load(spec: &str) -> Result<Uninorm, String> {
    let u = build_family(spec).map_err(|e| e.to_string())?;
    if u.n() > MAX_DEMO_N {
        return Err(format!("the demo draws chains up to L_{MAX_DEMO_N}"));
    }
    Ok(u)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("views serialize")
}

pub fn family_table(spec: &str) -> Result<String, String> {
    Ok(json(&TableView::of(&load(spec)?)))
}

#[derive(Serialize)]
struct CheckView<'a> {
    case: TheoremCase,
    distributive: bool,
    theorem_agrees: bool,
    summary: String,
    violation: Option<&'a Violation>,
    u1: TableView,
    u2: TableView,
}

pub fn check_pair(spec1: &str, spec2: &str) -> Result<String, String> {
    let (u1, u2) = (load(spec1)?, load(spec2)?);
    let pc = classify_and_check(&u1, &u2).map_err(|e| e.to_string())?;
    Ok(json(&CheckView {
        case: pc.case,
        distributive: pc.distributive(),
        theorem_agrees: pc.agreement(),
        summary: pc.to_string(),
        violation: pc.distributivity.violations().first(),
        u1: TableView::of(&u1),
        u2: TableView::of(&u2),
    }))
}

#[derive(Serialize)]
struct DecompositionView {
    case: TheoremCase,
    inner: TableView,
    boundary: TableView,
    residual: Option<TableView>,
    /// `(x, y)` points where u1 = u2 takes its second argument.
    second: Vec<(usize, usize)>,
    points: usize,
}

pub fn decompose_pair(spec1: &str, spec2: &str) -> Result<String, String> {
    let (u1, u2) = (load(spec1)?, load(spec2)?);
    let d = decompose(&u1, &u2).map_err(|e| match e {
        Error::NotDistributive(r) => match r.violations().first() {
            Some(v) => format!("not distributive: {v}"),
            None => "not distributive".to_string(),
        },
        other => other.to_string(),
    })?;
    Ok(json(&DecompositionView {
        case: d.case,
        inner: TableView::of(&d.inner),
        boundary: TableView::of(&d.boundary_op),
        residual: d.residual.as_ref().map(TableView::of),
        second: d.selection.iter().filter(|(_, &c)| c == Choice::Second).map(|(&k, _)| k).collect(),
        points: d.selection.len(),
    }))
}

#[cfg(target_arch = "wasm32")]
mod wasm {
    use wasm_bindgen::prelude::*;

    #[wasm_bindgen(js_name = familyTable)]
    pub fn family_table(spec: &str) -> Result<String, JsValue> {
        super::family_table(spec).map_err(|e| JsValue::from_str(&e))
    }

    #[wasm_bindgen(js_name = checkPair)]
    pub fn check_pair(spec1: &str, spec2: &str) -> Result<String, JsValue> {
        super::check_pair(spec1, spec2).map_err(|e| JsValue::from_str(&e))
    }

    #[wasm_bindgen(js_name = decomposePair)]
    pub fn decompose_pair(spec1: &str, spec2: &str) -> Result<String, JsValue> {
        super::decompose_pair(spec1, spec2).map_err(|e| JsValue::from_str(&e))
    }
}
