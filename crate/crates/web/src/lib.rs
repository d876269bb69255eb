//! Browser bindings for the weakorder demo page in `www/`.
//!
//! Each export is a thin wrapper over a plain function in [`ops`], so the
//! logic is testable on the host.

pub mod ops;

use wasm_bindgen::prelude::*;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// SVG arc diagram of a permutation's lower arcs.
#[wasm_bindgen(js_name = snArcDiagram)]
pub fn sn_arc_diagram(perm: &str) -> Result<String, JsValue> {
    js(ops::sn_arc_diagram(perm))
}

/// JSON `{join, meet, widelyGenerated, svg}` for two TITOs in window notation.
#[wasm_bindgen(js_name = titoJoinMeet)]
pub fn tito_join_meet(n: usize, x: &str, y: &str) -> Result<String, JsValue> {
    js(ops::tito_join_meet(n, x, y))
}

/// SVG Hasse diagram of the TITO quotient on the window [a, b].
#[wasm_bindgen(js_name = quotientHasse)]
pub fn quotient_hasse(n: usize, a: i32, b: i32) -> Result<String, JsValue> {
    js(ops::quotient_hasse(n, a.into(), b.into()))
}
