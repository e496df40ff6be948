//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The plain functions in [`ops`] do the
//! work so they can be tested natively.

use wasm_bindgen::prelude::*;

pub mod ops;

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Confidence radius and baseline width over a log-spaced grid of counts.
#[wasm_bindgen]
pub fn radius_curve(delta: f64, t_max: u32, points: u32) -> Result<String, JsValue> {
    js(ops::radius_curve(delta, t_max as u64, points as usize))
}

/// One trial of `algo` on a family instance.
#[wasm_bindgen]
pub fn run_trial(
    family: &str,
    arms: u32,
    delta: f64,
    algo: &str,
    seed: u32,
) -> Result<String, JsValue> {
    js(ops::run_trial(
        family,
        arms as usize,
        delta,
        algo,
        seed as u64,
    ))
}

/// Hardness profile and lower bounds of a family instance.
#[wasm_bindgen]
pub fn hardness(family: &str, arms: u32, delta: f64) -> Result<String, JsValue> {
    js(ops::hardness(family, arms as usize, delta))
}
