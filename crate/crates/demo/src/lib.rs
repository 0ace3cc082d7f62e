//! Browser bindings: canonical basis and Jantzen matrices as tables, and the
//! τ bijection, each returned as a JSON string.

use fockspace::charge::{tau, tau_inv};
use fockspace::format::{parse_charge, parse_multipartition, parse_partition};
use fockspace::{matrix_a, matrix_delta, matrix_j, Gate, LabeledMatrix, Params};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest dimension the page will compute.
pub const MAX_DIM: usize = 120;

fn params(n: i64, l: usize, charge: &str, m: usize) -> Result<Params, String> {
    let charge = parse_charge(charge).map_err(|e| e.to_string())?;
    let params = Params::new(n, l, charge, m).map_err(|e| e.to_string())?;
    let dim = params.basis().len();
    if dim > MAX_DIM {
        return Err(format!("{dim} multipartitions is too many for the browser (limit {MAX_DIM})"));
    }
    Ok(params)
}

fn table<T: Clone + ToString>(m: &LabeledMatrix<T>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.dim())
        .map(|i| (0..=i).map(|j| m.at(i, j).to_string()).collect())
        .collect();
    json!({
        "order": m.order().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "rows": rows,
    })
}

pub fn canonical_json(n: i64, l: usize, charge: &str, m: usize) -> Result<String, String> {
    let params = params(n, l, charge, m)?;
    let a = matrix_a(&params).map_err(|e| e.to_string())?;
    let delta = matrix_delta(&a).map_err(|e| e.to_string())?;
    Ok(table(&delta).to_string())
}

pub fn jantzen_json(n: i64, l: usize, charge: &str, m: usize, dominance: bool) -> Result<String, String> {
    let params = params(n, l, charge, m)?;
    let gate = if dominance { Gate::Dom } else { Gate::Prec };
    Ok(table(&matrix_j(gate, &params)).to_string())
}

/// Accepts either a partition `[4,3,1]` or a multipartition `[[2],[1]]`.
pub fn tau_json(n: i64, l: usize, charge: &str, input: &str) -> Result<String, String> {
    let mc = parse_charge(charge).map_err(|e| e.to_string())?;
    Params::new(n, l, mc.clone(), 0).map_err(|e| e.to_string())?;
    if input.trim_start().starts_with("[[") {
        let mp = parse_multipartition(input).map_err(|e| e.to_string())?;
        if mp.level() != l {
            return Err(format!("expected {l} components, got {}", mp.level()));
        }
        let (lam, s) = tau_inv(&mp, &mc, n);
        Ok(json!({ "partition": lam.to_string(), "charge": s }).to_string())
    } else {
        let lam = parse_partition(input).map_err(|e| e.to_string())?;
        let (mp, found) = tau(&lam, mc.total(), n, l);
        Ok(json!({
            "multipartition": mp.to_string(),
            "multicharge": found.entries(),
            "matches": found == mc,
        })
        .to_string())
    }
}

#[wasm_bindgen]
pub fn canonical(n: i32, l: u32, charge: &str, m: u32) -> Result<String, JsValue> {
    canonical_json(n as i64, l as usize, charge, m as usize).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn jantzen(n: i32, l: u32, charge: &str, m: u32, dominance: bool) -> Result<String, JsValue> {
    jantzen_json(n as i64, l as usize, charge, m as usize, dominance).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tau_map(n: i32, l: u32, charge: &str, input: &str) -> Result<String, JsValue> {
    tau_json(n as i64, l as usize, charge, input).map_err(|e| JsValue::from_str(&e))
}
