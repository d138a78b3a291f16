//! Browser bindings: three operations, each taking text input and returning
//! a JSON document. The static page in `www/` drives them.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ublocks::arith::{LieParams, Series};
use ublocks::blocks::find_q_divisible_in_principal_block;
use ublocks::partitions::{e_core_with_weight, e_quotient, hook_lengths, Partition};
use ublocks::symbols::{degree_value_symbol, e_cocore_symbol, e_core_symbol, olsson_twists, Symbol};

#[derive(Serialize)]
struct PartitionView {
    partition: Partition,
    size: usize,
    core: Partition,
    weight: usize,
    quotient: Vec<Partition>,
    hook_lengths: Vec<usize>,
}

#[derive(Serialize)]
struct SymbolView {
    symbol: Symbol,
    rank: usize,
    defect: usize,
    class: String,
    core: Symbol,
    cocore: Symbol,
    /// Twists at each working shift, when `e` allows them.
    twists: Vec<(usize, Symbol)>,
    degree: Option<String>,
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn e_positive(e: usize) -> Result<(), String> {
    if e == 0 {
        Err("e must be positive".into())
    } else {
        Ok(())
    }
}

pub fn partition_json(text: &str, e: usize) -> Result<String, String> {
    e_positive(e)?;
    let lambda: Partition = text.parse().map_err(|e: ublocks::Error| e.to_string())?;
    let (core, weight) = e_core_with_weight(&lambda, e);
    json(&PartitionView {
        size: lambda.size(),
        quotient: e_quotient(&lambda, e),
        hook_lengths: hook_lengths(&lambda),
        core,
        weight,
        partition: lambda,
    })
}

/// `r = 0` skips the degree.
pub fn symbol_json(text: &str, e: usize, r: u64) -> Result<String, String> {
    e_positive(e)?;
    let s: Symbol = text.parse().map_err(|e: ublocks::Error| e.to_string())?;
    let degree = match r {
        0 => None,
        r => Some(degree_value_symbol(&s, r).map_err(|e| e.to_string())?.to_string()),
    };
    json(&SymbolView {
        rank: s.rank(),
        defect: s.defect(),
        class: s.class().to_string(),
        core: e_core_symbol(&s, e),
        cocore: e_cocore_symbol(&s, e),
        twists: olsson_twists(&s, e).unwrap_or_default(),
        degree,
        symbol: s,
    })
}

pub fn witness_json(series: &str, n: usize, r: u64, p: u64, q: u64) -> Result<String, String> {
    let series: Series = series.parse().map_err(|e: ublocks::Error| e.to_string())?;
    let lp = LieParams::new(series, n, r, p, q).map_err(|e| e.to_string())?;
    json(&find_q_divisible_in_principal_block(&lp).map_err(|e| e.to_string())?)
}

/// Core, weight, quotient and hook lengths of a partition such as `[4,2,1]`.
#[wasm_bindgen]
pub fn partition_info(text: &str, e: usize) -> Result<String, JsError> {
    partition_json(text, e).map_err(|m| JsError::new(&m))
}

/// Core, cocore, twists and (for `r > 0`) degree of a symbol such as `(1,2|0)`.
#[wasm_bindgen]
pub fn symbol_info(text: &str, e: usize, r: u64) -> Result<String, JsError> {
    symbol_json(text, e, r).map_err(|m| JsError::new(&m))
}

/// A unipotent character of degree divisible by `q` in the principal
/// `p`-block, by both the explicit and the exhaustive route.
#[wasm_bindgen]
pub fn block_witness(series: &str, n: usize, r: u64, p: u64, q: u64) -> Result<String, JsError> {
    witness_json(series, n, r, p, q).map_err(|m| JsError::new(&m))
}
