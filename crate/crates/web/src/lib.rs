//! Browser bindings. Every export takes and returns strings so the page needs
//! no generated glue beyond wasm-bindgen's. The `*_json` functions are plain
//! Rust and carry the logic; the exported wrappers only convert errors.

use rectiturn::{
    classify, oracle_min, parse_sequence, ClassTag, Objective, OracleConfig, TurnSequence,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Longest general sequence the page will hand to the oracle.
pub const ORACLE_LIMIT: usize = 12;

fn sequence(text: &str) -> Result<TurnSequence, String> {
    let s = parse_sequence(text).map_err(|e| e.to_string())?;
    s.validate().map_err(|e| e.to_string())?;
    Ok(s)
}

/// `{"class", "n"}` for a sequence.
pub fn classify_json(text: &str) -> Result<String, String> {
    let s = sequence(text)?;
    let class = match classify(&s).tag {
        ClassTag::XYMonotone => "xy-monotone",
        ClassTag::XMonotone => "x-monotone",
        ClassTag::General => "general",
    };
    Ok(json!({"class": class, "n": s.len()}).to_string())
}

/// Optimal polygon as `{"value", "method", "area", "perimeter", "bbox", "sequence", "vertices", "svg"}`.
/// Monotone sequences use the exact solvers; short general ones fall back to the oracle.
pub fn solve_json(text: &str, objective: &str) -> Result<String, String> {
    let s = sequence(text)?;
    let objective: Objective = objective
        .parse()
        .map_err(|e: rectiturn::Error| e.to_string())?;
    let (method, (value, p)) = if classify(&s).tag != ClassTag::General {
        (
            "solver",
            rectiturn::solve(&s, objective).map_err(|e| e.to_string())?,
        )
    } else if s.len() <= ORACLE_LIMIT {
        let cfg = OracleConfig::new(objective, 4);
        ("oracle", oracle_min(&s, &cfg).map_err(|e| e.to_string())?)
    } else {
        return Err(format!(
            "general sequence of length {} is NP-hard to optimize; the page only searches up to n = {ORACLE_LIMIT}",
            s.len()
        ));
    };
    let m = p.measures();
    let pj = p.to_json();
    Ok(json!({
        "value": value,
        "method": method,
        "area": m.area,
        "perimeter": m.perimeter,
        "bbox": [m.bbox_w, m.bbox_h],
        "sequence": pj.sequence,
        "vertices": pj.vertices,
        "svg": p.to_svg(10, true),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn classify_sequence(text: &str) -> Result<String, JsError> {
    classify_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve_sequence(text: &str, objective: &str) -> Result<String, JsError> {
    solve_json(text, objective).map_err(|e| JsError::new(&e))
}
