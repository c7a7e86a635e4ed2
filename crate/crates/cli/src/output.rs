use localsurf::algebra::{format_rational, PolyMatrix, RationalMatrix};
use localsurf::cohomology::{CohomologyResult, Window};
use serde_json::{json, Value};

pub fn window(w: Window) -> Value {
    json!({ "minZ": w.min_z, "maxZ": w.max_z, "maxU": w.max_u })
}

pub fn strings<T: ToString>(items: &[T]) -> Value {
    items.iter().map(ToString::to_string).collect()
}

pub fn poly_matrix(m: &PolyMatrix) -> Value {
    m.rows().iter().map(|r| strings(r)).collect()
}

pub fn rational_matrix(m: &RationalMatrix) -> Value {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect::<Value>()).collect()
}

pub fn cohomology(r: &CohomologyResult) -> Value {
    let mut v = json!({
        "dim": r.dimension,
        "basis": strings(&r.basis),
        "window": window(r.window_used),
        "stabilized": r.stabilized,
    });
    if let Some(m) = r.m_row {
        v["mRow"] = json!(m);
    }
    v
}

/// `key  value` lines for the top-level fields.
pub fn table(v: &Value) -> String {
    let Value::Object(map) = v else { return v.to_string() };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, x) in map {
        let text = match x {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {text}\n"));
    }
    out
}
