//! JSON-lines table of `dim H^1(Z_k(tau), O(-n))` on stabilized windows.
//!
//! The first line holds metadata; every other line is one row, sorted by
//! `(k, n, tau)`.

use std::fs;
use std::io::Write;
use std::path::Path;

use localsurf::algebra::{format_rational, int, parse_rational, Rational};
use localsurf::cohomology::{h1_stabilized, GrowthPolicy, Window};
use localsurf::{LineBundleSpec, SurfaceSpec};
use serde_json::{json, Value};

use crate::{output, CliError};

fn samples(k: i64) -> Vec<Vec<Rational>> {
    let zero = vec![Rational::default(); (k - 1) as usize];
    if k == 1 {
        return vec![zero];
    }
    let mut t1 = zero.clone();
    t1[0] = int(1);
    vec![zero, t1]
}

fn compute(k: i64, n: i64, tau: &[Rational], policy: GrowthPolicy) -> Result<Value, CliError> {
    let s = SurfaceSpec::new(k, tau.to_vec()).map_err(CliError::usage)?;
    let t = LineBundleSpec::new(-n).transition();
    let r = h1_stabilized(&s, &t, Window::for_line_bundle(s.k(), n), policy).map_err(CliError::math)?;
    Ok(json!({
        "k": k,
        "n": n,
        "tau": tau.iter().map(format_rational).collect::<Vec<_>>(),
        "dim": r.dimension,
        "window": output::window(r.window_used),
        "stabilized": r.stabilized,
    }))
}

fn meta(policy: GrowthPolicy) -> Value {
    json!({ "meta": {
        "version": env!("CARGO_PKG_VERSION"),
        "window": "default O(-n) window, grown until the dimension settles",
        "growth": { "dz": policy.dz, "du": policy.du },
    }})
}

pub fn generate(out: Option<&Path>, policy: GrowthPolicy) -> Result<Value, CliError> {
    let mut lines = vec![meta(policy).to_string()];
    for k in 1..=5 {
        for n in 0..=10 {
            for tau in samples(k) {
                lines.push(compute(k, n, &tau, policy)?.to_string());
            }
        }
    }
    let rows = lines.len() - 1;
    let text = lines.join("\n") + "\n";
    match out {
        Some(path) => {
            fs::write(path, text).map_err(CliError::usage)?;
            Ok(json!({ "rows": rows, "path": path.display().to_string() }))
        }
        None => {
            std::io::stdout().write_all(text.as_bytes()).map_err(CliError::usage)?;
            std::process::exit(0);
        }
    }
}

fn key(row: &Value) -> Option<(i64, i64, Vec<String>)> {
    let tau = row["tau"].as_array()?.iter().map(|t| t.as_str().map(String::from)).collect::<Option<_>>()?;
    Some((row["k"].as_i64()?, row["n"].as_i64()?, tau))
}

pub fn verify(path: &Path, policy: GrowthPolicy) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mismatch = |line: usize, msg: String| CliError::Math {
        kind: "GoldenMismatch".into(),
        message: format!("line {line}: {msg}"),
    };
    let mut prev: Option<(i64, i64, Vec<String>)> = None;
    let mut rows = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row: Value =
            serde_json::from_str(raw).map_err(|e| CliError::Usage(format!("line {line}: {e}")))?;
        if row.get("meta").is_some() {
            continue;
        }
        let key = key(&row).ok_or_else(|| CliError::Usage(format!("line {line}: malformed row {raw}")))?;
        if prev.as_ref().is_some_and(|p| *p >= key) {
            return Err(mismatch(line, format!("row {raw} is out of order or duplicated")));
        }
        let tau = key.2.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>, _>>().map_err(CliError::usage)?;
        let got = compute(key.0, key.1, &tau, policy)?;
        if got["dim"] != row["dim"] {
            return Err(mismatch(line, format!("row {raw} expects dim {} but recomputed {}", row["dim"], got["dim"])));
        }
        prev = Some(key);
        rows += 1;
    }
    Ok(json!({ "rows": rows, "ok": true }))
}
