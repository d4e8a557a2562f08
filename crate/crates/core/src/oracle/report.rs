use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kernel::{kernel_eval, KernelFormula};

/// A reference value `u(n, m, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridPoint {
    pub n: i64,
    pub m: i64,
    pub t: f64,
    pub value: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub n: i64,
    pub m: i64,
    pub t: f64,
    pub closed: f64,
    pub oracle: f64,
    pub diff: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub max_abs: f64,
    pub max_rel: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ComparisonReport {
    /// The row with the largest absolute deviation.
    pub fn worst(&self) -> Option<&ComparisonRow> {
        self.rows.iter().max_by(|a, b| a.diff.abs().total_cmp(&b.diff.abs()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "grid": self.rows,
            "max_abs": self.max_abs,
            "max_rel": self.max_rel,
            "tolerance": self.tolerance,
            "pass": self.pass,
            "worst": self.worst(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,t,closed,oracle,diff\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{:.17e},{:.17e},{:.3e}", r.n, r.m, r.t, r.closed, r.oracle, r.diff).unwrap();
        }
        out
    }
}

/// Compares closed forms against reference values; absolute deviations are
/// tested against `tolerance`. Every reference point needs a formula for its
/// `(n, m)` and vice versa.
pub fn compare_report(closed: &[KernelFormula], oracle: &[GridPoint], tolerance: f64) -> Result<ComparisonReport> {
    let mut by_site: BTreeMap<(i64, i64), &KernelFormula> = BTreeMap::new();
    for f in closed {
        if by_site.insert((f.n, f.m), f).is_some() {
            return Err(Error::GridMismatch(format!("duplicate formula for ({},{})", f.n, f.m)));
        }
    }
    let mut used = BTreeMap::new();
    let mut rows = Vec::with_capacity(oracle.len());
    for p in oracle {
        let f = by_site
            .get(&(p.n, p.m))
            .ok_or_else(|| Error::GridMismatch(format!("no closed form for ({},{})", p.n, p.m)))?;
        used.insert((p.n, p.m), ());
        let value = kernel_eval(f, p.t)?;
        rows.push(ComparisonRow { n: p.n, m: p.m, t: p.t, closed: value, oracle: p.value, diff: value - p.value });
    }
    if let Some((n, m)) = by_site.keys().find(|k| !used.contains_key(k)) {
        return Err(Error::GridMismatch(format!("no reference value for ({n},{m})")));
    }
    let max_abs = rows.iter().map(|r| r.diff.abs()).fold(0.0, f64::max);
    let max_rel = rows.iter().map(|r| r.diff.abs() / r.oracle.abs().max(f64::MIN_POSITIVE)).fold(0.0, f64::max);
    Ok(ComparisonReport { rows, max_abs, max_rel, tolerance, pass: max_abs <= tolerance })
}
