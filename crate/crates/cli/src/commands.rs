use std::fmt::Write;

use heatkernel::bessel::bessel_row;
use num_traits::Zero;
use heatkernel::darboux::{tau_build, Darboux};
use heatkernel::exact::format_rational;
use heatkernel::kernel::{assemble_kernel, kernel_eval};
use serde_json::{json, Value};

use crate::args::{real_list, BesselArgs, Failure, Format, KernelArgs, OperatorArgs, TauArgs};

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

pub fn kernel(a: &KernelArgs) -> Result<String, Failure> {
    let params = a.params.params().map_err(Failure::Usage)?;
    let times = a.t.as_deref().map(real_list).transpose().map_err(Failure::Usage)?.unwrap_or_default();
    if let Some(t) = times.iter().find(|t| !(**t >= 0.0) || !t.is_finite()) {
        return Err(Failure::Usage(format!("times must be finite and nonnegative, got {t}")));
    }
    let d = Darboux::new(&params)?;
    let f = assemble_kernel(&d, a.n, a.m)?;
    let values: Vec<(f64, f64)> = times.iter().map(|&t| Ok((t, kernel_eval(&f, t)?))).collect::<Result<_, Failure>>()?;
    Ok(match a.format {
        Format::Text => {
            let mut out = f.to_text();
            for (t, u) in &values {
                write!(out, "\nu({},{},{t}) = {u}", a.n, a.m).unwrap();
            }
            out
        }
        Format::Latex => f.to_latex(),
        Format::Json => {
            let mut v = f.to_json();
            if !values.is_empty() {
                v["values"] = values.iter().map(|(t, u)| json!({ "t": t, "u": u })).collect();
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("order,power,coefficient");
            for (j, b) in f.terms() {
                for (p, c) in b.coeffs().iter().enumerate() {
                    write!(out, "\n{j},{p},{}", format_rational(c)).unwrap();
                }
            }
            if !values.is_empty() {
                out.push_str("\n\nt,u");
                for (t, u) in &values {
                    write!(out, "\n{t},{u}").unwrap();
                }
            }
            out
        }
    })
}

/// τ is tabulated without validating the window: zeros are part of the output.
pub fn tau(a: &TauArgs) -> Result<String, Failure> {
    let params = a.params.params().map_err(Failure::Usage)?;
    if a.range < 0 {
        return Err(Failure::Usage("--range must be nonnegative".into()));
    }
    let tau = tau_build(&params);
    let rows: Vec<(i64, String, bool)> = (-a.range..=a.range)
        .map(|n| {
            let v = tau.eval(n);
            let singular = v.is_zero();
            (n, format_rational(&v), singular)
        })
        .collect();
    Ok(match a.format {
        Format::Json => pretty(&json!({
            "params": params.to_string(),
            "polynomial": tau.polynomial().coeff_strings(),
            "values": rows.iter().map(|(n, v, s)| json!({ "n": n, "tau": v, "singular": s })).collect::<Vec<_>>(),
        })),
        Format::Latex => return Err(Failure::Usage("tau supports json, csv and text".into())),
        Format::Csv | Format::Text => {
            let mut out = String::from("n,tau,status");
            for (n, v, s) in &rows {
                write!(out, "\n{n},{v},{}", if *s { "SINGULAR" } else { "ok" }).unwrap();
            }
            out
        }
    })
}

pub fn operator(a: &OperatorArgs) -> Result<String, Failure> {
    let params = a.params.params().map_err(Failure::Usage)?;
    let d = Darboux::new(&params)?;
    let op = d.operator();
    let sites: Vec<i64> = match (a.at, a.range) {
        (Some(n), _) => vec![n],
        (None, Some(r)) => (-r..=r).collect(),
        (None, None) => {
            return match a.format {
                Format::Json => Ok(pretty(&op.to_json())),
                Format::Text => Ok(format!("L = {op}")),
                _ => Err(Failure::Usage("symbolic operator output supports json and text; use --at for csv".into())),
            };
        }
    };
    let rows: Vec<(i64, Vec<(i64, String)>)> = sites
        .iter()
        .map(|&n| Ok((n, op.row_at(n)?.into_iter().map(|(j, c)| (j, format_rational(&c))).collect())))
        .collect::<Result<_, heatkernel::Error>>()?;
    Ok(match a.format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(n, r)| json!({ "n": n, "coeffs": r.iter().map(|(j, c)| json!({ "shift": j, "value": c })).collect::<Vec<_>>() }))
                .collect(),
        )),
        Format::Csv => {
            let mut out = String::from("n,shift,coefficient");
            for (n, r) in &rows {
                for (j, c) in r {
                    write!(out, "\n{n},{j},{c}").unwrap();
                }
            }
            out
        }
        Format::Text => rows
            .iter()
            .map(|(n, r)| {
                let cells: Vec<String> = r.iter().map(|(j, c)| format!("[{j}] {c}")).collect();
                format!("n = {n}: {}", cells.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => return Err(Failure::Usage("operator supports json, csv and text".into())),
    })
}

pub fn bessel(a: &BesselArgs) -> Result<String, Failure> {
    let times = real_list(&a.t).map_err(Failure::Usage)?;
    let rows = times.iter().map(|&t| bessel_row(t, a.kmax)).collect::<Result<Vec<_>, _>>()?;
    Ok(match a.format {
        Format::Json => pretty(&Value::Array(
            rows.iter().map(|r| json!({ "t": r.t(), "scaled": r.values() })).collect(),
        )),
        Format::Csv | Format::Text => {
            let mut out = String::from("k,t,scaled");
            for r in &rows {
                for (k, v) in r.values().iter().enumerate() {
                    write!(out, "\n{k},{},{v:e}", r.t()).unwrap();
                }
            }
            out
        }
        Format::Latex => return Err(Failure::Usage("bessel supports json, csv and text".into())),
    })
}
