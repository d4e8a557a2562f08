use std::f64::consts::PI;
use std::fmt::Write;

use heatkernel::bessel::identities::{
    bessel_equation_error, derivative_error, generating_function_error, recurrence_error, tail_resum_error,
};
use heatkernel::cheb::{av_membership, f_build, interp_q, lagrange_vanishing_sum, Membership, NodeSet};
use heatkernel::darboux::Darboux;
use heatkernel::exact::{format_rational, rat, to_f64, Poly, Rational, Var};
use heatkernel::kernel::{assemble_kernel, decomposition_check, pde_residual_with};
use heatkernel::oracle::{
    circle_quadrature, compare_report, lattice_grid, GridPoint, Integrand, LatticeWindow, QuadratureSpec,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{real_list, Failure, Format, Mode, VerifyArgs};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn bound(name: impl Into<String>, err: f64, tol: f64) -> Self {
        Check::new(name, err < tol, format!("error {err:.3e} (tolerance {tol:.0e})"))
    }
}

pub struct Outcome {
    pub output: String,
    /// First failing check, if any.
    pub failure: Option<Check>,
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let mut extra = None;
    let checks = match a.mode {
        Mode::Pde => pde(a)?,
        Mode::Oracle => {
            let (checks, report) = oracle(a)?;
            extra = Some(report);
            checks
        }
        Mode::Orth => orth(a)?,
        Mode::Decomp => decomp(a)?,
        Mode::Identities => identities(a)?,
    };
    let failure = checks.iter().find(|c| !c.pass).cloned();
    let output = match (a.format, extra) {
        (Format::Json, Some((json, _))) => pretty(&json),
        (Format::Csv, Some((_, csv))) => csv,
        (Format::Json, None) => pretty(&Value::Array(
            checks.iter().map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail })).collect(),
        )),
        (Format::Csv, None) => {
            let mut out = String::from("check,pass,detail");
            for c in &checks {
                write!(out, "\n{},{},{}", c.name, c.pass, c.detail).unwrap();
            }
            out
        }
        (Format::Latex, _) => return Err(Failure::Usage("verify supports json, csv and text".into())),
        (Format::Text, _) => {
            let lines: Vec<String> =
                checks.iter().map(|c| format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)).collect();
            let passed = checks.iter().filter(|c| c.pass).count();
            format!("{}\n{passed}/{} checks passed", lines.join("\n"), checks.len())
        }
    };
    Ok(Outcome { output, failure })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn times(a: &VerifyArgs, default: &[f64]) -> Result<Vec<f64>, Failure> {
    match &a.t {
        Some(s) => {
            let ts = real_list(s).map_err(Failure::Usage)?;
            if let Some(t) = ts.iter().find(|t| !(**t > 0.0) || !t.is_finite()) {
                return Err(Failure::Usage(format!("times must be positive, got {t}")));
            }
            Ok(ts)
        }
        None => Ok(default.to_vec()),
    }
}

fn site_pairs(a: &VerifyArgs, default_range: i64, low: Option<i64>) -> Vec<(i64, i64)> {
    if let (Some(n), Some(m)) = (a.n, a.m) {
        return vec![(n, m)];
    }
    let r = a.range.unwrap_or(default_range);
    let lo = low.unwrap_or(-r);
    (lo..=r).flat_map(|n| (lo..=r).map(move |m| (n, m))).collect()
}

fn darboux(a: &VerifyArgs) -> Result<Darboux, Failure> {
    Ok(Darboux::new(&a.params.params().map_err(Failure::Usage)?)?)
}

fn pde(a: &VerifyArgs) -> Result<Vec<Check>, Failure> {
    let d = darboux(a)?;
    let pairs = site_pairs(a, 3, None);
    let reports = pairs
        .par_iter()
        .map(|&(n, m)| pde_residual_with(&d, &assemble_kernel(&d, n, m)?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(reports
        .into_iter()
        .map(|r| {
            let detail = if r.pass {
                "residual is exactly zero".to_string()
            } else {
                format!("residual = ({}) I_0(2t) + ({}) I_1(2t)", r.residual_i0, r.residual_i1)
            };
            Check::new(format!("pde ({},{})", r.n, r.m), r.pass, detail)
        })
        .collect())
}

type Report = (Value, String);

fn oracle(a: &VerifyArgs) -> Result<(Vec<Check>, Report), Failure> {
    let d = darboux(a)?;
    let ts = times(a, &[0.5, 1.0, 2.0])?;
    let tol = a.tolerance.unwrap_or(1e-10);
    let pairs = site_pairs(a, 4, None);
    let mut sources: Vec<i64> = pairs.iter().map(|p| p.1).collect();
    sources.sort_unstable();
    sources.dedup();
    let window = LatticeWindow::new(d.operator(), a.window)?;
    let evolutions = lattice_grid(&window, &sources, &ts)?;
    let mut points = Vec::new();
    for &(n, m) in &pairs {
        for ev in evolutions.iter().filter(|e| e.m == m) {
            points.push(GridPoint { n, m, t: ev.t, value: ev.at(n) });
        }
    }
    let formulas = pairs.par_iter().map(|&(n, m)| assemble_kernel(&d, n, m)).collect::<Result<Vec<_>, _>>()?;
    let report = compare_report(&formulas, &points, tol)?;
    let mut checks = vec![Check::new(
        "oracle",
        report.pass,
        format!("max |closed − lattice| = {:.3e} over {} points (tolerance {tol:.0e})", report.max_abs, report.rows.len()),
    )];
    if let (false, Some(w)) = (report.pass, report.worst()) {
        checks.push(Check::new(
            format!("oracle worst ({},{}) t={}", w.n, w.m, w.t),
            false,
            format!("closed {} vs lattice {}", w.closed, w.oracle),
        ));
    }
    Ok((checks, (report.to_json(), report.to_csv())))
}

fn orth(a: &VerifyArgs) -> Result<Vec<Check>, Failure> {
    let d = darboux(a)?;
    let tol = a.tolerance.unwrap_or(1e-10);
    let spec = QuadratureSpec::new(Integrand::Orthogonality);
    let pairs = site_pairs(a, 5, Some(0));
    let entries = pairs
        .par_iter()
        .map(|&(n, m)| {
            let q = circle_quadrature(&spec, &d, n, m)?;
            let expected = if n == m { to_f64(&(d.regular_tau(n + 1)? / d.regular_tau(n)?)) } else { 0.0 };
            Ok((n, m, q.value, expected))
        })
        .collect::<Result<Vec<_>, heatkernel::Error>>()?;
    Ok(entries
        .into_iter()
        .map(|(n, m, v, e)| {
            Check::new(format!("orth ({n},{m})"), (v - e).abs() < tol, format!("{v} vs {e} (tolerance {tol:.0e})"))
        })
        .collect())
}

fn decomp(a: &VerifyArgs) -> Result<Vec<Check>, Failure> {
    let tol = a.tolerance.unwrap_or(1e-10);
    let ks: Vec<i64> = a.k.map_or_else(|| vec![0, 1, 2], |k| vec![k]);
    let bts: Vec<usize> = a.big_t.map_or_else(|| vec![1, 2], |t| vec![t]);
    let ts = times(a, &[1.0])?;
    let mut checks = Vec::new();
    for &k in &ks {
        for &bt in &bts {
            for &t in &ts {
                for (label, theta) in [("π/7", PI / 7.0), ("π/3", PI / 3.0)] {
                    let r = decomposition_check(k, bt, t, Complex64::from_polar(1.0, theta))?;
                    checks.push(Check::bound(format!("decomp k={k} T={bt} t={t} x=e^(i{label})"), r.error(), tol));
                }
            }
        }
    }
    Ok(checks)
}

fn identities(a: &VerifyArgs) -> Result<Vec<Check>, Failure> {
    let ts = times(a, &[0.5, 1.0, 2.0, 4.0])?;
    let mut checks = Vec::new();
    for &t in &ts {
        checks.push(Check::bound(format!("recurrence t={t}"), recurrence_error(t, a.kmax)?, 1e-12));
        checks.push(Check::bound(format!("derivative t={t}"), derivative_error(t, a.kmax, 1e-5)?, 1e-8));
        checks.push(Check::bound(format!("bessel-equation t={t}"), bessel_equation_error(t, a.kmax, 1e-2)?, 1e-7));
        let gf = (0..8)
            .map(|i| generating_function_error(t, Complex64::from_polar(1.0, 0.3 + i as f64 * PI / 4.0), 40))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(0.0, f64::max);
        checks.push(Check::bound(format!("generating-function t={t}"), gf, 1e-12));
    }
    for n in 0..=3 {
        for k in -3..=3 {
            checks.push(Check::bound(format!("tail-resum n={n} k={k}"), tail_resum_error(n, k, 1.0)?, 1e-10));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    checks.push(lagrange_instances(&mut rng, 200)?);
    checks.push(interpolation_instances(&mut rng, 50)?);
    checks.push(membership_instances(&mut rng, 50)?);
    Ok(checks)
}

fn lagrange_instances(rng: &mut ChaCha8Rng, count: usize) -> Result<Check, Failure> {
    for i in 0..count {
        let t = rng.gen_range(1..=4usize);
        let mut coeffs = vec![Rational::from_integer(0.into()); 2 * t];
        for c in coeffs.iter_mut().skip(1).step_by(2) {
            *c = rat(rng.gen_range(-20..=20), 1);
        }
        let q = Poly::new(Var::N, coeffs);
        let mut nodes: Vec<Rational> = Vec::new();
        while nodes.len() < t + 1 {
            let s = rat(rng.gen_range(1..60), rng.gen_range(1..4));
            if !nodes.contains(&s) {
                nodes.push(s);
            }
        }
        let sum = lagrange_vanishing_sum(&q, &nodes)?;
        if !sum.within_contract || sum.value != Rational::from_integer(0.into()) {
            let shown: Vec<String> = nodes.iter().map(format_rational).collect();
            return Ok(Check::new(
                "lagrange-vanishing",
                false,
                format!("instance {i}: q = {q}, nodes {shown:?} gives {}", format_rational(&sum.value)),
            ));
        }
    }
    Ok(Check::new("lagrange-vanishing", true, format!("{count} random instances vanish exactly")))
}

fn random_nodes(rng: &mut ChaCha8Rng, count: usize, same_parity: bool) -> NodeSet {
    loop {
        let parity = rng.gen_range(0..2i64);
        let mut nodes = Vec::with_capacity(count);
        while nodes.len() < count {
            let mut s = rng.gen_range(1..=30i64);
            if same_parity && s % 2 != parity {
                s += 1;
            }
            nodes.push(s);
        }
        if let Ok(set) = NodeSet::new(nodes) {
            return set;
        }
    }
}

fn interpolation_instances(rng: &mut ChaCha8Rng, count: usize) -> Result<Check, Failure> {
    for i in 0..count {
        let t = rng.gen_range(0..=4usize);
        let same_parity = rng.gen_bool(0.5);
        let nodes = random_nodes(rng, t + 1, same_parity);
        if let Err(e) = interp_q(&nodes) {
            return Ok(Check::new("interp-divisibility", false, format!("instance {i}: nodes {:?}: {e}", nodes.nodes())));
        }
    }
    Ok(Check::new("interp-divisibility", true, format!("{count} random node sets divide exactly")))
}

fn membership_instances(rng: &mut ChaCha8Rng, count: usize) -> Result<Check, Failure> {
    for i in 0..count {
        let (r, s) = (rng.gen_range(0..=2usize), rng.gen_range(0..=2usize));
        let t = r.max(s) + rng.gen_range(0..=2usize);
        let nodes = random_nodes(rng, t + 1, true);
        let f = f_build(&nodes);
        let ok = match av_membership(&f, r, s)? {
            Membership::Member(cert) => cert.verify(&f),
            Membership::NotMember => false,
        };
        if !ok {
            return Ok(Check::new("membership", false, format!("instance {i}: R={r} S={s} nodes {:?}", nodes.nodes())));
        }
    }
    Ok(Check::new("membership", true, format!("{count} certificates verify by substitution")))
}

