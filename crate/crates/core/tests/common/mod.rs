//! Independent transcriptions used as oracles by the integration tests.
//!
//! Nothing here goes through the Darboux machinery: the closed forms are
//! typed in from their published shape and the Bessel values come from the
//! ascending series in plain `f64`.
#![allow(dead_code)]

use heatkernel::bessel::{BesselArg, BesselCombo};
use heatkernel::exact::{int, rat, to_f64, Poly, Rational, Var};

/// `I_k(x)` from `Σ_m (x/2)^{2m+|k|} / (m! (m+|k|)!)`.
pub fn bessel_i(k: i64, x: f64) -> f64 {
    let k = k.unsigned_abs() as usize;
    let half = x / 2.0;
    let mut term = (1..=k).fold(1.0, |acc, i| acc * half / i as f64);
    let mut sum = term;
    for m in 1..200 {
        term *= half * half / (m as f64 * (m + k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

fn tpoly(cs: Vec<Rational>) -> Poly<Rational> {
    Poly::new(Var::T, cs)
}

/// One step at 0: `τ_n = n + δ` and
/// `u = e^{−2t}/(τ_{m+1}τ_n) [τ_mτ_{n+1} I_{n−m} − t I_{n−m} − t I_{n−m+1}]`.
pub fn one_step_combo(delta: &Rational, n: i64, m: i64) -> BesselCombo {
    let tau = |j: i64| int(j) + delta;
    let pre = (tau(m + 1) * tau(n)).recip();
    let mut c = BesselCombo::new(BesselArg::TwoT);
    c.add_term(n - m, &tpoly(vec![&pre * tau(m) * tau(n + 1), -pre.clone()]));
    c.add_term(n - m + 1, &tpoly(vec![int(0), -pre]));
    c
}

/// `τ(n) = (n+α)(2n+1−2α−2β) − (−n+α+β)` for one step at each end.
pub fn two_step_tau(alpha: &Rational, beta: &Rational, n: i64) -> Rational {
    let n = int(n);
    (&n + alpha) * (int(2) * &n + int(1) - int(2) * alpha - int(2) * beta) - (-n + alpha + beta)
}

/// One step at each end:
/// `u = e^{−2t}/(τ(m+1)τ(n)) [τ(m)τ(n+1) I_{n−m} + 4t(β+2α)(n+m−β+2) I_{n−m}
///   − 4t(2mn−βn+2n−βm+2m+β²+2αβ−2β+2α²+2) I_{n−m+1}]`.
pub fn two_step_combo(alpha: &Rational, beta: &Rational, n: i64, m: i64) -> BesselCombo {
    let tau = |j: i64| two_step_tau(alpha, beta, j);
    let (a, b, nn, mm) = (alpha, beta, &int(n), &int(m));
    let pre = (tau(m + 1) * tau(n)).recip();
    let c0 = &pre * tau(m) * tau(n + 1);
    let c1 = &pre * int(4) * (b + int(2) * a) * (nn + mm - b + int(2));
    let quad = int(2) * mm * nn - b * nn + int(2) * nn - b * mm + int(2) * mm + b * b + int(2) * a * b - int(2) * b
        + int(2) * a * a
        + int(2);
    let d1 = -(&pre * int(4) * quad);
    let mut c = BesselCombo::new(BesselArg::TwoT);
    c.add_term(n - m, &tpoly(vec![c0, c1]));
    c.add_term(n - m + 1, &tpoly(vec![int(0), d1]));
    c
}

/// `Σ_j β_j(t) I_j(2t)` with the series Bessel values, without `e^{−2t}`.
pub fn eval_unscaled(c: &BesselCombo, t: f64) -> f64 {
    c.terms().map(|(j, p)| p.eval_f64(t) * bessel_i(j, 2.0 * t)).sum()
}

/// Tail weights `γ_j` for one step at each end.
pub fn two_step_gamma(alpha: &Rational, beta: &Rational, n: i64, m: i64, j: i64) -> Rational {
    let tau = |k: i64| two_step_tau(alpha, beta, k);
    let (nn, mm, jj) = (int(n), int(m), int(j));
    let s = alpha + beta;
    let sign = if j % 2 == 0 { int(1) } else { int(-1) };
    let bracket = (&mm - &s + int(1)) * (&nn - &s + int(1)) * (&nn - &mm + &jj)
        + sign * (&mm + alpha + int(1)) * (&nn + alpha + int(1)) * (nn - mm + jj);
    -(int(4) / (tau(n) * tau(m))) * bracket
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn f(q: &Rational) -> f64 {
    to_f64(q)
}
