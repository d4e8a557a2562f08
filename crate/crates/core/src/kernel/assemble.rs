use super::formula::{KernelFormula, Provenance};
use super::gamma::gamma_series;
use super::nodes::node_poly;
use crate::bessel::{tail_resum, BesselArg, BesselCombo};
use crate::darboux::{Darboux, ParamVector};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Var};

/// Number of series coefficients requested for `k = n − m`.
pub fn truncation(k: i64, big_t: usize) -> usize {
    (k + 2 * big_t as i64 + 2) as usize
}

/// Direct assembly for `k = n − m ≥ 0`.
///
/// The part of `e^{t(x+1/x)}` that survives pairing with
/// `p_n(x) p_m(1/x) dx/x` is `I_k(2t) x^{−k}` plus, for each parity branch
/// `ε` and slot `i`, `x^{−(k+ε+2i)}` times the resummed tail
/// `Σ_{j ≥ k+ε, j ≡ k+ε} q_{k+ε+2i}(j) I_j(2t)`. The residue picks out
/// `γ_0` and `γ_{ε+2i}` respectively.
fn assemble_forward(d: &Darboux, n: i64, m: i64) -> Result<KernelFormula> {
    let k = n - m;
    debug_assert!(k >= 0);
    let big_t = d.params().big_t();
    for site in [n, n + 1, m, m + 1] {
        d.regular_tau(site)?;
    }
    let ratio = d.tau_at(m) / d.tau_at(m + 1);
    let j_max = truncation(k, big_t);
    let gamma = gamma_series(d, n, m, j_max)?;

    let mut combo = BesselCombo::single(BesselArg::TwoT, k, Poly::constant(Var::T, gamma.gamma(0).clone()));
    let mut eps_used = Vec::new();
    if big_t > 0 {
        for eps in [1u8, 2] {
            eps_used.push(eps);
            let base = k + eps as i64 - 1;
            for i in 0..big_t {
                let q = node_poly(k, eps, i, big_t)?;
                let resummed = tail_resum(&q.poly, base, BesselArg::TwoT)?;
                combo = combo.add(&resummed.scale(gamma.gamma(eps as usize + 2 * i)))?;
            }
        }
    }
    let combo = combo.scale(&ratio);
    let provenance = Provenance { big_t, eps: eps_used, truncation: j_max, transported: false };
    let formula = KernelFormula::new(d.params().clone(), n, m, combo, provenance)?;
    check_degree(&formula)?;
    Ok(formula)
}

fn check_degree(f: &KernelFormula) -> Result<()> {
    let bound = (2 * f.provenance.big_t).saturating_sub(1);
    if let Some(deg) = f.max_degree() {
        if deg > bound {
            return Err(Error::InternalInconsistency(format!(
                "β has degree {deg} > {bound} for (n,m)=({},{})",
                f.n, f.m
            )));
        }
    }
    Ok(())
}

/// `u(n, m, t) = [τ(m)τ(n+1) / (τ(m+1)τ(n))] u(m, n, t)`.
pub fn symmetry_transport(d: &Darboux, n: i64, m: i64, swapped: &KernelFormula) -> Result<KernelFormula> {
    if swapped.n != m || swapped.m != n {
        return Err(Error::InvalidParams(format!(
            "expected a formula for ({m},{n}), got ({},{})",
            swapped.n, swapped.m
        )));
    }
    let factor = transport_factor(d, n, m)?;
    let mut provenance = swapped.provenance.clone();
    provenance.transported = !provenance.transported;
    KernelFormula::new(d.params().clone(), n, m, swapped.scaled(&factor), provenance)
}

pub fn transport_factor(d: &Darboux, n: i64, m: i64) -> Result<Rational> {
    let num = d.regular_tau(m)? * d.regular_tau(n + 1)?;
    let den = d.regular_tau(m + 1)? * d.regular_tau(n)?;
    Ok(num / den)
}

/// The closed-form kernel for any pair of sites.
pub fn assemble_kernel(d: &Darboux, n: i64, m: i64) -> Result<KernelFormula> {
    if n >= m {
        assemble_forward(d, n, m)
    } else {
        let swapped = assemble_forward(d, m, n)?;
        symmetry_transport(d, n, m, &swapped)
    }
}

/// Convenience entry point validating the parameters first.
pub fn assemble_kernel_for(params: &ParamVector, n: i64, m: i64) -> Result<KernelFormula> {
    assemble_kernel(&Darboux::new(params)?, n, m)
}

/// `u(n, m, t)` from the closed form; `t = 0` gives `δ_{nm}` exactly.
pub fn kernel_eval(f: &KernelFormula, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(if f.n == f.m { 1.0 } else { 0.0 });
    }
    f.combo.eval_scaled(t)
}
