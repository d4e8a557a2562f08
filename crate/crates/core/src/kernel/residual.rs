use serde_json::{json, Value};

use super::assemble::assemble_kernel;
use super::formula::KernelFormula;
use crate::bessel::{BesselArg, BesselCombo};
use crate::darboux::Darboux;
use crate::error::Result;
use crate::exact::{LaurentPoly, Rational};

/// Outcome of an exact residual computation: the residual written as
/// `a(t) I_0(2t) + b(t) I_1(2t)` with `a, b` Laurent polynomials in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactZeroReport {
    pub n: i64,
    pub m: i64,
    pub pass: bool,
    pub residual_i0: LaurentPoly,
    pub residual_i1: LaurentPoly,
}

impl ExactZeroReport {
    pub fn to_json(&self) -> Value {
        let strings = |p: &LaurentPoly| -> Vec<Value> {
            p.coeff_strings().into_iter().map(|(e, c)| json!({ "power": e, "coeff": c })).collect()
        };
        json!({
            "n": self.n,
            "m": self.m,
            "pass": self.pass,
            "residual_I0": strings(&self.residual_i0),
            "residual_I1": strings(&self.residual_i1),
        })
    }
}

/// `e^{2t} ∂_t [e^{−2t} Σ β_j I_j(2t)] = Σ (β_j' − 2β_j) I_j + β_j (I_{j−1} + I_{j+1})`.
fn time_derivative(f: &KernelFormula) -> BesselCombo {
    let mut out = BesselCombo::new(BesselArg::TwoT);
    let two = Rational::from_integer(2.into());
    for (j, b) in f.terms() {
        let diag = &b.derivative() - &b.scale(&two);
        out.add_term(j, &diag);
        out.add_term(j - 1, b);
        out.add_term(j + 1, b);
    }
    out
}

/// `∂_t u(n, m, t) − (L u(·, m, t))(n)`, reduced to the `I_0, I_1` basis.
pub fn pde_residual_with(d: &Darboux, f: &KernelFormula) -> Result<ExactZeroReport> {
    let (n, m) = (f.n, f.m);
    let mut residual = time_derivative(f);
    for (shift, c) in d.operator().row_at(n)? {
        let neighbour = if shift == 0 { f.clone() } else { assemble_kernel(d, n + shift, m)? };
        residual = residual.add(&neighbour.combo.scale(&-c))?;
    }
    let (a, b) = residual.canonical();
    Ok(ExactZeroReport { n, m, pass: a.is_zero() && b.is_zero(), residual_i0: a, residual_i1: b })
}

pub fn pde_residual(f: &KernelFormula) -> Result<ExactZeroReport> {
    pde_residual_with(&Darboux::new(&f.params)?, f)
}
