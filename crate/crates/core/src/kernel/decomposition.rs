use num_complex::Complex64;
use serde_json::{json, Value};

use super::nodes::node_poly;
use crate::bessel::{bessel_row, tail_resum, BesselArg};
use crate::error::{Error, Result};

const TERMS: i64 = 80;

/// Both sides of the splitting of `e^{t(x+1/x)} = Σ_j I_j(2t) x^j` used by
/// the assembler, at one point `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionReport {
    pub k: i64,
    pub big_t: usize,
    pub t: f64,
    pub x: Complex64,
    pub exact: Complex64,
    pub reassembled: Complex64,
}

impl DecompositionReport {
    pub fn error(&self) -> f64 {
        (self.exact - self.reassembled).norm()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "T": self.big_t,
            "t": self.t,
            "x": [self.x.re, self.x.im],
            "exact": [self.exact.re, self.exact.im],
            "reassembled": [self.reassembled.re, self.reassembled.im],
            "error": self.error(),
        })
    }
}

/// Re-sums `Σ_{j ≥ 1−k} I_j x^j + I_k x^{−k} + Σ_{j > k+2T} I_j f_j(x)
/// + Σ_{ε,i} C_{ε,i} x^{−(k+ε+2i)}`, where `f_j` is `x^{−j}` minus its
/// interpolant on the node monomials and `C_{ε,i}` is the resummed tail.
/// Open-ended sums keep 80 terms.
pub fn decomposition_check(k: i64, big_t: usize, t: f64, x: Complex64) -> Result<DecompositionReport> {
    if k < 0 {
        return Err(Error::InvalidParams(format!("base index must be nonnegative, got {k}")));
    }
    if !(t > 0.0) {
        return Err(Error::NonpositiveArgument(t));
    }
    let top = (k + 2 * big_t as i64 + TERMS + 2) as usize;
    let row = bessel_row(2.0 * t, top)?;
    let scale = (2.0 * t).exp();
    let i = |j: i64| row.scaled(j) * scale;
    let xp = |e: i64| x.powi(e as i32);

    let mut nodes = Vec::new();
    for eps in [1u8, 2] {
        for slot in 0..big_t {
            nodes.push((eps, node_poly(k, eps, slot, big_t)?));
        }
    }

    let mut sum: Complex64 = (0..TERMS).map(|l| 1 - k + l).map(|j| xp(j) * i(j)).sum();
    sum += xp(-k) * i(k);
    for j in (k + 2 * big_t as i64 + 1)..(k + 2 * big_t as i64 + 1 + TERMS) {
        let eps = if (j - k) % 2 == 1 { 1 } else { 2 };
        let mut f = xp(-j);
        for (_, q) in nodes.iter().filter(|(e, _)| *e == eps) {
            f -= xp(-q.node()) * q.poly.eval_f64(j as f64);
        }
        sum += f * i(j);
    }
    for (eps, q) in &nodes {
        let c = tail_resum(&q.poly, k + *eps as i64 - 1, BesselArg::TwoT)?.eval_scaled(t)? * scale;
        sum += xp(-q.node()) * c;
    }
    let exact = (t * (x + x.inv())).exp();
    Ok(DecompositionReport { k, big_t, t, x, exact, reassembled: sum })
}
