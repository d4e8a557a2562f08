use std::f64::consts::PI;

use num_complex::Complex64;

use crate::darboux::Darboux;
use crate::error::{Error, Result};
use crate::exact::to_f64;

/// Which contour integral to evaluate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Integrand {
    /// `(1/2πi) ∮ p_n(x) p_m(1/x) dx/x`, equal to `δ_{nm} τ(n+1)/τ(n)`.
    Orthogonality,
    /// `(τ(m)/τ(m+1)) (e^{−2t}/2πi) ∮ e^{t(x+1/x)} p_n(x) p_m(1/x) dx/x`.
    Kernel { t: f64 },
    /// `(e^{−2t}/2πi) ∮ e^{t(x+1/x)} p_n(x) p*_{m+1}(x) dx`.
    KernelAdjoint { t: f64 },
}

/// Trapezoidal rule on `|x| = radius`, doubling from `min_nodes` up to
/// `max_nodes` until successive values agree to `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub integrand: Integrand,
    /// Any radius in `(0, 1)` or `(1, ∞)` encloses the same residue; `±1` are poles.
    pub radius: f64,
    pub min_nodes: usize,
    pub max_nodes: usize,
    pub tolerance: f64,
}

impl QuadratureSpec {
    pub const DEFAULT_RADIUS: f64 = 0.5;

    pub fn new(integrand: Integrand) -> Self {
        QuadratureSpec { integrand, radius: Self::DEFAULT_RADIUS, min_nodes: 16, max_nodes: 1 << 16, tolerance: 1e-12 }
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub imaginary: f64,
    pub nodes: usize,
    /// `|Q_N − Q_{N/2}|` for each doubling.
    pub history: Vec<f64>,
}

pub fn circle_quadrature(spec: &QuadratureSpec, d: &Darboux, n: i64, m: i64) -> Result<QuadratureResult> {
    if !(spec.radius > 0.0) || (spec.radius - 1.0).abs() < 1e-3 {
        return Err(Error::InvalidParams(format!("contour radius {} touches the poles at ±1", spec.radius)));
    }
    let p_n = d.wave_p(n)?.value;
    let (weight, other, t) = match spec.integrand {
        Integrand::Orthogonality => (1.0, d.wave_p(m)?.value.reflect(), 0.0),
        Integrand::Kernel { t } => (to_f64(&(d.regular_tau(m)? / d.regular_tau(m + 1)?)), d.wave_p(m)?.value.reflect(), t),
        // p*_{m+1} from the P* route (indexed by m); dx = x · (dx/x).
        Integrand::KernelAdjoint { t } => (1.0, d.wave_p_star_via_operator(m)?.value.shift(1), t),
    };
    let f = |x: Complex64| (t * (x + x.inv())).exp() * p_n.eval_complex(x) * other.eval_complex(x);
    let trapezoid = |nodes: usize| -> Complex64 {
        let sum: Complex64 = (0..nodes)
            .map(|k| f(Complex64::from_polar(spec.radius, 2.0 * PI * (k as f64 + 0.5) / nodes as f64)))
            .sum();
        sum / nodes as f64
    };
    let scale = weight * (-2.0 * t).exp();
    let mut nodes = spec.min_nodes.max(2);
    let mut prev = trapezoid(nodes) * scale;
    let mut history = Vec::new();
    while nodes < spec.max_nodes {
        nodes *= 2;
        let cur = trapezoid(nodes) * scale;
        let diff = (cur - prev).norm();
        history.push(diff);
        if diff < spec.tolerance {
            if cur.im.abs() >= 1e-12 {
                return Err(Error::InternalInconsistency(format!("quadrature has imaginary part {:e}", cur.im)));
            }
            return Ok(QuadratureResult { value: cur.re, imaginary: cur.im, nodes, history });
        }
        prev = cur;
    }
    Err(Error::NoConvergence { nodes })
}
