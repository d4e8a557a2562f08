//! Numerical residuals of the classical identities, all in units of `e^t`
//! (i.e. computed on `e^{−t} I_k(t)`), so values are comparable across `t`.

use num_complex::Complex64;

use super::combo::{tail_resum, BesselArg};
use super::numeric::{bessel_row, BesselRow};
use crate::error::Result;
use crate::exact::{int, Poly, Var};

/// `I_k(t')` at `t' = row.t() + dt`, rescaled by `e^{−row.t()}`.
fn shifted(t: f64, dt: f64, kmax: usize) -> Result<Vec<f64>> {
    let row = bessel_row(t + dt, kmax + 1)?;
    Ok(row.values().iter().map(|v| v * dt.exp()).collect())
}

/// `max_{1≤k≤K} |k I_k − (t/2)(I_{k−1} − I_{k+1})|`.
pub fn recurrence_error(t: f64, kmax: usize) -> Result<f64> {
    let row = bessel_row(t, kmax + 1)?;
    Ok((1..=kmax as i64)
        .map(|k| (k as f64 * row.scaled(k) - t / 2.0 * (row.scaled(k - 1) - row.scaled(k + 1))).abs())
        .fold(0.0, f64::max))
}

/// `max_k |I_k' − (I_{k−1} + I_{k+1})/2|` with a central difference of step `h`.
pub fn derivative_error(t: f64, kmax: usize, h: f64) -> Result<f64> {
    let row = bessel_row(t, kmax + 1)?;
    let plus = shifted(t, h, kmax)?;
    let minus = shifted(t, -h, kmax)?;
    Ok((0..=kmax)
        .map(|k| {
            let fd = (plus[k] - minus[k]) / (2.0 * h);
            (fd - 0.5 * (row.scaled(k as i64 - 1) + row.scaled(k as i64 + 1))).abs()
        })
        .fold(0.0, f64::max))
}

/// `max_k |(t²∂² + t∂ − (t² + k²)) I_k|` with fourth-order differences of step `h`.
pub fn bessel_equation_error(t: f64, kmax: usize, h: f64) -> Result<f64> {
    let row = bessel_row(t, kmax)?;
    let samples: Vec<Vec<f64>> = [-2.0, -1.0, 1.0, 2.0].iter().map(|s| shifted(t, s * h, kmax)).collect::<Result<_>>()?;
    Ok((0..=kmax)
        .map(|k| {
            let (m2, m1, p1, p2) = (samples[0][k], samples[1][k], samples[2][k], samples[3][k]);
            let c = row.values()[k];
            let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
            let d2 = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
            (t * t * d2 + t * d1 - (t * t + (k * k) as f64) * c).abs()
        })
        .fold(0.0, f64::max))
}

/// `|Σ_{|k|≤K} I_k(t) x^k − e^{t(x+1/x)/2}|`, scaled by `e^{−t}`.
pub fn generating_function_error(t: f64, x: Complex64, kmax: usize) -> Result<f64> {
    let row: BesselRow = bessel_row(t, kmax)?;
    let k = kmax as i64;
    let sum: Complex64 = (-k..=k).map(|j| x.powi(j as i32) * row.scaled(j)).sum();
    let exact = (t * (x + x.inv()) / 2.0 - t).exp();
    Ok((sum - exact).norm())
}

/// `|Σ_{j>k, j≡k+1} j^{2n+1} I_j(t) − Σ_s α^n_{s−k}(t) I_s(t)|`, tail cut at 80 terms.
pub fn tail_resum_error(n: usize, k: i64, t: f64) -> Result<f64> {
    let mut coeffs = vec![int(0); 2 * n + 2];
    coeffs[2 * n + 1] = int(1);
    let q = Poly::new(Var::J, coeffs);
    let closed = tail_resum(&q, k, BesselArg::T)?.eval_scaled(t)?;
    let row = bessel_row(t, (k.abs() + 170) as usize)?;
    let tail: f64 = (0..80).map(|l| k + 1 + 2 * l).map(|j| (j as f64).powi(2 * n as i32 + 1) * row.scaled(j)).sum();
    Ok((closed - tail).abs())
}
