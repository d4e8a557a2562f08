use num_traits::Zero;

use crate::darboux::Darboux;
use crate::error::{Error, Result};
use crate::exact::{series_at_zero, Rational};

/// Coefficients of `x^{m−n} p_n(x) p_m(1/x) = Σ_j γ_j x^j` around `x = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSeries {
    pub n: i64,
    pub m: i64,
    gammas: Vec<Rational>,
}

impl GammaSeries {
    /// `γ_j`; panics past the truncation.
    pub fn gamma(&self, j: usize) -> &Rational {
        &self.gammas[j]
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    /// Index of the last available coefficient.
    pub fn truncation(&self) -> usize {
        self.gammas.len() - 1
    }
}

/// `γ_0..γ_J` for `n ≥ m`.
pub fn gamma_series(d: &Darboux, n: i64, m: i64, j_max: usize) -> Result<GammaSeries> {
    if n < m {
        return Err(Error::InvalidParams(format!("gamma_series needs n ≥ m, got n={n}, m={m}")));
    }
    d.regular_tau(n)?;
    d.regular_tau(m)?;
    let product = &d.wave_p(n)?.value * &d.wave_p(m)?.value.reflect();
    let series = series_at_zero(&product.shift(m - n), j_max + 1)?;
    if series.first_exponent() < 0 {
        return Err(Error::InternalInconsistency(format!(
            "expansion of p_n(x)p_m(1/x) starts below x^(n-m) (n={n}, m={m})"
        )));
    }
    let gammas: Vec<Rational> = (0..=j_max as i64).map(|j| series.coefficient(j)).collect::<Result<_>>()?;
    let expected = d.regular_tau(n + 1)? / d.regular_tau(n)?;
    if gammas[0] != expected {
        return Err(Error::InternalInconsistency(format!(
            "leading coefficient {} differs from τ(n+1)/τ(n) = {expected}",
            gammas[0]
        )));
    }
    debug_assert!(!gammas[0].is_zero());
    Ok(GammaSeries { n, m, gammas })
}
