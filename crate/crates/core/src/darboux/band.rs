use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{int, Fraction, LaurentPoly, Poly, Rational, Var};

pub type Coeff = Fraction<Rational>;

/// `X = Σ_{j=m1}^{m2} b_j(n) Λ^j` with each `b_j` a rational function of `n`.
///
/// The zero operator has no coefficients; otherwise both ends are nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct BandOperator {
    low: i64,
    coeffs: Vec<Coeff>,
}

fn shift_coeff(c: &Coeff, h: i64) -> Coeff {
    c.shift(&int(h))
}

impl BandOperator {
    pub fn new(low: i64, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        let low = if coeffs.is_empty() { 0 } else { low + lead as i64 };
        BandOperator { low, coeffs }
    }

    pub fn zero() -> Self {
        BandOperator { low: 0, coeffs: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::shift_op(0)
    }

    /// `Λ^k`.
    pub fn shift_op(k: i64) -> Self {
        BandOperator { low: k, coeffs: vec![Coeff::constant(Var::N, Rational::one())] }
    }

    /// Constant-coefficient operator `Σ c_i Λ^{low+i}`.
    pub fn constant(low: i64, coeffs: &[Rational]) -> Self {
        Self::new(low, coeffs.iter().map(|c| Coeff::constant(Var::N, c.clone())).collect())
    }

    /// Multiplication by the function `f(n)`.
    pub fn multiplication(f: Coeff) -> Self {
        Self::new(0, vec![f])
    }

    /// `(Λ − 1)^a (Λ + 1)^b`.
    pub fn unit_root_power(a: u32, b: u32) -> Self {
        let lp = &LaurentPoly::new(Var::X, 0, vec![int(-1), int(1)]).pow(a)
            * &LaurentPoly::new(Var::X, 0, vec![int(1), int(1)]).pow(b);
        let coeffs: Vec<Rational> = (0..=(a + b) as i64).map(|e| lp.coeff(e)).collect();
        Self::constant(0, &coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.low, self.low + self.coeffs.len() as i64 - 1))
    }

    /// `b_j`, zero outside the support.
    pub fn coeff(&self, j: i64) -> Coeff {
        let idx = j - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            return Coeff::zero();
        }
        self.coeffs[idx as usize].clone()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coeff)> + '_ {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.low + i as i64, c))
    }

    /// `b_j(n)`; a pole means the underlying τ vanishes near `n`.
    pub fn coeff_at(&self, j: i64, n: i64) -> Result<Rational> {
        self.coeff(j).eval(&int(n)).map_err(|_| Error::SingularTau(n))
    }

    /// All coefficients at site `n` as `(shift, value)`.
    pub fn row_at(&self, n: i64) -> Result<Vec<(i64, Rational)>> {
        self.terms().map(|(j, c)| Ok((j, c.eval(&int(n)).map_err(|_| Error::SingularTau(n))?))).collect()
    }

    /// `Σ_j b_j(n) x^j`: the operator applied to `k ↦ x^k`, divided by `x^n`.
    pub fn symbol_at(&self, n: i64) -> Result<LaurentPoly> {
        let row = self.row_at(n)?;
        Ok(LaurentPoly::from_terms(Var::X, row))
    }

    /// `(Xf)(n)` for an exact sequence.
    pub fn apply_at(&self, n: i64, f: impl Fn(i64) -> Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (j, c) in self.row_at(n)? {
            acc += c * f(n + j);
        }
        Ok(acc)
    }

    /// `self ∘ other`: `Σ a_j(n) b_k(n+j) Λ^{j+k}`.
    pub fn compose(&self, other: &Self) -> Self {
        let (Some((a0, a1)), Some((b0, b1))) = (self.support(), other.support()) else {
            return Self::zero();
        };
        let mut out = vec![Coeff::zero(); (a1 - a0 + b1 - b0 + 1) as usize];
        for (j, a) in self.terms() {
            for (k, b) in other.terms() {
                let idx = (j + k - a0 - b0) as usize;
                out[idx] = &out[idx] + &(a * &shift_coeff(b, j));
            }
        }
        Self::new(a0 + b0, out)
    }

    /// Formal adjoint `X* = Σ b_j(n − j) Λ^{−j}`.
    pub fn adjoint(&self) -> Self {
        let Some((m1, m2)) = self.support() else {
            return Self::zero();
        };
        let coeffs = (-m2..=-m1).map(|k| shift_coeff(&self.coeff(-k), k)).collect();
        Self::new(-m2, coeffs)
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let lo = [self.support(), other.support()].into_iter().flatten().map(|s| s.0).min();
        let hi = [self.support(), other.support()].into_iter().flatten().map(|s| s.1).max();
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Self::zero();
        };
        let coeffs = (lo..=hi)
            .map(|j| if sign { &self.coeff(j) + &other.coeff(j) } else { &self.coeff(j) - &other.coeff(j) })
            .collect();
        Self::new(lo, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn to_json(&self) -> Value {
        let (m1, m2) = self.support().unwrap_or((0, -1));
        let coeffs: Vec<Value> = self
            .terms()
            .map(|(j, c)| json!({ "shift": j, "num": c.numer().coeff_strings(), "den": c.denom().coeff_strings() }))
            .collect();
        json!({ "support": [m1, m2], "coeffs": coeffs })
    }
}

impl fmt::Display for BandOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("[{c}]"),
                1 => format!("[{c}] L"),
                _ => format!("[{c}] L^{j}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Polynomial in `n` as an operator coefficient.
pub fn poly_coeff(p: Poly<Rational>) -> Coeff {
    Coeff::from_poly(p.with_var(Var::N))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn n_plus(c: i64) -> Coeff {
        poly_coeff(Poly::new(Var::N, vec![int(c), int(1)]))
    }

    #[test]
    fn composition_shifts_right_coefficients() {
        // Λ ∘ n = (n+1) Λ
        let lhs = BandOperator::shift_op(1).compose(&BandOperator::multiplication(n_plus(0)));
        assert_eq!(lhs, BandOperator::new(1, vec![n_plus(1)]));
    }

    #[test]
    fn adjoint_of_shift_and_function() {
        // (n Λ)* = Λ^{-1} n = (n−1) Λ^{-1}
        let x = BandOperator::new(1, vec![n_plus(0)]);
        assert_eq!(x.adjoint(), BandOperator::new(-1, vec![n_plus(-1)]));
        assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn unit_root_power_expands() {
        assert_eq!(BandOperator::unit_root_power(1, 1), BandOperator::constant(0, &[int(-1), int(0), int(1)]));
        assert_eq!(BandOperator::unit_root_power(0, 0), BandOperator::identity());
    }

    #[test]
    fn json_shape() {
        let x = BandOperator::constant(-1, &[int(1), int(-2), int(1)]);
        let v = x.to_json();
        assert_eq!(v["support"], json!([-1, 1]));
        assert_eq!(v["coeffs"][1], json!({"shift": 0, "num": ["-2"], "den": ["1"]}));
    }

    #[test]
    fn evaluation_reports_pole_site() {
        let inv = Coeff::new(Poly::constant(Var::N, int(1)), Poly::new(Var::N, vec![int(-3), int(1)])).unwrap();
        let x = BandOperator::multiplication(inv);
        assert_eq!(x.coeff_at(0, 3), Err(Error::SingularTau(3)));
        assert_eq!(x.coeff_at(0, 4).unwrap(), int(1));
        assert_eq!(x.apply_at(5, |k| rat(k, 1)).unwrap(), rat(5, 2));
    }
}
