//! Darboux-transformed Laplacians from the τ function: Schur components,
//! discrete Wronskians, the operator `L_{R,S}`, the factors `Q`, `P` and the
//! eigenfunctions `p_n`, `p*_n`.

mod band;
mod params;
mod schur;
mod tau;
mod wave;

pub use band::{poly_coeff, BandOperator, Coeff};
pub use params::ParamVector;
pub use schur::{phi, psi, schur_component, Epsilon, NPoly, QuasiPolynomial, RPoly};
pub use tau::{tau_build, TauFunction};
pub use wave::WaveFunction;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{determinant, int, LaurentPoly, Poly, Rational, RationalFunction, Var};
use tau::{numeric_columns, wronskian_matrix, Direction};

/// Coefficients `c_i / det` of a Wronskian-ratio operator `Σ_i (c_i/det) D^i`,
/// where `D` is the difference in `dir`.
fn wronskian_ratio(params: &ParamVector, offset: i64, dir: Direction) -> Result<Vec<Coeff>> {
    let cols = numeric_columns(params, offset);
    let k = cols.len();
    let m = wronskian_matrix(&cols, k + 1, dir);
    let den = determinant(&m[..k]).with_var(Var::N);
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let minor: Vec<Vec<Poly<Rational>>> =
            m.iter().enumerate().filter(|(row, _)| *row != i).map(|(_, r)| r.clone()).collect();
        let mut cof = determinant(&minor).with_var(Var::N);
        if (i + k) % 2 == 1 {
            cof = -cof;
        }
        out.push(Coeff::new(cof, den.clone()).map_err(|_| Error::InternalInconsistency("Wronskian vanishes identically".into()))?);
    }
    Ok(out)
}

/// `Σ_i a_i(n) D^i` expanded into shifts.
fn expand_in_shifts(coeffs: &[Coeff], dir: Direction) -> BandOperator {
    let d = match dir {
        Direction::Forward => BandOperator::constant(0, &[int(-1), int(1)]),
        Direction::Backward => BandOperator::constant(-1, &[int(1), int(-1)]),
    };
    let mut power = BandOperator::identity();
    let mut acc = BandOperator::zero();
    for a in coeffs {
        acc = acc.add(&BandOperator::multiplication(a.clone()).compose(&power));
        power = power.compose(&d);
    }
    acc
}

fn tau_ratio(num: &[&Poly<Rational>], den: &[&Poly<Rational>]) -> Coeff {
    let prod = |ps: &[&Poly<Rational>]| ps.iter().fold(Poly::constant(Var::N, Rational::one()), |a, p| &a * *p);
    Coeff::new(prod(num), prod(den)).expect("τ is not identically zero")
}

/// `L = Λ + (−2 + ∂_{r_1} log(τ(n+1)/τ(n))) + τ(n−1)τ(n+1)/τ(n)² Λ^{-1}`.
fn operator_from_tau(tau: &TauFunction) -> BandOperator {
    let t = tau.polynomial();
    let dt = tau.r1_derivative();
    let t_next = t.shift(&int(1));
    let t_prev = t.shift(&int(-1));
    let d = &tau_ratio(&[&dt.shift(&int(1))], &[&t_next]) - &tau_ratio(&[dt], &[t]);
    let diag = &d - &Coeff::constant(Var::N, int(2));
    let lower = tau_ratio(&[&t_prev, &t_next], &[t, t]);
    BandOperator::new(-1, vec![lower, diag, Coeff::constant(Var::N, Rational::one())])
}

/// A validated Darboux configuration: τ is nonzero on `[−W, W]`.
#[derive(Clone, Debug)]
pub struct Darboux {
    params: ParamVector,
    tau: TauFunction,
    window: i64,
    operator: BandOperator,
    q: BandOperator,
    p_star: BandOperator,
}

impl Darboux {
    pub const DEFAULT_WINDOW: i64 = 512;

    pub fn new(params: &ParamVector) -> Result<Self> {
        Self::with_window(params, Self::DEFAULT_WINDOW)
    }

    pub fn with_window(params: &ParamVector, window: i64) -> Result<Self> {
        let tau = tau_build(params);
        if tau.polynomial().is_zero() {
            return Err(Error::InvalidParams(format!("τ vanishes identically for {params}")));
        }
        if let Some(n) = tau.first_zero(window) {
            return Err(Error::SingularTau(n));
        }
        let operator = operator_from_tau(&tau);
        let q = expand_in_shifts(&wronskian_ratio(params, 0, Direction::Forward)?, Direction::Forward);
        let offset = params.order() as i64;
        let p_star = expand_in_shifts(&wronskian_ratio(params, offset, Direction::Backward)?, Direction::Backward);
        Ok(Darboux { params: params.clone(), tau, window, operator, q, p_star })
    }

    pub fn params(&self) -> &ParamVector {
        &self.params
    }

    pub fn tau(&self) -> &TauFunction {
        &self.tau
    }

    pub fn tau_at(&self, n: i64) -> Rational {
        self.tau.eval(n)
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// `τ(n)`, or [`Error::SingularTau`] when it vanishes.
    pub fn regular_tau(&self, n: i64) -> Result<Rational> {
        let v = self.tau.eval(n);
        if v.is_zero() {
            Err(Error::SingularTau(n))
        } else {
            Ok(v)
        }
    }

    /// `L_{R,S}` from the τ function.
    pub fn operator(&self) -> &BandOperator {
        &self.operator
    }

    /// `Q`, monic of order `R+S` in `Λ`.
    pub fn q(&self) -> &BandOperator {
        &self.q
    }

    pub fn p_star(&self) -> &BandOperator {
        &self.p_star
    }

    pub fn p(&self) -> BandOperator {
        self.p_star.adjoint()
    }

    /// `L` recovered from the intertwining `L Q = Q L_0`.
    pub fn operator_from_q(&self) -> BandOperator {
        let k = self.params.order() as i64;
        let q0 = self.q.coeff(0);
        let qk1 = if k >= 1 { self.q.coeff(k - 1) } else { Coeff::zero() };
        let diag = &(&qk1 - &Coeff::constant(Var::N, int(2))) - &qk1.shift(&int(1));
        let lower = q0.checked_div(&q0.shift(&int(-1))).expect("Q has a nonzero constant coefficient");
        BandOperator::new(-1, vec![lower, diag, Coeff::constant(Var::N, Rational::one())])
    }

    fn unit_root_denominator(&self) -> LaurentPoly {
        let r = self.params.r_steps() as u32;
        let s = self.params.s_steps() as u32;
        &LaurentPoly::new(Var::X, 0, vec![int(-1), int(1)]).pow(r) * &LaurentPoly::new(Var::X, 0, vec![int(1), int(1)]).pow(s)
    }

    /// `p_n(x) = (Q x^k)|_{k=n} / ((x−1)^R (x+1)^S)`.
    pub fn wave_p(&self, n: i64) -> Result<WaveFunction> {
        self.regular_tau(n)?;
        let num = self.q.symbol_at(n)?.shift(n);
        Ok(WaveFunction { n, value: RationalFunction::new(num, self.unit_root_denominator())? })
    }

    /// `p*_{n+1}(x) = (τ(n)/τ(n+1)) x^{-1} p_n(1/x)`.
    pub fn wave_p_star(&self, n: i64) -> Result<WaveFunction> {
        let ratio = self.regular_tau(n)? / self.regular_tau(n + 1)?;
        let p = self.wave_p(n)?;
        Ok(WaveFunction { n: n + 1, value: p.value.reflect().shift(-1).scale(&ratio) })
    }

    /// `p*_{n+1}` built independently from `P*` applied to `k ↦ x^{-(k+1)}`.
    pub fn wave_p_star_via_operator(&self, n: i64) -> Result<WaveFunction> {
        let row = self.p_star.row_at(n)?;
        let num = LaurentPoly::from_terms(Var::X, row.into_iter().map(|(j, c)| (-(n + 1 + j), c)));
        Ok(WaveFunction { n: n + 1, value: RationalFunction::new(num, self.unit_root_denominator())? })
    }

    /// `(L p)_n(x) − (x − 2 + 1/x) p_n(x)`, which must vanish.
    pub fn eigen_defect(&self, n: i64) -> Result<RationalFunction> {
        let mut acc = RationalFunction::zero(Var::X);
        for (j, c) in self.operator.row_at(n)? {
            acc = &acc + &self.wave_p(n + j)?.value.scale(&c);
        }
        let lambda = LaurentPoly::new(Var::X, -1, vec![int(1), int(-2), int(1)]);
        Ok(&acc - &self.wave_p(n)?.value.mul_laurent(&lambda))
    }
}

/// `L_{R,S}` via the τ route, validated on the default window.
pub fn operator_build(params: &ParamVector) -> Result<BandOperator> {
    Ok(Darboux::new(params)?.operator().clone())
}

/// `(Q, P)` from the Wronskian-ratio formulas.
pub fn qp_build(params: &ParamVector) -> Result<(BandOperator, BandOperator)> {
    let d = Darboux::new(params)?;
    Ok((d.q().clone(), d.p()))
}

pub fn wave_p(params: &ParamVector, n: i64) -> Result<WaveFunction> {
    Darboux::new(params)?.wave_p(n)
}

pub fn wave_p_star(params: &ParamVector, n: i64) -> Result<WaveFunction> {
    Darboux::new(params)?.wave_p_star(n)
}

/// `L_{1,0} = Q_0 P_0` with `P_0 = 1 − (τ_{n−1}/τ_n) Λ^{-1}`, `Q_0 = Λ − τ_{n+1}/τ_n`, `τ_n = n + δ`.
pub fn darboux_one_step(delta: &Rational) -> Result<BandOperator> {
    if delta.is_integer() {
        let n = -delta.to_integer();
        if let Ok(n) = i64::try_from(&n) {
            if n.abs() <= Darboux::DEFAULT_WINDOW {
                return Err(Error::SingularTau(n));
            }
        }
    }
    let tau = Poly::new(Var::N, vec![delta.clone(), Rational::one()]);
    let prev = tau.shift(&int(-1));
    let next = tau.shift(&int(1));
    let p0 = BandOperator::new(-1, vec![-tau_ratio(&[&prev], &[&tau]), Coeff::one()]);
    let q0 = BandOperator::new(0, vec![-tau_ratio(&[&next], &[&tau]), Coeff::one()]);
    Ok(q0.compose(&p0))
}
