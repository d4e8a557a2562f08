use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::alpha::alpha_table;
use super::numeric::bessel_row;
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, Poly, Rational, Var};

/// Which argument the Bessel functions of a combination take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BesselArg {
    /// `I_j(t)`
    T,
    /// `I_j(2t)`
    TwoT,
}

impl BesselArg {
    /// `θ` as a multiple of `t`.
    pub fn factor(self) -> u32 {
        match self {
            BesselArg::T => 1,
            BesselArg::TwoT => 2,
        }
    }
}

/// `Σ_j c_j(t) I_j(θ)` with polynomial coefficients and finite support.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselCombo {
    arg: BesselArg,
    terms: BTreeMap<i64, Poly<Rational>>,
}

impl BesselCombo {
    pub fn new(arg: BesselArg) -> Self {
        BesselCombo { arg, terms: BTreeMap::new() }
    }

    pub fn single(arg: BesselArg, order: i64, coeff: Poly<Rational>) -> Self {
        let mut c = Self::new(arg);
        c.add_term(order, &coeff);
        c
    }

    pub fn arg(&self) -> BesselArg {
        self.arg
    }

    pub fn add_term(&mut self, order: i64, coeff: &Poly<Rational>) {
        let slot = self.terms.entry(order).or_insert_with(|| Poly::zero_in(Var::T));
        *slot = (&*slot + coeff).with_var(Var::T);
        if slot.is_zero() {
            self.terms.remove(&order);
        }
    }

    /// Nonzero terms in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly<Rational>)> + '_ {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    pub fn coeff(&self, order: i64) -> Poly<Rational> {
        self.terms.get(&order).cloned().unwrap_or_else(|| Poly::zero_in(Var::T))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// Largest `t`-degree among the coefficients.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arg != other.arg {
            return Err(Error::InternalInconsistency("adding Bessel combinations with different arguments".into()));
        }
        let mut out = self.clone();
        for (j, c) in other.terms() {
            out.add_term(j, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.arg);
        for (j, p) in self.terms() {
            out.add_term(j, &p.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, p: &Poly<Rational>) -> Self {
        let mut out = Self::new(self.arg);
        for (j, c) in self.terms() {
            out.add_term(j, &(c * p).with_var(Var::T));
        }
        out
    }

    /// Rewrites `I_{−j}` as `I_j`, so all orders are nonnegative.
    pub fn folded(&self) -> Self {
        let mut out = Self::new(self.arg);
        for (j, c) in self.terms() {
            out.add_term(j.abs(), c);
        }
        out
    }

    /// Coefficients `(a, b)` with `self = a(t) I_0(θ) + b(t) I_1(θ)`, using
    /// `I_{j+1} = I_{j−1} − (2j/θ) I_j`. Two combinations are equal as
    /// functions iff their canonical forms agree.
    pub fn canonical(&self) -> (LaurentPoly, LaurentPoly) {
        let top = self.terms.keys().map(|j| j.unsigned_abs()).max().unwrap_or(0) as usize;
        let scale = int(2) / int(self.arg.factor() as i64);
        let mut basis: Vec<(LaurentPoly, LaurentPoly)> = vec![
            (LaurentPoly::constant(Var::T, Rational::one()), LaurentPoly::zero(Var::T)),
            (LaurentPoly::zero(Var::T), LaurentPoly::constant(Var::T, Rational::one())),
        ];
        for j in 1..top {
            let c = scale.clone() * int(j as i64);
            let (a0, b0) = &basis[j - 1];
            let (a1, b1) = &basis[j];
            let next = (a0 - &a1.shift(-1).scale(&c), b0 - &b1.shift(-1).scale(&c));
            basis.push(next);
        }
        let mut a = LaurentPoly::zero(Var::T);
        let mut b = LaurentPoly::zero(Var::T);
        for (j, c) in self.terms() {
            let lc = LaurentPoly::from_poly(&c.clone().with_var(Var::T));
            let (ba, bb) = &basis[j.unsigned_abs() as usize];
            a = &a + &(&lc * ba);
            b = &b + &(&lc * bb);
        }
        (a, b)
    }

    /// `e^{−θ} Σ_j c_j(t) I_j(θ)` at `θ = factor · t`.
    pub fn eval_scaled(&self, t: f64) -> Result<f64> {
        let Some(_) = self.support() else {
            return Ok(0.0);
        };
        let kmax = self.terms.keys().map(|j| j.unsigned_abs()).max().unwrap() as usize;
        let row = bessel_row(self.arg.factor() as f64 * t, kmax)?;
        Ok(self.terms().map(|(j, c)| c.eval_f64(t) * row.scaled(j)).sum())
    }
}

impl fmt::Display for BesselCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = match self.arg {
            BesselArg::T => "t",
            BesselArg::TwoT => "2t",
        };
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(j, c)| {
                if c == &Poly::constant(Var::T, Rational::one()) {
                    format!("I_{j}({arg})")
                } else if c.coeffs().iter().filter(|x| !x.is_zero()).count() == 1 {
                    format!("{c} * I_{j}({arg})")
                } else {
                    format!("({c}) * I_{j}({arg})")
                }
            })
            .collect();
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

/// `p(θ) → p(2t)`.
fn double_argument(p: &Poly<Rational>) -> Poly<Rational> {
    let mut pow = Rational::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &pow;
            pow *= int(2);
            v
        })
        .collect();
    Poly::new(Var::T, coeffs)
}

/// `Σ_{j > k, j ≡ k+1 (mod 2)} q(j) I_j(θ)` as a finite combination.
///
/// Each monomial `j^{2n+1}` contributes `Σ_s α^n_{s−k}(θ) I_s(θ)`.
pub fn tail_resum(q: &Poly<Rational>, k: i64, arg: BesselArg) -> Result<BesselCombo> {
    if !q.is_odd() {
        return Err(Error::NotOddPolynomial);
    }
    let mut out = BesselCombo::new(arg);
    let Some(deg) = q.degree() else {
        return Ok(out);
    };
    let table = alpha_table((deg - 1) / 2);
    for (e, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let n = (e - 1) / 2;
        for d in -(2 * n as i64)..=(2 * n as i64) {
            let mut alpha = table.get(n, d).scale(c);
            if arg == BesselArg::TwoT {
                alpha = double_argument(&alpha);
            }
            out.add_term(k + d, &alpha);
        }
    }
    Ok(out)
}
