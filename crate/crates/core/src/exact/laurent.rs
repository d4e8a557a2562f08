use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, Var};
use super::rational::{to_f64, Rational};

/// Finite Laurent polynomial with exact rational coefficients.
///
/// Stored densely from the lowest exponent; both ends of `coeffs` are nonzero,
/// and the zero polynomial has no coefficients.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: Var,
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(var: Var, low: i64, coeffs: Vec<Rational>) -> Self {
        let mut out = LaurentPoly { var, low, coeffs };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, low: 0, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, 0, vec![c])
    }

    pub fn monomial(var: Var, c: Rational, exponent: i64) -> Self {
        Self::new(var, exponent, vec![c])
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero(var);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = &*slot + c;
        }
        Self::new(var, lo, coeffs)
    }

    pub fn from_poly(p: &Poly<Rational>) -> Self {
        Self::new(p.var(), 0, p.coeffs().to_vec())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        let idx = exponent - self.low;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { var: self.var, low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `var -> 1/var`.
    pub fn reflect(&self) -> Self {
        let Some(hi) = self.high_exponent() else {
            return self.clone();
        };
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        LaurentPoly { var: self.var, low: -hi, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.var, self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.var, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.terms().fold(Rational::zero(), |acc, (e, c)| {
            let pw = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc + c * pw
        })
    }

    /// Value at `x = 1`, the plain coefficient sum.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// Value at `x = -1`.
    pub fn eval_at_minus_one(&self) -> Rational {
        self.terms().fold(Rational::zero(), |a, (e, c)| if e.rem_euclid(2) == 0 { a + c } else { a - c })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let body = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c));
        body * x.powi(self.low as i32)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + to_f64(c));
        body * x.powi(self.low as i32)
    }

    /// Exact division by `var - root` when it divides, else `None`.
    pub fn div_linear(&self, root: &Rational) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        // synthetic division of the ordinary polynomial x^{-low} * self
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n.saturating_sub(1)];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return v.is_zero().then(|| Self::new(self.var, self.low, quot));
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Ordinary polynomial `var^{-low} * self` together with `low`.
    pub fn to_shifted_poly(&self) -> (i64, Poly<Rational>) {
        (self.low, Poly::new(self.var, self.coeffs.clone()))
    }

    pub fn coeff_strings(&self) -> Vec<(i64, String)> {
        self.terms().map(|(e, c)| (e, c.to_string())).collect()
    }

    fn binary(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        if self.is_zero() && other.is_zero() {
            return Self::zero(self.var);
        }
        let lo = [self.low_exponent(), other.low_exponent()].into_iter().flatten().min().unwrap();
        let hi = [self.high_exponent(), other.high_exponent()].into_iter().flatten().max().unwrap();
        let coeffs = (lo..=hi).map(|e| f(&self.coeff(e), &other.coeff(e))).collect();
        Self::new(self.var, lo, coeffs)
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.low == other.low && self.coeffs == other.coeffs
    }
}

impl Eq for LaurentPoly {}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.binary(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.binary(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero(self.var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.var, self.low + rhs.low, out)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { var: self.var, low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a} ")?;
            }
            write!(f, "{}", self.var)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
