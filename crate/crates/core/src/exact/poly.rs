use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Commutative ring with identity; every coefficient type used here satisfies it.
pub trait Ring:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + fmt::Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub trait Field: Ring + Div<Output = Self> {}

impl<T: Ring + Div<Output = T>> Field for T {}

/// Name of the indeterminate a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Var {
    #[default]
    T,
    N,
    W,
    J,
    X,
    /// The Darboux time `r_i`.
    R(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::N => f.write_str("n"),
            Var::W => f.write_str("w"),
            Var::J => f.write_str("j"),
            Var::X => f.write_str("x"),
            Var::R(i) => write!(f, "r{i}"),
        }
    }
}

/// `c * k` computed by doubling, for rings without an integer embedding.
pub fn times<R: Ring>(c: &R, mut k: u64) -> R {
    let mut acc = R::zero();
    let mut base = c.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc + base.clone();
        }
        k >>= 1;
        if k > 0 {
            base = base.clone() + base;
        }
    }
    acc
}

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Constants are compatible with every variable: mixing a constant with a
/// polynomial in `n` yields a polynomial in `n`. Two non-constant operands in
/// different variables are a [`Error::VariableMismatch`]; the checked methods
/// report it and the operator impls panic on it.
#[derive(Clone, Debug)]
pub struct Poly<R> {
    var: Var,
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(var: Var, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero_in(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: R) -> Self {
        Self::new(var, vec![c])
    }

    pub fn monomial(var: Var, c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    /// The polynomial consisting of the indeterminate itself.
    pub fn variable(var: Var) -> Self {
        Self::monomial(var, R::one(), 1)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| times(c, i as u64))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// `self(inner)`; the result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        let var = if inner.is_constant() { self.var } else { inner.var };
        let mut acc = Poly::zero_in(var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(var, c.clone());
        }
        acc.with_var(var)
    }

    /// `self(var + h)`.
    pub fn shift(&self, h: &R) -> Self {
        if h.is_zero() {
            return self.clone();
        }
        let inner = Poly::new(self.var, vec![h.clone(), R::one()]);
        self.compose(&inner)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.var, self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(self.var, R::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when only odd powers carry nonzero coefficients.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    fn unify(&self, other: &Self) -> Result<Var> {
        if self.is_constant() {
            Ok(other.var)
        } else if other.is_constant() || self.var == other.var {
            Ok(self.var)
        } else {
            Err(Error::VariableMismatch(self.var, other.var))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let var = self.unify(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::new(var, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let var = self.unify(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::new(var, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let var = self.unify(other)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(Self::zero_in(var));
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::new(var, out))
    }
}

impl<F: Field> Poly<F> {
    /// Quotient and remainder with `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let var = self.unify(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero_in(var), self.clone().with_var(var)));
        };
        let mut quot = vec![F::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = rem[shift + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * d.clone();
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(var, quot), Self::new(var, rem)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.coeffs.is_empty() => Some(q),
            _ => None,
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.coeffs.is_empty() {
            let (_, r) = a.div_rem(&b).expect("gcd operands share a variable");
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.is_constant() || self.var == other.var)
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero_in(Var::default())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(Var::default(), R::one())
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.checked_add(rhs).expect("polynomial variable mismatch")
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.checked_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        self.checked_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        &self + &rhs
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        &self - &rhs
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { var: self.var, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -self.clone()
    }
}

impl Poly<Rational> {
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    /// Coefficients as `"p/q"` strings, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// LaTeX rendering, ascending degree.
    pub fn to_latex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            match d {
                0 => out.push_str(&body),
                _ => {
                    if !a.is_one() {
                        out.push_str(&body);
                        out.push(' ');
                    }
                    out.push_str(&self.var.to_string());
                    if d > 1 {
                        out.push_str(&format!("^{{{d}}}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a} ")?;
                    }
                    write!(f, "{}", self.var)?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
