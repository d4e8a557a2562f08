use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::Var;
use super::rational::Rational;
use super::series::{series_at_zero, LaurentSeries};
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials in `x`.
///
/// Normal form: the denominator is an ordinary polynomial with nonzero
/// constant term (all powers of `x` live in the numerator), common factors
/// `x - 1` and `x + 1` are cancelled, and the denominator is monic.
/// Other common factors may survive; equality is decided by cross-multiplying.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut out = RationalFunction { num, den };
        out.normalize();
        Ok(out)
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        let var = num.var();
        RationalFunction { num, den: LaurentPoly::constant(var, Rational::one()) }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_laurent(LaurentPoly::zero(var))
    }

    fn normalize(&mut self) {
        let var = self.num.var();
        if self.num.is_zero() {
            self.den = LaurentPoly::constant(var, Rational::one());
            return;
        }
        let shift = self.den.low_exponent().unwrap();
        self.num = self.num.shift(-shift);
        self.den = self.den.shift(-shift);
        for root in [Rational::one(), -Rational::one()] {
            loop {
                let den_vanishes = if root.is_one() {
                    self.den.eval_at_one().is_zero()
                } else {
                    self.den.eval_at_minus_one().is_zero()
                };
                if !den_vanishes {
                    break;
                }
                match (self.num.div_linear(&root), self.den.div_linear(&root)) {
                    (Some(n), Some(d)) => {
                        self.num = n;
                        self.den = d;
                    }
                    _ => break,
                }
            }
        }
        let lead = self.den.coeff(self.den.high_exponent().unwrap());
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some` when the denominator is constant.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        (self.den.high_exponent() == Some(0)).then(|| self.num.scale(&self.den.coeff(0).recip()))
    }

    /// Substitutes `x -> 1/x`.
    pub fn reflect(&self) -> Self {
        Self::new(self.num.reflect(), self.den.reflect()).expect("reflection keeps denominator nonzero")
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        RationalFunction { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_laurent(&self, f: &LaurentPoly) -> Self {
        Self::new(&self.num * f, self.den.clone()).unwrap()
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.num.eval_complex(x) / self.den.eval_complex(x)
    }

    pub fn series_at_zero(&self, count: usize) -> Result<LaurentSeries> {
        series_at_zero(self, count)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.high_exponent() == Some(0) && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn lp(low: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(Var::X, low, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn cancels_x_and_unit_root_factors() {
        // x (x-1)(x+1) / (x^2 (x-1)) = (x+1)/x
        let num = &lp(1, &[1]) * &lp(0, &[-1, 0, 1]);
        let den = &lp(2, &[1]) * &lp(0, &[-1, 1]);
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f.denom(), &lp(0, &[1]));
        assert_eq!(f.numer(), &lp(-1, &[1, 1]));
        assert_eq!(f.as_laurent().unwrap(), lp(-1, &[1, 1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::new(lp(0, &[1]), LaurentPoly::zero(Var::X)).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = RationalFunction::new(lp(0, &[1]), lp(0, &[-1, 1])).unwrap(); // 1/(x-1)
        let b = RationalFunction::new(lp(0, &[1]), lp(0, &[1, 1])).unwrap(); // 1/(x+1)
        let sum = &a + &b; // 2x/(x^2-1)
        assert_eq!(sum, RationalFunction::new(lp(1, &[2]), lp(0, &[-1, 0, 1])).unwrap());
        let diff = &sum - &a;
        assert_eq!(diff, b);
        assert_eq!(&a * &b, RationalFunction::new(lp(0, &[1]), lp(0, &[-1, 0, 1])).unwrap());
        // reflection: 1/(1/x - 1) = x/(1-x)
        assert_eq!(a.reflect(), RationalFunction::new(lp(1, &[1]), lp(0, &[1, -1])).unwrap());
    }
}
