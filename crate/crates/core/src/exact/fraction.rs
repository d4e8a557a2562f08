use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Field, Poly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials over a field: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, Debug)]
pub struct Fraction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Fraction<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let var = if num.is_constant() { den.var() } else { num.var() };
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero_in(var)));
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading().cloned().expect("nonzero denominator");
        let inv = F::one() / lead;
        Ok(Fraction { num: num.scale(&inv).with_var(var), den: den.scale(&inv).with_var(var) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let var = p.var();
        Fraction { num: p, den: Poly::constant(var, F::one()) }
    }

    pub fn constant(var: Var, c: F) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Errors with [`Error::ZeroDenominator`] at a pole.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    /// `self(var + h)`.
    pub fn shift(&self, h: &F) -> Self {
        Fraction { num: self.num.shift(h), den: self.den.shift(h) }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }
}

impl<F: Field> PartialEq for Fraction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<'a, F: Field> Add<&'a Fraction<F>> for &'a Fraction<F> {
    type Output = Fraction<F>;
    fn add(self, rhs: &'a Fraction<F>) -> Fraction<F> {
        if self.den == rhs.den {
            return Fraction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        Fraction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den).unwrap()
    }
}

impl<'a, F: Field> Sub<&'a Fraction<F>> for &'a Fraction<F> {
    type Output = Fraction<F>;
    fn sub(self, rhs: &'a Fraction<F>) -> Fraction<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Field> Mul<&'a Fraction<F>> for &'a Fraction<F> {
    type Output = Fraction<F>;
    fn mul(self, rhs: &'a Fraction<F>) -> Fraction<F> {
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<F: Field> Neg for &Fraction<F> {
    type Output = Fraction<F>;
    fn neg(self) -> Fraction<F> {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl<F: Field> Zero for Fraction<F> {
    fn zero() -> Self {
        Fraction::from_poly(Poly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for Fraction<F> {
    fn one() -> Self {
        Fraction::from_poly(Poly::one())
    }
}

impl<F: Field> Add for Fraction<F> {
    type Output = Fraction<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for Fraction<F> {
    type Output = Fraction<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Mul for Fraction<F> {
    type Output = Fraction<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Field> Neg for Fraction<F> {
    type Output = Fraction<F>;
    fn neg(self) -> Self {
        -&self
    }
}

impl fmt::Display for Fraction<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(Var::N, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn reduces_common_factors() {
        // (n^2 - 1) / (2n - 2) = (n + 1)/2
        let f = Fraction::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numer(), &Poly::new(Var::N, vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn shift_and_eval() {
        // 1/(n + 1/2) at n = 0 after shifting by one: 1/(3/2)
        let f = Fraction::new(p(&[1]), Poly::new(Var::N, vec![rat(1, 2), int(1)])).unwrap();
        assert_eq!(f.shift(&int(1)).eval(&int(0)).unwrap(), rat(2, 3));
        assert_eq!(f.eval(&rat(-1, 2)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_arithmetic() {
        let a = Fraction::new(p(&[1]), p(&[0, 1])).unwrap(); // 1/n
        let b = Fraction::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(n+1)
        let d = &a - &b; // 1/(n(n+1))
        assert_eq!(d, Fraction::new(p(&[1]), p(&[0, 1, 1])).unwrap());
        assert_eq!(d.checked_div(&a).unwrap(), b);
    }
}
