use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::rational::Rational;
use super::rational_function::RationalFunction;
use crate::error::{Error, Result};

/// Leading segment of a Laurent expansion at the origin.
///
/// Holds `c_k` for `k in [first, first + len)`; everything below `first`
/// is known to vanish, everything at or beyond `first + len` is unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    first: i64,
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    pub fn new(first: i64, coeffs: Vec<Rational>) -> Self {
        LaurentSeries { first, coeffs }
    }

    pub fn first_exponent(&self) -> i64 {
        self.first
    }

    /// One past the last certified exponent.
    pub fn order(&self) -> i64 {
        self.first + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: i64) -> Result<Rational> {
        if k < self.first {
            return Ok(Rational::zero());
        }
        self.coeffs
            .get((k - self.first) as usize)
            .cloned()
            .ok_or(Error::OutOfRange { k, first: self.first, end: self.order() })
    }

    /// Residue of `f dx` at the origin.
    pub fn residue(&self) -> Result<Rational> {
        self.coefficient(-1)
    }
}

/// First `count` Laurent coefficients of `f` at `x = 0`.
pub fn series_at_zero(f: &RationalFunction, count: usize) -> Result<LaurentSeries> {
    let num = f.numer();
    let den = f.denom();
    let (Some(num_low), Some(den_low)) = (num.low_exponent(), den.low_exponent()) else {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        return Ok(LaurentSeries::new(0, vec![Rational::zero(); count]));
    };
    let d0 = den.coeff(den_low);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    let den_high = den.high_exponent().unwrap() - den_low;
    for k in 0..count as i64 {
        let mut acc = num.coeff(num_low + k);
        for i in 1..=k.min(den_high) {
            let di = den.coeff(den_low + i);
            if !di.is_zero() {
                acc -= di * &out[(k - i) as usize];
            }
        }
        out.push(acc / &d0);
    }
    Ok(LaurentSeries::new(num_low - den_low, out))
}

/// Coefficient of `x^k` in a finite Laurent polynomial; never out of range.
pub fn coefficient(f: &LaurentPoly, k: i64) -> Rational {
    f.coeff(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;
    use crate::exact::rational::int;

    fn lp(low: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(Var::X, low, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(lp(0, &[1]), lp(0, &[1, -1])).unwrap();
        let s = series_at_zero(&f, 3).unwrap();
        assert_eq!(s.first_exponent(), 0);
        assert_eq!(s.coeffs(), &[int(1), int(1), int(1)]);
    }

    #[test]
    fn cubic_over_quadratic() {
        // x^3 / (x^2 - 1) = -x^3 - x^5 - ...
        let f = RationalFunction::new(lp(3, &[1]), lp(0, &[-1, 0, 1])).unwrap();
        let s = series_at_zero(&f, 2).unwrap();
        assert_eq!(s.first_exponent(), 3);
        assert_eq!(s.coeffs(), &[int(-1), int(0)]);
    }

    #[test]
    fn residue_of_simple_pole() {
        // 1 / (x (1 - x))
        let f = RationalFunction::new(lp(0, &[1]), lp(1, &[1, -1])).unwrap();
        let s = series_at_zero(&f, 4).unwrap();
        assert_eq!(s.residue().unwrap(), int(1));
        assert_eq!(s.coefficient(-5).unwrap(), int(0));
        assert!(matches!(s.coefficient(3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn laurent_coefficient() {
        assert_eq!(coefficient(&lp(-1, &[1, 2]), -1), int(1));
        assert_eq!(coefficient(&lp(0, &[1, 1]).pow(2), 1), int(2));
    }
}
