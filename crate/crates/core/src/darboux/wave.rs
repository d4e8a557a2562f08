use std::fmt;

use crate::exact::{RationalFunction, Rational};

/// `p_n(x)` (or `p*_n(x)`) for one site, exact in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveFunction {
    pub n: i64,
    pub value: RationalFunction,
}

impl WaveFunction {
    pub fn eval_complex(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        self.value.eval_complex(x)
    }

    pub fn scale(&self, c: &Rational) -> WaveFunction {
        WaveFunction { n: self.n, value: self.value.scale(c) }
    }
}

impl fmt::Display for WaveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
