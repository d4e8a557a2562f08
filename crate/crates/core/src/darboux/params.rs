use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, rat, Rational};

/// Darboux data: `R` steps at the spectral end 0, `S` at the end −4, and the
/// times `r_1..r_M` (all later times are zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamVector {
    r_steps: usize,
    s_steps: usize,
    r: Vec<Rational>,
}

impl ParamVector {
    pub fn new(r_steps: usize, s_steps: usize, r: Vec<Rational>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidParams("at least r_1 must be given".into()));
        }
        Ok(ParamVector { r_steps, s_steps, r })
    }

    /// The undressed Laplacian.
    pub fn free() -> Self {
        ParamVector { r_steps: 0, s_steps: 0, r: vec![Rational::zero()] }
    }

    /// A single step at 0 with `τ(n) = n + δ`.
    pub fn one_step(delta: Rational) -> Self {
        ParamVector { r_steps: 1, s_steps: 0, r: vec![delta] }
    }

    /// `r_1 = α`, `r_2 = −β/4`, so that `β = Σ_{i≥2} (−2)^{i−1} i r_i`.
    pub fn from_alpha_beta(r_steps: usize, s_steps: usize, alpha: Rational, beta: Rational) -> Self {
        let r2 = -beta / int(4);
        ParamVector { r_steps, s_steps, r: vec![alpha, r2] }
    }

    /// A fixed, nondegenerate choice of `M = max(2(R+S), 1)` times.
    ///
    /// The values are small rationals with distinct denominators; callers
    /// still validate the window through [`crate::darboux::Darboux`].
    pub fn generic(r_steps: usize, s_steps: usize) -> Self {
        const POOL: [(i64, i64); 8] = [(1, 3), (2, 7), (-3, 11), (5, 13), (-1, 17), (4, 19), (-2, 23), (3, 29)];
        let count = (2 * (r_steps + s_steps)).max(1);
        let r = (0..count).map(|i| {
            let (p, q) = POOL[i % POOL.len()];
            rat(p, q * (1 + (i / POOL.len()) as i64))
        });
        ParamVector { r_steps, s_steps, r: r.collect() }
    }

    pub fn r_steps(&self) -> usize {
        self.r_steps
    }

    pub fn s_steps(&self) -> usize {
        self.s_steps
    }

    /// Total number of Darboux steps, the order of `Q` and `P`.
    pub fn order(&self) -> usize {
        self.r_steps + self.s_steps
    }

    /// `max(R, S)`.
    pub fn big_t(&self) -> usize {
        self.r_steps.max(self.s_steps)
    }

    pub fn times(&self) -> &[Rational] {
        &self.r
    }

    /// `r_i`, 1-based; zero past the end.
    pub fn r(&self, i: usize) -> Rational {
        assert!(i >= 1, "times are indexed from 1");
        self.r.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn r1(&self) -> &Rational {
        &self.r[0]
    }

    /// `β = Σ_{i≥2} (−2)^{i−1} i r_i`.
    pub fn beta(&self) -> Rational {
        let mut acc = Rational::zero();
        let mut pow = int(-2);
        for i in 2..=self.r.len() {
            acc += &pow * int(i as i64) * &self.r[i - 1];
            pow *= int(-2);
        }
        acc
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.r.iter().map(format_rational).collect();
        write!(f, "R={} S={} r=[{}]", self.r_steps, self.s_steps, r.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_beta_roundtrip() {
        let p = ParamVector::from_alpha_beta(1, 1, rat(1, 4), int(1));
        assert_eq!(p.r1(), &rat(1, 4));
        assert_eq!(p.beta(), int(1));
        assert_eq!(p.r(7), int(0));
    }

    #[test]
    fn generic_has_expected_length() {
        assert_eq!(ParamVector::generic(2, 1).times().len(), 6);
        assert_eq!(ParamVector::generic(0, 0).times().len(), 1);
        assert!(ParamVector::new(1, 0, vec![]).is_err());
    }
}
