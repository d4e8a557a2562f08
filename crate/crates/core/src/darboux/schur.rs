use std::ops::Mul;

use num_traits::{One, Zero};

use super::params::ParamVector;
use crate::exact::{int, Poly, Rational, Var};

/// Polynomial in the symbolic time `r_1`.
pub type RPoly = Poly<Rational>;
/// Polynomial in `n` whose coefficients are polynomials in `r_1`.
pub type NPoly = Poly<RPoly>;

/// Which point the Schur functional is evaluated at: `z = 0` or `z = −2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn sign(self) -> i8 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

/// `poly(n) · ((−1)^n c)^k` with `c = exp(Σ (−2)^i r_i)` kept formal.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolynomial {
    poly: NPoly,
    weight: i32,
}

impl QuasiPolynomial {
    pub fn new(poly: NPoly, weight: i32) -> Self {
        QuasiPolynomial { poly, weight }
    }

    pub fn polynomial(&self) -> &NPoly {
        &self.poly
    }

    /// True when a `(−1)^n` factor is present.
    pub fn has_character(&self) -> bool {
        self.weight % 2 != 0
    }

    /// Power of the formal constant `c`.
    pub fn scale_power(&self) -> i32 {
        self.weight
    }

    /// Polynomial part with `r_1` fixed.
    pub fn substitute(&self, r1: &Rational) -> Poly<Rational> {
        substitute_r1(&self.poly, r1)
    }
}

impl Mul for &QuasiPolynomial {
    type Output = QuasiPolynomial;
    fn mul(self, rhs: &QuasiPolynomial) -> QuasiPolynomial {
        QuasiPolynomial { poly: &self.poly * &rhs.poly, weight: self.weight + rhs.weight }
    }
}

pub fn substitute_r1(p: &NPoly, r1: &Rational) -> Poly<Rational> {
    p.map(|c| c.eval(r1)).with_var(Var::N)
}

pub fn r1_derivative(p: &NPoly) -> NPoly {
    p.map(|c| c.derivative()).with_var(Var::N)
}

pub(crate) fn lift(p: &Poly<Rational>) -> NPoly {
    p.map(|c| RPoly::constant(Var::R(1), c.clone())).with_var(Var::N)
}

fn rconst(c: Rational) -> RPoly {
    RPoly::constant(Var::R(1), c)
}

/// `binom(n, a)` as a polynomial in `n`.
fn binomial_in_n(a: usize) -> Poly<Rational> {
    let mut acc = Poly::constant(Var::N, Rational::one());
    for i in 0..a {
        let factor = Poly::new(Var::N, vec![int(-(i as i64)), Rational::one()]);
        acc = &acc * &factor;
    }
    let fact = (1..=a as i64).fold(Rational::one(), |f, i| f * int(i));
    acc.scale(&fact.recip())
}

fn binomial(i: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, l| acc * int((i - l) as i64) / int((l + 1) as i64))
}

/// Coefficients `ρ_k` of `Σ r_i (z − z_0)^i` re-expanded around the evaluation point.
fn shifted_times(eps: Epsilon, params: &ParamVector) -> Vec<RPoly> {
    let m = params.times().len();
    let r1 = RPoly::variable(Var::R(1));
    let mut rho = vec![RPoly::zero(); m + 1];
    match eps {
        Epsilon::Plus => {
            rho[1] = r1;
            for (k, slot) in rho.iter_mut().enumerate().skip(2) {
                *slot = rconst(params.r(k));
            }
        }
        Epsilon::Minus => {
            // ρ_k = Σ_{i≥k} r_i binom(i,k) (−2)^{i−k}; only ρ_1 sees r_1
            for (k, slot) in rho.iter_mut().enumerate().skip(1) {
                let mut acc = Rational::zero();
                let mut pow = Rational::one();
                for i in k..=m {
                    if i > 1 {
                        acc += params.r(i) * binomial(i, k) * &pow;
                    }
                    pow *= int(-2);
                }
                *slot = rconst(acc);
            }
            rho[1] = &rho[1] + &r1;
        }
    }
    rho
}

/// Taylor coefficients of `exp(Σ ρ_k h^k)` up to `h^count−1`.
fn exp_coefficients(rho: &[RPoly], count: usize) -> Vec<RPoly> {
    let mut e = vec![RPoly::one()];
    for k in 1..count {
        let mut acc = RPoly::zero();
        for mm in 1..=k.min(rho.len() - 1) {
            acc = &acc + &(&rho[mm] * &e[k - mm]).scale(&int(mm as i64));
        }
        e.push(acc.scale(&int(k as i64).recip()));
    }
    e
}

/// `S^ε_j(n; r)`, the `j`-th Taylor coefficient of `(1+z)^n exp(Σ r_i z^i)` at `z = ε − 1`.
pub fn schur_component(eps: Epsilon, j: usize, params: &ParamVector) -> QuasiPolynomial {
    let e = exp_coefficients(&shifted_times(eps, params), j + 1);
    let mut acc = NPoly::zero_in(Var::N);
    for a in 0..=j {
        let mut c = lift(&binomial_in_n(a));
        if eps == Epsilon::Minus && a % 2 == 1 {
            c = -c;
        }
        acc = &acc + &(&c * &NPoly::constant(Var::N, e[j - a].clone()));
    }
    let weight = if eps == Epsilon::Minus { 1 } else { 0 };
    QuasiPolynomial::new(acc.with_var(Var::N), weight)
}

fn shift_n(p: &NPoly, h: i64) -> NPoly {
    p.shift(&rconst(int(h)))
}

/// `φ_j(n) = S^1_{2j−1}(n + j − 1)`.
pub fn phi(j: usize, params: &ParamVector) -> QuasiPolynomial {
    assert!(j >= 1);
    let s = schur_component(Epsilon::Plus, 2 * j - 1, params);
    QuasiPolynomial::new(shift_n(s.polynomial(), j as i64 - 1), 0)
}

/// `ψ_j(n) = S^{−1}_{2j−1}(n + j − 1)`; the shift's `(−1)^{j−1}` is folded into
/// the polynomial part so the character is exactly `(−1)^n c`.
pub fn psi(j: usize, params: &ParamVector) -> QuasiPolynomial {
    assert!(j >= 1);
    let s = schur_component(Epsilon::Minus, 2 * j - 1, params);
    let mut poly = shift_n(s.polynomial(), j as i64 - 1);
    if j % 2 == 0 {
        poly = -poly;
    }
    QuasiPolynomial::new(poly, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn npoly(coeffs: &[RPoly]) -> NPoly {
        NPoly::new(Var::N, coeffs.to_vec())
    }

    #[test]
    fn zeroth_component_is_one() {
        let p = ParamVector::generic(1, 1);
        let s = schur_component(Epsilon::Plus, 0, &p);
        assert_eq!(s.polynomial(), &NPoly::one());
        assert!(!s.has_character());
    }

    #[test]
    fn first_components() {
        let p = ParamVector::new(0, 1, vec![rat(1, 3), rat(2, 5), rat(-1, 7)]).unwrap();
        let r1 = RPoly::variable(Var::R(1));
        // n + r_1
        let s = schur_component(Epsilon::Plus, 1, &p);
        assert_eq!(s.polynomial(), &npoly(&[r1.clone(), RPoly::one()]));
        // −n + Σ (−2)^{i−1} i r_i
        let m = schur_component(Epsilon::Minus, 1, &p);
        let tail = rat(2, 5) * int(-2) * int(2) + rat(-1, 7) * int(4) * int(3);
        assert_eq!(m.polynomial(), &npoly(&[&r1 + &rconst(tail), -RPoly::one()]));
        assert!(m.has_character());
        assert_eq!(m.scale_power(), 1);
    }

    #[test]
    fn matches_direct_taylor_expansion() {
        // oracle: expand (1+z)^n exp(r_1 z + r_2 z^2) at z = 0 by hand for j = 2:
        // binom(n,2) + n r_1 + r_1^2/2 + r_2
        let p = ParamVector::new(1, 0, vec![rat(3, 2), rat(-1, 3)]).unwrap();
        let s = schur_component(Epsilon::Plus, 2, &p).substitute(&rat(3, 2));
        for n in -4..5 {
            let nn = int(n);
            let expected = &nn * (&nn - int(1)) / int(2) + &nn * rat(3, 2) + rat(9, 8) - rat(1, 3);
            assert_eq!(s.eval(&nn), expected);
        }
    }

    #[test]
    fn minus_component_matches_alternating_expansion() {
        // (1+z)^n at z = −2 + h is (−1)^n (1 − h)^n; with exp(r_1 z) it adds e^{−2r_1} e^{r_1 h}.
        // coefficient of h^2: binom(n,2) − n r_1 + r_1^2/2
        let p = ParamVector::new(0, 1, vec![rat(5, 7)]).unwrap();
        let s = schur_component(Epsilon::Minus, 2, &p).substitute(&rat(5, 7));
        for n in -3..4 {
            let nn = int(n);
            let r = rat(5, 7);
            let expected = &nn * (&nn - int(1)) / int(2) - &nn * &r + &r * &r / int(2);
            assert_eq!(s.eval(&nn), expected);
        }
    }

    #[test]
    fn quasi_product_tracks_weight() {
        let p = ParamVector::generic(0, 1);
        let a = psi(1, &p);
        let sq = &a * &a;
        assert!(!sq.has_character());
        assert_eq!(sq.scale_power(), 2);
    }
}
