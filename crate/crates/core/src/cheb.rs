//! The ring `A_V = C[w, v]` of Laurent polynomials in `x`: Chebyshev
//! polynomials of the second kind, reduction to `A(w) + B(w)x`, the Lagrange
//! vanishing sums and constructive membership certificates.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, Poly, Rational, Var};

/// `U_k(w)` for `k ≥ −1`, from `2w U_k = U_{k+1} + U_{k−1}`.
pub fn chebyshev_u(k: i64) -> Poly<Rational> {
    assert!(k >= -1, "U_k is defined for k ≥ -1");
    let two_w = Poly::new(Var::W, vec![int(0), int(2)]);
    let mut prev = Poly::zero_in(Var::W);
    let mut cur = Poly::constant(Var::W, Rational::one());
    if k == -1 {
        return prev;
    }
    for _ in 0..k {
        let next = &(&two_w * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `U_n(w) = (n+1) Σ_k 2^k/(2k+1)! Π_{j=1}^k ((n+1)^2 − j^2) (w−1)^k`.
pub fn chebyshev_u_hypergeometric(n: u32) -> Poly<Rational> {
    let w_minus_one = Poly::new(Var::W, vec![int(-1), int(1)]);
    let n1 = int(n as i64 + 1);
    let mut acc = Poly::zero_in(Var::W);
    let mut power = Poly::constant(Var::W, Rational::one());
    let mut weight = Rational::one(); // 2^k/(2k+1)! · Π
    for k in 0..=n as i64 {
        if k > 0 {
            weight = weight * int(2) * (&n1 * &n1 - int(k * k)) / int((2 * k) * (2 * k + 1));
            power = &power * &w_minus_one;
        }
        acc = &acc + &power.scale(&weight);
    }
    acc.scale(&n1)
}

/// `(A, B)` with `f(x) = A(w) + B(w) x` under `w = (x + 1/x)/2`.
///
/// Positive powers use `x^k = U_{k−1} x − U_{k−2}`; negative powers follow by
/// `x → 1/x`, which fixes `w`: `x^{−k} = U_k − U_{k−1} x`.
pub fn reduce_to_wx(f: &LaurentPoly) -> (Poly<Rational>, Poly<Rational>) {
    let mut a = Poly::zero_in(Var::W);
    let mut b = Poly::zero_in(Var::W);
    for (e, c) in f.terms() {
        if e >= 1 {
            a = &a - &chebyshev_u(e - 2).scale(c);
            b = &b + &chebyshev_u(e - 1).scale(c);
        } else {
            let k = -e;
            a = &a + &chebyshev_u(k).scale(c);
            b = &b - &chebyshev_u(k - 1).scale(c);
        }
    }
    (a.with_var(Var::W), b.with_var(Var::W))
}

fn lagrange_weights(nodes: &[Rational]) -> Vec<Rational> {
    nodes
        .iter()
        .enumerate()
        .map(|(k, sk)| {
            let sq = sk * sk;
            let prod = nodes
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .fold(sk.clone(), |acc, (_, sj)| acc * (&sq - sj * sj));
            prod.recip()
        })
        .collect()
}

/// Value of `Σ_k q(s_k) / (s_k Π_{j≠k}(s_k² − s_j²))`.
///
/// `within_contract` records whether the vanishing hypotheses held (odd `q`,
/// degree at most `2T − 1`, positive nodes); outside them the sum is
/// generally nonzero and is returned as computed.
#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeSum {
    pub value: Rational,
    pub within_contract: bool,
}

pub fn lagrange_vanishing_sum(q: &Poly<Rational>, nodes: &[Rational]) -> Result<LagrangeSum> {
    let distinct: BTreeSet<&Rational> = nodes.iter().collect();
    if distinct.len() != nodes.len() || nodes.is_empty() {
        return Err(Error::NodeCollision(format!("{} nodes, {} distinct", nodes.len(), distinct.len())));
    }
    let squares: BTreeSet<Rational> = nodes.iter().map(|s| s * s).collect();
    if squares.len() != nodes.len() || nodes.iter().any(|s| s.is_zero()) {
        return Err(Error::NodeCollision("nodes must have distinct nonzero squares".into()));
    }
    let t = nodes.len() - 1;
    let degree_ok = q.degree().map_or(true, |d| d < 2 * t);
    let within_contract = q.is_odd() && degree_ok && nodes.iter().all(|s| s.is_positive());
    let value = nodes.iter().zip(lagrange_weights(nodes)).fold(Rational::zero(), |acc, (s, w)| acc + q.eval(s) * w);
    Ok(LagrangeSum { value, within_contract })
}

/// Distinct nonzero integers `s_0..s_T` with `s_j + s_k ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    nodes: Vec<i64>,
    same_parity: bool,
}

impl NodeSet {
    pub fn new(nodes: Vec<i64>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::NodeCollision("empty node set".into()));
        }
        if nodes.contains(&0) {
            return Err(Error::NodeCollision("node 0".into()));
        }
        for (i, a) in nodes.iter().enumerate() {
            for b in &nodes[i + 1..] {
                if a == b || a + b == 0 {
                    return Err(Error::NodeCollision(format!("nodes {a} and {b}")));
                }
            }
        }
        let same_parity = nodes.iter().all(|s| (s - nodes[0]).rem_euclid(2) == 0);
        Ok(NodeSet { nodes, same_parity })
    }

    pub fn nodes(&self) -> &[i64] {
        &self.nodes
    }

    /// `T`, one less than the number of nodes.
    pub fn t(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn same_parity(&self) -> bool {
        self.same_parity
    }

    /// `1/(s_k Π_{j≠k}(s_k² − s_j²))`.
    pub fn weights(&self) -> Vec<Rational> {
        lagrange_weights(&self.nodes.iter().map(|&s| int(s)).collect::<Vec<_>>())
    }
}

/// `Q_{s_0..s_T}(w) = Σ_k U_{s_k−1}(w) / (s_k Π_{j≠k}(s_k² − s_j²))`, checked
/// for divisibility by `(w−1)^T`, and by `(w²−1)^T` for a common parity.
pub fn interp_q(nodes: &NodeSet) -> Result<Poly<Rational>> {
    if nodes.nodes.iter().any(|&s| s < 0) {
        return Err(Error::InvalidParams("interpolation nodes must be positive".into()));
    }
    let q = nodes
        .nodes
        .iter()
        .zip(nodes.weights())
        .fold(Poly::zero_in(Var::W), |acc, (&s, w)| &acc + &chebyshev_u(s - 1).scale(&w))
        .with_var(Var::W);
    let t = nodes.t() as u32;
    let divisor = if nodes.same_parity {
        Poly::new(Var::W, vec![int(-1), int(0), int(1)]).pow(t)
    } else {
        Poly::new(Var::W, vec![int(-1), int(1)]).pow(t)
    };
    let (_, rem) = q.div_rem(&divisor)?;
    if !rem.is_zero() {
        return Err(Error::InternalInconsistency(format!("Q for nodes {:?} is not divisible by {divisor}", nodes.nodes)));
    }
    Ok(q)
}

/// `F(x) = Σ_k x^{s_k} / (s_k Π_{j≠k}(s_k² − s_j²))`.
pub fn f_build(nodes: &NodeSet) -> LaurentPoly {
    LaurentPoly::from_terms(Var::X, nodes.nodes.iter().copied().zip(nodes.weights()))
}

/// `f = A(w) + B(w) v` with the generators `w`, `v` of `A_V`.
#[derive(Clone, Debug, PartialEq)]
pub struct WVCertificate {
    pub a: Poly<Rational>,
    pub b: Poly<Rational>,
    pub r_steps: usize,
    pub s_steps: usize,
}

/// `w = (x + 1/x)/2`.
pub fn generator_w() -> LaurentPoly {
    LaurentPoly::new(Var::X, -1, vec![Rational::new(1.into(), 2.into()), int(0), Rational::new(1.into(), 2.into())])
}

/// `v = (x−1)^{2R+1} (x+1)^{2S+1} / (2^{R+S+1} x^{R+S+1})`.
pub fn generator_v(r_steps: usize, s_steps: usize) -> LaurentPoly {
    let k = (r_steps + s_steps + 1) as i64;
    let num = &LaurentPoly::new(Var::X, 0, vec![int(-1), int(1)]).pow(2 * r_steps as u32 + 1)
        * &LaurentPoly::new(Var::X, 0, vec![int(1), int(1)]).pow(2 * s_steps as u32 + 1);
    num.shift(-k).scale(&Rational::new(1.into(), num_bigint::BigInt::from(2).pow(k as u32)))
}

/// `p(w)` with `w = (x + 1/x)/2` substituted.
pub fn substitute_w(p: &Poly<Rational>) -> LaurentPoly {
    let w = generator_w();
    p.coeffs()
        .iter()
        .rev()
        .fold(LaurentPoly::zero(Var::X), |acc, c| &(&acc * &w) + &LaurentPoly::constant(Var::X, c.clone()))
}

impl WVCertificate {
    /// The Laurent polynomial the certificate represents.
    pub fn to_laurent(&self) -> LaurentPoly {
        &substitute_w(&self.a) + &(&substitute_w(&self.b) * &generator_v(self.r_steps, self.s_steps))
    }

    pub fn verify(&self, f: &LaurentPoly) -> bool {
        &self.to_laurent() == f
    }

    pub fn to_json(&self) -> Value {
        json!({ "A": self.a.coeff_strings(), "B": self.b.coeff_strings(), "R": self.r_steps, "S": self.s_steps })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    Member(WVCertificate),
    NotMember,
}

/// Decides `f ∈ C[w, v]` and exhibits `(A', B')` when it is.
///
/// With `f = A + B x`, membership requires `(w−1)^R (w+1)^S | B`; then
/// `B x = (B/D)(v + w D)` for `D = (w−1)^R (w+1)^S`.
pub fn av_membership(f: &LaurentPoly, r_steps: usize, s_steps: usize) -> Result<Membership> {
    let (a, b) = reduce_to_wx(f);
    let d = &Poly::new(Var::W, vec![int(-1), int(1)]).pow(r_steps as u32)
        * &Poly::new(Var::W, vec![int(1), int(1)]).pow(s_steps as u32);
    let (quot, rem) = b.div_rem(&d)?;
    if !rem.is_zero() {
        return Ok(Membership::NotMember);
    }
    let w = Poly::variable(Var::W);
    let cert = WVCertificate { a: (&a + &(&w * &b)).with_var(Var::W), b: quot.with_var(Var::W), r_steps, s_steps };
    if !cert.verify(f) {
        return Err(Error::InternalInconsistency("membership certificate fails substitution".into()));
    }
    Ok(Membership::Member(cert))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::exact::rat;

    fn wpoly(cs: &[Rational]) -> Poly<Rational> {
        Poly::new(Var::W, cs.to_vec())
    }

    #[test]
    fn low_chebyshev() {
        assert_eq!(chebyshev_u(-1), Poly::zero_in(Var::W));
        assert_eq!(chebyshev_u(1), wpoly(&[int(0), int(2)]));
        assert_eq!(chebyshev_u(2), wpoly(&[int(-1), int(0), int(4)]));
        for n in 0..12 {
            assert_eq!(chebyshev_u(n as i64), chebyshev_u_hypergeometric(n), "n = {n}");
            let u = chebyshev_u(n as i64);
            assert!(if n % 2 == 0 { u.is_even() } else { u.is_odd() });
        }
    }

    fn check_reduction(f: &LaurentPoly) {
        let (a, b) = reduce_to_wx(f);
        for x in [rat(3, 2), rat(-5, 7), rat(2, 9)] {
            let w = (&x + x.recip()) / int(2);
            assert_eq!(a.eval(&w) + b.eval(&w) * &x, f.eval(&x));
        }
    }

    #[test]
    fn reduction_examples() {
        let (a, b) = reduce_to_wx(&LaurentPoly::monomial(Var::X, int(1), 2));
        assert_eq!((a, b), (wpoly(&[int(-1)]), wpoly(&[int(0), int(2)])));
        let (a, b) = reduce_to_wx(&LaurentPoly::new(Var::X, -1, vec![int(1), int(0), int(1)]));
        assert_eq!((a, b.is_zero()), (wpoly(&[int(0), int(2)]), true));
        let inv2 = LaurentPoly::monomial(Var::X, int(1), -2);
        let (a, b) = reduce_to_wx(&inv2);
        assert_eq!((a, b), (chebyshev_u(2), -chebyshev_u(1)));
        check_reduction(&inv2);
        check_reduction(&LaurentPoly::new(Var::X, -4, (0..9).map(|i| rat(i * i - 3, i + 1)).collect()));
    }

    #[test]
    fn lagrange_examples() {
        let n = wpoly(&[int(0), int(1)]).with_var(Var::N);
        let s = lagrange_vanishing_sum(&n, &[int(1), int(2)]).unwrap();
        assert_eq!(s, LagrangeSum { value: int(0), within_contract: true });
        let n3 = Poly::monomial(Var::N, int(1), 3);
        assert!(lagrange_vanishing_sum(&n3, &[int(1), int(2), int(3)]).unwrap().value.is_zero());
        // n^3 at {1, 2}: 1/(1·(1−4)) + 8/(2·(4−1)) = −1/3 + 4/3 = 1
        let out = lagrange_vanishing_sum(&n3, &[int(1), int(2)]).unwrap();
        assert_eq!(out, LagrangeSum { value: int(1), within_contract: false });
        assert!(matches!(lagrange_vanishing_sum(&n, &[int(2), int(2)]), Err(Error::NodeCollision(_))));
    }

    #[test]
    fn interpolation_examples() {
        let q = interp_q(&NodeSet::new(vec![1, 3]).unwrap()).unwrap();
        assert_eq!(q, wpoly(&[rat(-1, 6), int(0), rat(1, 6)]));
        let single = interp_q(&NodeSet::new(vec![4]).unwrap()).unwrap();
        assert_eq!(single, chebyshev_u(3).scale(&rat(1, 4)));
        let even = interp_q(&NodeSet::new(vec![2, 4]).unwrap()).unwrap();
        assert!(even.div_rem(&wpoly(&[int(-1), int(0), int(1)])).unwrap().1.is_zero());
        assert!(matches!(NodeSet::new(vec![3, -3]), Err(Error::NodeCollision(_))));
    }

    #[test]
    fn f_examples() {
        let f = f_build(&NodeSet::new(vec![1, 3]).unwrap());
        assert_eq!(f, LaurentPoly::from_terms(Var::X, [(1, rat(-1, 8)), (3, rat(1, 24))]));
        assert_eq!(f_build(&NodeSet::new(vec![5]).unwrap()), LaurentPoly::monomial(Var::X, rat(1, 5), 5));
        let neg = f_build(&NodeSet::new(vec![-3, -5]).unwrap());
        assert_eq!(neg, LaurentPoly::from_terms(Var::X, [(-3, rat(1, 48)), (-5, rat(-1, 80))]));
    }

    #[test]
    fn membership_examples() {
        let f = f_build(&NodeSet::new(vec![1, 3]).unwrap());
        let Membership::Member(cert) = av_membership(&f, 1, 1).unwrap() else { panic!("expected member") };
        assert_eq!(cert.a, wpoly(&[int(0), rat(-1, 4), int(0), rat(1, 6)]));
        assert_eq!(cert.b, wpoly(&[rat(1, 6)]));
        // oracle: substitute generators at rational points
        for x in [rat(3, 2), rat(-2, 5)] {
            let w = (&x + x.recip()) / int(2);
            let v = num_traits::pow(&x - int(1), 3) * num_traits::pow(&x + int(1), 3) / (int(8) * num_traits::pow(x.clone(), 3));
            assert_eq!(cert.a.eval(&w) + cert.b.eval(&w) * v, f.eval(&x));
        }
        assert_eq!(cert.to_json()["B"], json!(["1/6"]));
        let w = LaurentPoly::new(Var::X, -1, vec![int(1), int(0), int(1)]);
        for (r, s) in [(0, 0), (2, 1), (3, 3)] {
            let Membership::Member(c) = av_membership(&w, r, s).unwrap() else { panic!() };
            assert_eq!((c.a, c.b.is_zero()), (wpoly(&[int(0), int(2)]), true));
        }
        assert_eq!(av_membership(&LaurentPoly::monomial(Var::X, int(1), 1), 1, 0).unwrap(), Membership::NotMember);
    }

    #[test]
    fn curve_identity() {
        for r in 0..=3 {
            for s in 0..=3 {
                let w = generator_w();
                let v = generator_v(r, s);
                let one = LaurentPoly::constant(Var::X, int(1));
                let rhs = &(&w - &one).pow(2 * r as u32 + 1) * &(&w + &one).pow(2 * s as u32 + 1);
                assert_eq!(&v * &v, rhs, "({r},{s})");
            }
        }
    }

    #[test]
    fn parity_of_outputs() {
        let nodes = NodeSet::new(vec![2, 6, 4]).unwrap();
        let f = f_build(&nodes);
        assert!(f.terms().all(|(e, _)| e % 2 == 0));
        assert!(interp_q(&nodes).unwrap().is_odd());
    }

    fn odd_poly() -> impl Strategy<Value = (Poly<Rational>, Vec<Rational>)> {
        (1usize..5).prop_flat_map(|t| {
            (
                prop::collection::vec(-20i64..21, t),
                prop::collection::btree_set(1i64..60, t + 1),
                prop::collection::vec(1i64..4, t + 1),
            )
                .prop_map(move |(cs, nodes, dens)| {
                    let mut coeffs = vec![Rational::zero(); 2 * t];
                    for (i, c) in cs.into_iter().enumerate() {
                        coeffs[2 * i + 1] = int(c);
                    }
                    let nodes = nodes.into_iter().zip(dens).map(|(s, d)| rat(s, d)).collect::<BTreeSet<_>>();
                    (Poly::new(Var::N, coeffs), nodes.into_iter().collect())
                })
        })
    }

    proptest! {
        #[test]
        fn lagrange_sum_vanishes((q, nodes) in odd_poly()) {
            prop_assume!(nodes.len() >= 2);
            let t = nodes.len() - 1;
            prop_assume!(q.degree().map_or(true, |d| d < 2 * t));
            let s = lagrange_vanishing_sum(&q, &nodes).unwrap();
            prop_assert!(s.within_contract);
            prop_assert!(s.value.is_zero());
        }

        #[test]
        fn reduction_roundtrip(low in -6i64..2, cs in prop::collection::vec(-9i64..10, 1..9)) {
            let f = LaurentPoly::new(Var::X, low, cs.into_iter().map(int).collect());
            let (a, b) = reduce_to_wx(&f);
            prop_assert_eq!(&substitute_w(&a) + &(&substitute_w(&b) * &LaurentPoly::monomial(Var::X, int(1), 1)), f);
        }
    }
}
