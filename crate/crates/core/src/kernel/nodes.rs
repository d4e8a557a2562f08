use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rational, Var};

/// The odd cardinal polynomial `q_{k+ε+2i}(j)` of degree `2T − 1`: equal to 1
/// at `j = k+ε+2i` and to 0 at the other nodes `k+ε+2l`, `0 ≤ l < T`.
#[derive(Clone, Debug, PartialEq)]
pub struct NodePolynomial {
    pub k: i64,
    pub eps: u8,
    pub i: usize,
    pub big_t: usize,
    pub poly: Poly<Rational>,
}

impl NodePolynomial {
    /// `k + ε + 2i`.
    pub fn node(&self) -> i64 {
        self.k + self.eps as i64 + 2 * self.i as i64
    }
}

/// `q(j) = (j/s_i) Π_{l≠i} (j² − s_l²)/(s_i² − s_l²)` with `s_l = k + ε + 2l`.
pub fn node_poly(k: i64, eps: u8, i: usize, big_t: usize) -> Result<NodePolynomial> {
    assert!(eps == 1 || eps == 2, "ε is 1 or 2");
    assert!(i < big_t, "slot index must be below T");
    let node = |l: usize| k + eps as i64 + 2 * l as i64;
    let si = node(i);
    if si == 0 {
        return Err(Error::ZeroNode { k, eps, i });
    }
    let si2 = int(si * si);
    let mut poly = Poly::new(Var::J, vec![int(0), int(si).recip()]);
    for l in (0..big_t).filter(|&l| l != i) {
        let sl2 = int(node(l) * node(l));
        if sl2 == si2 {
            return Err(Error::NodeCollision(format!("nodes {si} and {}", node(l))));
        }
        let factor = Poly::new(Var::J, vec![-&sl2, int(0), Rational::one()]).scale(&(&si2 - &sl2).recip());
        poly = &poly * &factor;
    }
    Ok(NodePolynomial { k, eps, i, big_t, poly: poly.with_var(Var::J) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn single_slot_is_linear() {
        assert_eq!(node_poly(0, 1, 0, 1).unwrap().poly, Poly::new(Var::J, vec![int(0), int(1)]));
        assert_eq!(node_poly(0, 2, 0, 1).unwrap().poly, Poly::new(Var::J, vec![int(0), rat(1, 2)]));
    }

    #[test]
    fn cardinal_values() {
        let q = node_poly(1, 1, 0, 2).unwrap();
        assert_eq!(q.poly.degree(), Some(3));
        assert!(q.poly.is_odd());
        assert_eq!(q.poly.eval(&int(2)), int(1));
        assert_eq!(q.poly.eval(&int(4)), int(0));
        assert_eq!(q.poly.eval(&int(-2)), int(-1));
        for big_t in 1..5 {
            for i in 0..big_t {
                for eps in [1u8, 2] {
                    let q = node_poly(3, eps, i, big_t).unwrap();
                    for l in 0..big_t {
                        let at = q.poly.eval(&int(3 + eps as i64 + 2 * l as i64));
                        assert_eq!(at, if l == i { int(1) } else { int(0) });
                    }
                }
            }
        }
    }

    #[test]
    fn zero_node_rejected() {
        assert_eq!(node_poly(-1, 1, 0, 1), Err(Error::ZeroNode { k: -1, eps: 1, i: 0 }));
    }
}
