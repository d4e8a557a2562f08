use num_traits::One;

use super::params::ParamVector;
use super::schur::{phi, psi, r1_derivative, substitute_r1, NPoly};
use crate::exact::{determinant, int, Poly, Rational, Ring, Var};

/// A Wronskian column: the polynomial part `g` of `χ^n g(n)`, `χ = ±1`.
#[derive(Clone, Debug)]
pub(crate) struct Column<R> {
    pub g: Poly<R>,
    pub chi: i8,
}

/// Direction of the difference operator used for the rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Direction {
    /// `Δ = Λ − 1`
    Forward,
    /// `Δ* = Λ^{-1} − 1`
    Backward,
}

/// One difference step on `χ^n g`, with the character stripped again:
/// `(χ Λ^{±1} − 1) g`.
fn step<R: Ring>(g: &Poly<R>, chi: i8, dir: Direction) -> Poly<R> {
    let h = match dir {
        Direction::Forward => R::one(),
        Direction::Backward => -R::one(),
    };
    let shifted = g.shift(&h);
    let shifted = if chi < 0 { -shifted } else { shifted };
    &shifted - g
}

/// `rows × columns` matrix of iterated differences, characters stripped.
pub(crate) fn wronskian_matrix<R: Ring>(cols: &[Column<R>], rows: usize, dir: Direction) -> Vec<Vec<Poly<R>>> {
    let mut current: Vec<Poly<R>> = cols.iter().map(|c| c.g.clone()).collect();
    let mut out = Vec::with_capacity(rows);
    for _ in 0..rows {
        let next = current.iter().zip(cols).map(|(g, c)| step(g, c.chi, dir)).collect();
        out.push(std::mem::replace(&mut current, next));
    }
    out
}

/// The `φ_1..φ_R, ψ_1..ψ_S` columns with `r_1` symbolic.
pub(crate) fn symbolic_columns(params: &ParamVector) -> Vec<Column<crate::exact::Poly<Rational>>> {
    let phis = (1..=params.r_steps()).map(|j| Column { g: phi(j, params).polynomial().clone(), chi: 1 });
    let psis = (1..=params.s_steps()).map(|j| Column { g: psi(j, params).polynomial().clone(), chi: -1 });
    phis.chain(psis).collect()
}

/// Same columns with `r_1` substituted and `n` shifted by `offset`.
pub(crate) fn numeric_columns(params: &ParamVector, offset: i64) -> Vec<Column<Rational>> {
    symbolic_columns(params)
        .into_iter()
        .map(|c| Column { g: substitute_r1(&c.g, params.r1()).shift(&int(offset)), chi: c.chi })
        .collect()
}

/// The polynomial τ function, with `r_1` kept symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct TauFunction {
    params: ParamVector,
    symbolic: NPoly,
    numeric: Poly<Rational>,
    derivative: Poly<Rational>,
}

impl TauFunction {
    pub fn params(&self) -> &ParamVector {
        &self.params
    }

    /// τ as a polynomial in `n` over `Q[r_1]`.
    pub fn symbolic(&self) -> &NPoly {
        &self.symbolic
    }

    /// τ with the parameter's `r_1` substituted.
    pub fn polynomial(&self) -> &Poly<Rational> {
        &self.numeric
    }

    /// `∂τ/∂r_1`, then `r_1` substituted.
    pub fn r1_derivative(&self) -> &Poly<Rational> {
        &self.derivative
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.numeric.eval(&int(n))
    }

    pub fn degree(&self) -> Option<usize> {
        self.numeric.degree()
    }

    /// First integer in `[−w, w]` (scanning outward from 0) where τ vanishes.
    pub fn first_zero(&self, w: i64) -> Option<i64> {
        std::iter::once(0)
            .chain((1..=w).flat_map(|k| [-k, k]))
            .find(|&n| num_traits::Zero::is_zero(&self.eval(n)))
    }
}

/// `Wr_Δ(φ_1..φ_R, ψ_1..ψ_S)` with the ψ characters cancelled by the normalization.
pub fn tau_build(params: &ParamVector) -> TauFunction {
    let cols = symbolic_columns(params);
    let symbolic = if cols.is_empty() {
        NPoly::one()
    } else {
        determinant(&wronskian_matrix(&cols, cols.len(), Direction::Forward))
    }
    .with_var(Var::N);
    let numeric = substitute_r1(&symbolic, params.r1());
    let derivative = substitute_r1(&r1_derivative(&symbolic), params.r1());
    TauFunction { params: params.clone(), symbolic, numeric, derivative }
}
