//! Exact arithmetic: rationals, polynomials, Laurent polynomials, rational
//! functions and truncated Laurent expansions at the origin.
//!
//! Every value is immutable once built and every operation is pure.

mod fraction;
mod laurent;
mod poly;
mod rational;
mod rational_function;
mod series;

pub use fraction::Fraction;
pub use laurent::LaurentPoly;
pub use poly::{times, Field, Poly, Ring, Var};
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational};
pub use rational_function::RationalFunction;
pub use series::{coefficient, series_at_zero, LaurentSeries};

/// Determinant by cofactor expansion along the first row.
///
/// Only used for the small Wronskian matrices (size `R + S`), where the
/// factorial cost is irrelevant and no division is available.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        size => {
            let mut acc = R::zero();
            for col in 0..size {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][col].clone() * determinant(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}
