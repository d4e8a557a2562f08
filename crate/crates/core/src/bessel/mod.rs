//! Modified Bessel functions `I_k`: scaled numerics, the exact `α^n_j`
//! polynomials and finite resummation of odd-weighted tails.

mod alpha;
mod combo;
pub mod identities;
mod numeric;

pub use alpha::{alpha_table, AlphaTable};
pub use combo::{tail_resum, BesselArg, BesselCombo};
pub use numeric::{bessel_i_ascending, bessel_row, BesselRow};
