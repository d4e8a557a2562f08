//! The closed-form heat kernel `u(n, m, t) = e^{−2t} Σ_j β_j(t) I_j(2t)`:
//! series coefficients, node polynomials, assembly, evaluation and the exact
//! PDE certificate.

mod assemble;
mod decomposition;
mod formula;
mod gamma;
mod nodes;
mod residual;

pub use assemble::{
    assemble_kernel, assemble_kernel_for, kernel_eval, symmetry_transport, transport_factor, truncation,
};
pub use decomposition::{decomposition_check, DecompositionReport};
pub use formula::{KernelFormula, Provenance};
pub use gamma::{gamma_series, GammaSeries};
pub use nodes::{node_poly, NodePolynomial};
pub use residual::{pde_residual, pde_residual_with, ExactZeroReport};
