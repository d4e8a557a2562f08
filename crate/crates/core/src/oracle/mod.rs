//! Independent numerical references: truncated-lattice evolution, contour
//! quadrature of the spectral integrals, and comparison reports.

mod lattice;
mod quadrature;
mod report;

pub use lattice::{lattice_evolve, lattice_grid, LatticeEvolution, LatticeWindow, BOUNDARY_LIMIT};
pub use quadrature::{circle_quadrature, Integrand, QuadratureResult, QuadratureSpec};
pub use report::{compare_report, ComparisonReport, ComparisonRow, GridPoint};

#[cfg(test)]
mod tests;
