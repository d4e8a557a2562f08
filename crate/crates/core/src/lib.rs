pub mod error;
pub mod bessel;
pub mod cheb;
pub mod darboux;
pub mod exact;
pub mod kernel;
pub mod oracle;

pub use error::{Error, Result};
