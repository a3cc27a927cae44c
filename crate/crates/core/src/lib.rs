//! Exact construction of non-symmetric, symmetric and anti-symmetric
//! multivariable Hermite (`A_{N−1}`) and Laguerre (`B_N`) polynomials from
//! Dunkl–Cherednik operators, with closed-form norms and independent oracles.

pub mod cli;
pub mod construct;
pub mod dunkl;
pub mod error;
pub mod exactpoly;
pub mod hpfloat;
pub mod norms;
pub mod oracle;
pub mod weyl;

pub use error::{Error, Result};
