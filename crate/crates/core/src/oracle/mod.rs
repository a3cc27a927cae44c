//! Independent checks: a monomial-basis eigensolver, a quadrature Gram
//! matrix, and a batch runner over every invariant.

pub mod eigensolve;
pub mod quadrature;
pub mod relations;
pub mod verify;

pub use eigensolve::{triangular_eigensolve, OperatorMatrix};
pub use quadrature::{gauss_hermite, quadrature_gram, GramMatrix, QuadratureRule};
pub use verify::{verify_suite, verify_suite_with, CheckEntry, Status, VerifyOptions, VerifyReport};
