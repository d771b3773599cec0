//! Brute-force engines used as ground truth: Schubert polynomials for the
//! flag varieties of type A, Schur `Q`/`P`-functions for the Lagrangian and
//! orthogonal Grassmannians.

pub mod poly;
pub mod qfunctions;
pub mod schubert;

pub use poly::SparsePolynomial;
pub use qfunctions::{qp_structure_constant, QFunctionOracle, QpFamily};
pub use schubert::{structure_constant_a, triple_integral_twostep, SchubertCalculus, SchubertExpansion};
