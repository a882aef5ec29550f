//! Sparse multivariate polynomials over exact fields.

mod monomial;
mod polynomial;
mod system;

pub use monomial::{compare_monomials, Monomial, MonomialOrder};
pub use polynomial::{poly_arith, PolyOp, Polynomial, Term};
pub(crate) use polynomial::sub_mul_terms;
pub use system::PolySystem;
