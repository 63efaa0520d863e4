//! Monomials, monomial orders, sparse multivariate polynomials over `F_q`,
//! multivariate division, and echelonized polynomial subspaces.

mod monomial;
mod order;
mod polynomial;
mod space;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{divide, Polynomial};
pub use space::PolySpace;
