//! Relative generalized Hamming weights, generalized Hamming weights and
//! footprint bounds of evaluation codes over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: arithmetic in `F_q`, `q` prime.
//! - [`poly`]: monomials, monomial orders, sparse polynomials, division and
//!   echelonized polynomial subspaces.
//! - [`groebner`]: Gröbner bases of zero-dimensional ideals, vanishing ideals
//!   of point sets, footprints and degrees.
//! - [`codes`]: evaluation codes, generator matrices and weight statistics.
//! - [`rghw`]: relative generalized Hamming weights via degrees of
//!   `S/(I, F)`, relative footprint bounds, and a subcode-enumeration oracle.
//! - [`families`]: affine Cartesian codes, squarefree evaluation codes and
//!   toric codes over hypersimplices, with their closed formulas.

pub mod codes;
pub mod error;
pub mod families;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod rghw;

mod bits;

pub use codes::{EvaluationCode, GeneratorMatrix, WeightProfile};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use groebner::{Footprint, GroebnerBasis, PointSet};
pub use poly::{Monomial, MonomialOrder, PolySpace, Polynomial};
pub use rghw::{CandidateSet, RghwProblem, SearchOptions};

/// Default cap on the number of elements any exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
