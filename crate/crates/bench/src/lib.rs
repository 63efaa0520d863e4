//! Shared problem builders for the benchmarks.

use rghw_core::families::{cartesian_problem, CartesianSpec};
use rghw_core::{Monomial, MonomialOrder, PointSet, PolySpace, PrimeField, RghwProblem};

/// `<1, t1^3, t1 t2^2, t2^3, t1 t2, t1^2>` against `<t1 t2^2, t1 t2>` on
/// `(F_5^*)^2`.
pub fn torus_gap() -> RghwProblem {
    let k = PrimeField::new(5).unwrap();
    let ord = MonomialOrder::GRevLex;
    let mons = |list: &[[u32; 2]]| -> Vec<Monomial> { list.iter().map(|e| Monomial::new(e.to_vec())).collect() };
    let l1 = PolySpace::from_monomials(k, 2, ord, &mons(&[[0, 0], [3, 0], [1, 2], [0, 3], [1, 1], [2, 0]])).unwrap();
    let l2 = PolySpace::from_monomials(k, 2, ord, &mons(&[[1, 2], [1, 1]])).unwrap();
    RghwProblem::new(PointSet::torus(k, 2), ord, &l1, &l2).unwrap()
}

/// Cartesian spaces of degrees 3 and 1 on `{0, 1, 2}^2` over `F_5`.
pub fn cartesian_3x3() -> RghwProblem {
    let k = PrimeField::new(5).unwrap();
    let spec = CartesianSpec::initial_segments(k, &[3, 3]).unwrap();
    cartesian_problem(&spec, 3, 1, MonomialOrder::GRevLex).unwrap()
}
