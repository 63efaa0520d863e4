//! Concrete code families and their closed formulas: affine Cartesian
//! codes (with the relative weight formula for Cartesian spaces), squarefree
//! evaluation codes on the torus, and toric codes of hypersimplices.

use itertools::Itertools;

use crate::codes::{evaluate_space, standardize, EvaluationCode};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{vanishing_ideal, PointSet};
use crate::poly::{Monomial, MonomialOrder, PolySpace};
use crate::rghw::RghwProblem;

/// The product `A_1 x ... x A_s` of nonempty subsets of `F_q` with
/// non-decreasing sizes `d_1 <= ... <= d_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianSpec {
    field: PrimeField,
    subsets: Vec<Vec<u64>>,
}

impl CartesianSpec {
    pub fn new(field: PrimeField, subsets: Vec<Vec<i64>>) -> Result<Self> {
        if subsets.is_empty() {
            return Err(Error::InvalidParameter("need at least one subset".into()));
        }
        let subsets: Vec<Vec<u64>> = subsets
            .into_iter()
            .map(|a| a.into_iter().map(|v| field.reduce(v)).collect())
            .collect();
        for (i, a) in subsets.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::EmptyPointSet);
            }
            if !a.iter().all_unique() {
                return Err(Error::InvalidParameter(format!("subset A_{} repeats an element", i + 1)));
            }
        }
        if subsets.windows(2).any(|w| w[0].len() > w[1].len()) {
            return Err(Error::InvalidParameter("subset sizes must be non-decreasing".into()));
        }
        Ok(CartesianSpec { field, subsets })
    }

    /// `A_i = {0, 1, ..., d_i - 1}`.
    pub fn initial_segments(field: PrimeField, dims: &[u64]) -> Result<Self> {
        if let Some(&d) = dims.iter().find(|&&d| d > field.order()) {
            return Err(Error::InvalidParameter(format!("|A_i| = {d} exceeds the field size")));
        }
        Self::new(field, dims.iter().map(|&d| (0..d as i64).collect()).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn subsets(&self) -> &[Vec<u64>] {
        &self.subsets
    }

    pub fn nvars(&self) -> usize {
        self.subsets.len()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.subsets.iter().map(|a| a.len() as u64).collect()
    }

    /// `sum (d_i - 1)`, the largest useful degree.
    pub fn max_degree(&self) -> i64 {
        self.dims().iter().map(|&d| d as i64 - 1).sum()
    }

    pub fn points(&self) -> PointSet {
        PointSet::cartesian(self.field, &self.subsets).expect("validated subsets")
    }

    /// Monomials with `deg_{t_i} < d_i` and total degree at most `d`
    /// (none when `d < 0`).
    pub fn monomials(&self, d: i64) -> Vec<Monomial> {
        ExponentProfile::new(&self.dims())
            .at_most(d)
            .into_iter()
            .map(|a| Monomial::new(a.into_iter().map(|e| e as u32).collect()))
            .collect()
    }

    pub fn space(&self, d: i64, order: MonomialOrder) -> PolySpace {
        PolySpace::from_monomials(self.field, self.nvars(), order, &self.monomials(d)).expect("dimensions agree")
    }
}

/// The affine Cartesian code of degree `d`, `1 <= d <= sum (d_i - 1)`.
pub fn cartesian_code(spec: &CartesianSpec, d: i64, order: MonomialOrder) -> Result<EvaluationCode> {
    if d < 1 || d > spec.max_degree() {
        return Err(Error::InvalidParameter(format!(
            "degree {d} outside 1..={}",
            spec.max_degree()
        )));
    }
    evaluate_space(&spec.space(d, order), &spec.points())
}

/// The pair of Cartesian spaces of degrees `d1 > d2` (`d2 = -1` gives the
/// zero space).
pub fn cartesian_problem(spec: &CartesianSpec, d1: i64, d2: i64, order: MonomialOrder) -> Result<RghwProblem> {
    if !(-1 <= d2 && d2 < d1 && d1 <= spec.max_degree()) {
        return Err(Error::InvalidParameter(format!(
            "need -1 <= d2 < d1 <= {}, got d1 = {d1}, d2 = {d2}",
            spec.max_degree()
        )));
    }
    RghwProblem::new(spec.points(), order, &spec.space(d1, order), &spec.space(d2, order))
}

/// The exponent box `prod {0, ..., d_i - 1}` listed in descending
/// lexicographic order, with its degree windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentProfile {
    dims: Vec<u64>,
    all: Vec<Vec<u64>>,
}

impl ExponentProfile {
    pub fn new(dims: &[u64]) -> Self {
        let mut all: Vec<Vec<u64>> = dims.iter().map(|&d| 0..d).multi_cartesian_product().collect();
        if dims.is_empty() {
            all = vec![vec![]];
        }
        all.sort_by(|a, b| b.cmp(a));
        ExponentProfile {
            dims: dims.to_vec(),
            all,
        }
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn all(&self) -> &[Vec<u64>] {
        &self.all
    }

    /// Elements of total degree at most `d`.
    pub fn at_most(&self, d: i64) -> Vec<Vec<u64>> {
        self.all
            .iter()
            .filter(|a| a.iter().sum::<u64>() as i64 <= d)
            .cloned()
            .collect()
    }

    /// Elements with `d2 < deg <= d1`.
    pub fn window(&self, d2: i64, d1: i64) -> Vec<Vec<u64>> {
        self.at_most(d1)
            .into_iter()
            .filter(|a| a.iter().sum::<u64>() as i64 > d2)
            .collect()
    }
}

/// Closed formula for `M_r` of Cartesian codes of degrees `d1 > d2`:
/// `d_1...d_s - sum_i a_i prod_{j>i} d_j - t + r`, where `a` is the `r`-th
/// element of the window `d2 < deg <= d1` and `t` its 1-based position among
/// exponents of degree at most `d1`, both in descending lexicographic order.
pub fn cartesian_rghw_formula(dims: &[u64], d1: i64, d2: i64, r: usize) -> Result<u64> {
    if dims.is_empty() || dims.contains(&0) || dims.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter(
            "dims must be positive and non-decreasing".into(),
        ));
    }
    let top: i64 = dims.iter().map(|&d| d as i64 - 1).sum();
    if !(-1 <= d2 && d2 < d1 && d1 <= top) {
        return Err(Error::InvalidParameter(format!(
            "need -1 <= d2 < d1 <= {top}, got d1 = {d1}, d2 = {d2}"
        )));
    }
    let profile = ExponentProfile::new(dims);
    let window = profile.window(d2, d1);
    if r == 0 || r > window.len() {
        return Err(Error::RankOutOfRange { r, max: window.len() });
    }
    let a = &window[r - 1];
    let t = profile.at_most(d1).iter().position(|b| b == a).expect("window is a subset") + 1;
    let full: u64 = dims.iter().product();
    let offset: u64 = (0..dims.len())
        .map(|i| a[i] * dims[i + 1..].iter().product::<u64>())
        .sum();
    Ok(full + r as u64 - offset - t as u64)
}

/// Squarefree monomials of degree exactly `d` in `s` variables, in
/// lexicographic order of their supports.
pub fn squarefree_monomials(s: usize, d: usize) -> Vec<Monomial> {
    (0..s)
        .combinations(d)
        .map(|c| {
            let mut e = vec![0; s];
            for i in c {
                e[i] = 1;
            }
            Monomial::new(e)
        })
        .collect()
}

/// Squarefree monomials of degree at most `d` (none when `d < 0`).
pub fn squarefree_monomials_at_most(s: usize, d: i64) -> Vec<Monomial> {
    (0..=d.min(s as i64))
        .flat_map(|e| squarefree_monomials(s, e as usize))
        .collect()
}

/// Spans `monomials`, standardizes against `I(points)` and evaluates.
/// Standardization only changes anything when `q = 2`, where every
/// variable is 1 on the torus.
fn standard_code(points: &PointSet, monomials: &[Monomial], order: MonomialOrder) -> Result<EvaluationCode> {
    let l = PolySpace::from_monomials(points.field(), points.nvars(), order, monomials)?;
    let l = standardize(&l, &vanishing_ideal(points, order))?;
    evaluate_space(&l, points)
}

/// The squarefree evaluation code `C_{<=d}` on `(F_q^*)^s`, `1 <= d <= s`.
pub fn squarefree_code(field: PrimeField, s: usize, d: usize, order: MonomialOrder) -> Result<EvaluationCode> {
    if d < 1 || d > s {
        return Err(Error::InvalidParameter(format!("degree {d} outside 1..={s}")));
    }
    standard_code(&PointSet::torus(field, s), &squarefree_monomials_at_most(s, d as i64), order)
}

/// `C_{<=d1}` against `C_{<=d2}` on the torus (`d2 = -1` for the zero
/// code).
pub fn squarefree_problem(field: PrimeField, s: usize, d1: usize, d2: i64, order: MonomialOrder) -> Result<RghwProblem> {
    if !(-1 <= d2 && d2 < d1 as i64 && d1 <= s) {
        return Err(Error::InvalidParameter(format!(
            "need -1 <= d2 < d1 <= {s}, got d1 = {d1}, d2 = {d2}"
        )));
    }
    let points = PointSet::torus(field, s);
    let l1 = squarefree_monomials_at_most(s, d1 as i64);
    let l2 = squarefree_monomials_at_most(s, d2);
    let as_polys = |ms: &[Monomial]| {
        ms.iter()
            .map(|m| crate::poly::Polynomial::monomial(field, m.clone(), 1))
            .collect::<Vec<_>>()
    };
    RghwProblem::standardized(points, order, &as_polys(&l1), &as_polys(&l2))
}

/// The `d`-th hypersimplex in dimension `s` over `F_q`; its lattice points
/// are the squarefree monomials of degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypersimplexSpec {
    pub field: PrimeField,
    pub s: usize,
    pub d: usize,
}

impl HypersimplexSpec {
    pub fn new(field: PrimeField, s: usize, d: usize) -> Result<Self> {
        if d < 1 || d > s {
            return Err(Error::InvalidParameter(format!("degree {d} outside 1..={s}")));
        }
        Ok(HypersimplexSpec { field, s, d })
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        squarefree_monomials(self.s, self.d)
    }
}

/// The toric code of the hypersimplex: `span V_d` evaluated on the torus in
/// lexicographic order. For `q = 2` the torus is one point and the space
/// collapses to the constants.
pub fn toric_code(spec: &HypersimplexSpec, order: MonomialOrder) -> Result<EvaluationCode> {
    standard_code(&PointSet::torus(spec.field, spec.s), &spec.monomials(), order)
}

fn require_q3(q: u64) -> Result<()> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!("formula needs q >= 3, got {q}")));
    }
    Ok(())
}

fn upow(b: u64, e: usize) -> u64 {
    b.pow(e as u32)
}

/// Minimum distance of the hypersimplex toric code.
pub fn toric_min_distance_formula(q: u64, s: usize, d: usize) -> Result<u64> {
    if d < 1 || d > s || q < 2 {
        return Err(Error::InvalidParameter(format!("need q >= 2 and 1 <= d <= s, got q = {q}, s = {s}, d = {d}")));
    }
    Ok(if q == 2 {
        1
    } else if d == s {
        upow(q - 1, s)
    } else if 2 * d <= s {
        upow(q - 2, d) * upow(q - 1, s - d)
    } else {
        upow(q - 2, s - d) * upow(q - 1, d)
    })
}

/// `(q-1)^s - (q-2)^d (q-1)^(s-d)`: most zeros on the torus of a
/// squarefree form of degree `d`, `1 <= d < s`, `q >= 3`.
pub fn squarefree_zero_bound(q: u64, s: usize, d: usize) -> Result<u64> {
    require_q3(q)?;
    if d < 1 || d >= s {
        return Err(Error::InvalidParameter(format!("need 1 <= d < s, got s = {s}, d = {d}")));
    }
    Ok(upow(q - 1, s) - upow(q - 2, d) * upow(q - 1, s - d))
}

/// `(q-1)^s - (q-2)^r (q-1)^(s-r)`: zero bound for a squarefree form of
/// degree `d` that is a degree-`r` form times a monomial.
pub fn reducible_zero_bound(q: u64, s: usize, d: usize, r: usize) -> Result<u64> {
    require_q3(q)?;
    if !(1 < d && d < s && 1 <= r && r < d) {
        return Err(Error::InvalidParameter(format!(
            "need 1 < d < s and 1 <= r < d, got s = {s}, d = {d}, r = {r}"
        )));
    }
    Ok(upow(q - 1, s) - upow(q - 2, r) * upow(q - 1, s - r))
}

/// Zeros on `(F_q^*)^s` of a linear form with exactly `r` nonzero
/// coefficients: `sum_{j=1}^{r-1} (-1)^(j+1) (q-1)^(s-j)`.
pub fn linear_form_zero_count(q: u64, s: usize, r: usize) -> Result<u64> {
    require_q3(q)?;
    if !(2 <= r && r <= s) {
        return Err(Error::InvalidParameter(format!("need 2 <= r <= s, got s = {s}, r = {r}")));
    }
    let v: i128 = (1..r)
        .map(|j| {
            let term = upow(q - 1, s - j) as i128;
            if j % 2 == 1 {
                term
            } else {
                -term
            }
        })
        .sum();
    Ok(v as u64)
}

/// The `t`-th weight of the degree-one hypersimplex code,
/// `sum_{j=0}^{2t-1} (-1)^j (q-1)^(s-j)`, for `1 <= t <= s/2`.
pub fn toric_deg1_weight(q: u64, s: usize, t: usize) -> Result<u64> {
    require_q3(q)?;
    if t < 1 || 2 * t > s {
        return Err(Error::RankOutOfRange { r: t, max: s / 2 });
    }
    let v: i128 = (0..2 * t)
        .map(|j| {
            let term = upow(q - 1, s - j) as i128;
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    Ok(v as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::variety_in;
    use crate::poly::Polynomial;
    use crate::rghw::{rghw_definition_oracle, rghw_degree, SearchOptions};

    fn k(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    const ORD: MonomialOrder = MonomialOrder::GRevLex;

    #[test]
    fn cartesian_codes() {
        let spec = CartesianSpec::new(k(3), vec![vec![0, 1], vec![0, 1]]).unwrap();
        let c = cartesian_code(&spec, 1, ORD).unwrap();
        assert_eq!((c.n(), c.k()), (4, 3));

        let rm = CartesianSpec::initial_segments(k(3), &[3, 3, 3, 3]).unwrap();
        assert_eq!(cartesian_code(&rm, 1, ORD).unwrap().k(), 5);

        let spec = CartesianSpec::initial_segments(k(5), &[2, 3, 4]).unwrap();
        let full = cartesian_code(&spec, spec.max_degree(), ORD).unwrap();
        assert_eq!((full.n(), full.k()), (24, 24));

        assert!(cartesian_code(&spec, 0, ORD).is_err());
        assert!(cartesian_code(&spec, 7, ORD).is_err());
        assert!(CartesianSpec::new(k(3), vec![vec![0, 1, 2], vec![0]]).is_err());
        assert!(CartesianSpec::new(k(3), vec![vec![0, 3]]).is_err());
    }

    #[test]
    fn exponent_profile_order() {
        let p = ExponentProfile::new(&[2, 2]);
        assert_eq!(p.all(), &[vec![1, 1], vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert_eq!(p.at_most(1), vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert_eq!(p.window(0, 1), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(p.window(-1, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn cartesian_formula_values() {
        assert_eq!(cartesian_rghw_formula(&[2, 2], 1, 0, 1).unwrap(), 2);
        assert_eq!(cartesian_rghw_formula(&[2, 2], 1, 0, 2).unwrap(), 3);
        // Degree 1 in d = (3, 3): the Reed-Solomon-like [9, 3] code has
        // minimum distance 6.
        assert_eq!(cartesian_rghw_formula(&[3, 3], 1, -1, 1).unwrap(), 6);
        assert!(cartesian_rghw_formula(&[2, 2], 1, 0, 3).is_err());
        assert!(cartesian_rghw_formula(&[3, 2], 1, 0, 1).is_err());
        assert!(cartesian_rghw_formula(&[2, 2], 3, 0, 1).is_err());
    }

    #[test]
    fn cartesian_formula_matches_pipelines() {
        let spec = CartesianSpec::initial_segments(k(3), &[2, 2]).unwrap();
        let prob = cartesian_problem(&spec, 1, 0, ORD).unwrap();
        let (c1, c2) = prob.codes().unwrap();
        assert_eq!(rghw_definition_oracle(&c1, &c2, 1, 1 << 20).unwrap(), 2);

        let spec = CartesianSpec::initial_segments(k(3), &[3, 3]).unwrap();
        for (d1, d2) in [(2, 1), (3, 1), (2, -1), (4, 2)] {
            let prob = cartesian_problem(&spec, d1, d2, ORD).unwrap();
            for r in 1..=prob.gap().min(2) {
                let got = rghw_degree(&prob, r, &SearchOptions::default()).unwrap();
                assert_eq!(got as u64, cartesian_rghw_formula(&[3, 3], d1, d2, r).unwrap(), "d1 {d1} d2 {d2} r {r}");
            }
        }
    }

    #[test]
    fn squarefree_codes() {
        let c = squarefree_code(k(3), 2, 2, ORD).unwrap();
        assert_eq!((c.n(), c.k()), (4, 4));
        let c = squarefree_code(k(3), 3, 1, ORD).unwrap();
        assert_eq!((c.n(), c.k()), (8, 4));
        assert!(squarefree_code(k(3), 3, 4, ORD).is_err());
        assert_eq!(squarefree_code(k(2), 3, 2, ORD).unwrap().k(), 1);
    }

    #[test]
    fn squarefree_relative_weight_is_min_distance() {
        let o = SearchOptions::default();
        let rel = squarefree_problem(k(3), 3, 2, 1, ORD).unwrap();
        let abs = squarefree_problem(k(3), 3, 2, -1, ORD).unwrap();
        assert_eq!(rghw_degree(&rel, 1, &o).unwrap(), rghw_degree(&abs, 1, &o).unwrap());
        let c = squarefree_code(k(3), 3, 2, ORD).unwrap();
        let d = c.weight_distribution(1 << 20).unwrap().min_distance().unwrap();
        assert_eq!(rghw_degree(&abs, 1, &o).unwrap(), d);
    }

    #[test]
    fn squarefree_codes_lose_minimum_weight_words() {
        for s in 2..=3 {
            for d1 in 1..=s {
                for d2 in 0..d1 {
                    let max_zeros = |d: usize| {
                        let c = squarefree_code(k(3), s, d, ORD).unwrap();
                        c.n() - c.weight_distribution(1 << 20).unwrap().min_distance().unwrap()
                    };
                    assert!(max_zeros(d2.max(1)) <= max_zeros(d1));
                    if d2 >= 1 {
                        assert!(max_zeros(d2) < max_zeros(d1), "s {s} d1 {d1} d2 {d2}");
                    }
                }
            }
        }
    }

    #[test]
    fn toric_codes() {
        for (d, kk) in [(1, 4), (2, 6), (3, 4), (4, 1)] {
            let c = toric_code(&HypersimplexSpec::new(k(3), 4, d).unwrap(), ORD).unwrap();
            assert_eq!((c.n(), c.k()), (16, kk));
        }
        let c = toric_code(&HypersimplexSpec::new(k(2), 3, 2).unwrap(), ORD).unwrap();
        assert_eq!((c.n(), c.k()), (1, 1));
        assert!(HypersimplexSpec::new(k(3), 4, 5).is_err());
    }

    #[test]
    fn toric_formula_values() {
        assert_eq!(toric_min_distance_formula(3, 4, 1).unwrap(), 8);
        assert_eq!(toric_min_distance_formula(3, 4, 2).unwrap(), 4);
        assert_eq!(toric_min_distance_formula(3, 4, 3).unwrap(), 8);
        assert_eq!(toric_min_distance_formula(3, 4, 4).unwrap(), 16);
        assert_eq!(toric_min_distance_formula(2, 3, 1).unwrap(), 1);

        assert_eq!(squarefree_zero_bound(3, 4, 2).unwrap(), 12);
        assert_eq!(squarefree_zero_bound(3, 2, 1).unwrap(), 2);
        assert!(squarefree_zero_bound(4, 3, 3).is_err());

        assert_eq!(reducible_zero_bound(3, 4, 2, 1).unwrap(), 8);
        assert_eq!(reducible_zero_bound(5, 3, 2, 1).unwrap(), 16);

        assert_eq!(linear_form_zero_count(3, 2, 2).unwrap(), 2);
        assert_eq!(linear_form_zero_count(3, 4, 4).unwrap(), 6);
        assert_eq!(linear_form_zero_count(3, 4, 2).unwrap(), 8);

        assert_eq!(toric_deg1_weight(3, 4, 1).unwrap(), 8);
        assert_eq!(toric_deg1_weight(3, 4, 2).unwrap(), 10);
        assert_eq!(toric_deg1_weight(5, 2, 1).unwrap(), 12);
        assert!(toric_deg1_weight(3, 4, 3).is_err());
        assert!(toric_deg1_weight(2, 4, 1).is_err());
    }

    fn torus_zeros(q: u64, s: usize, f: &Polynomial) -> u64 {
        variety_in(std::slice::from_ref(f), &PointSet::torus(k(q), s)).unwrap().len() as u64
    }

    #[test]
    fn linear_form_count_matches_torus() {
        for q in [3u64, 5] {
            for s in 2..=5usize {
                if q == 5 && s == 5 {
                    continue;
                }
                for r in 2..=s {
                    let f = Polynomial::from_terms(
                        k(q),
                        s,
                        (0..r).map(|i| (Monomial::var(s, i), 1 + (i as i64 % (q as i64 - 1)))),
                    )
                    .unwrap();
                    assert_eq!(torus_zeros(q, s, &f), linear_form_zero_count(q, s, r).unwrap(), "q {q} s {s} r {r}");
                }
            }
        }
    }

    #[test]
    fn reducible_bound_attained() {
        let f = Polynomial::from_terms(k(3), 4, [(Monomial::new(vec![1, 0, 1, 0]), 1), (Monomial::new(vec![0, 1, 1, 0]), 1)]).unwrap();
        assert_eq!(torus_zeros(3, 4, &f), reducible_zero_bound(3, 4, 2, 1).unwrap());
    }

    #[test]
    fn squarefree_bound_holds_on_every_form() {
        for s in 2..=4usize {
            for d in 1..s {
                let mons = squarefree_monomials(s, d);
                let bound = squarefree_zero_bound(3, s, d).unwrap();
                let pts = PointSet::torus(k(3), s);
                let mut best = 0;
                for c in mons.iter().map(|_| 0..3i64).multi_cartesian_product() {
                    if c.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let f = Polynomial::from_terms(k(3), s, mons.iter().cloned().zip(c)).unwrap();
                    let z = variety_in(&[f], &pts).unwrap().len() as u64;
                    assert!(z <= bound);
                    best = best.max(z);
                }
                // Tight exactly in the range where the minimum distance is
                // (q-2)^d (q-1)^(s-d).
                let dist = toric_min_distance_formula(3, s, d).unwrap();
                assert_eq!(best, (1u64 << s) - dist, "s {s} d {d}");
                if 2 * d <= s {
                    assert_eq!(best, bound, "s {s} d {d}");
                }
            }
        }
    }

    #[test]
    fn toric_min_distance_by_enumeration() {
        for q in [3u64, 5] {
            for s in 1..=4usize {
                for d in 1..=s {
                    let c = toric_code(&HypersimplexSpec::new(k(q), s, d).unwrap(), ORD).unwrap();
                    let Ok(w) = c.weight_distribution(1 << 20) else { continue };
                    assert_eq!(
                        w.min_distance().unwrap() as u64,
                        toric_min_distance_formula(q, s, d).unwrap(),
                        "q {q} s {s} d {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn deg1_weights_are_even_support_weights() {
        for s in 2..=4usize {
            let c = toric_code(&HypersimplexSpec::new(k(3), s, 1).unwrap(), ORD).unwrap();
            let w = c.weight_distribution(1 << 20).unwrap().distinct_weights();
            let want: Vec<usize> = (1..=s / 2).map(|t| toric_deg1_weight(3, s, t).unwrap() as usize).collect();
            assert_eq!(&w[..want.len()], want.as_slice());
            // Weight of a form with m nonzero coefficients.
            let weight = |m: usize| {
                let n = 1usize << s;
                n - if m == 1 { 0 } else { linear_form_zero_count(3, s, m).unwrap() as usize }
            };
            for (t, &v) in want.iter().enumerate() {
                assert!((1..=s).filter(|&m| weight(m) == v).all(|m| m % 2 == 0 && m == 2 * (t + 1)));
            }
        }
    }
}
