//! Linear codes over `F_q`: generator matrices, evaluation codes of
//! polynomial spaces, standardization against a vanishing ideal, supports
//! and exhaustive weight statistics.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{normal_form, GroebnerBasis, PointSet};
use crate::linalg::{rank_of, Matrix};
use crate::poly::{PolySpace, Polynomial};

/// A full-rank `k x n` generator matrix.
///
/// Serializes as `{"q": .., "n": .., "rows": [[..], ..]}` with entries in
/// `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct GeneratorMatrix {
    field: PrimeField,
    n: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    q: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<RawMatrix> for GeneratorMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        GeneratorMatrix::new(PrimeField::new(raw.q)?, raw.n, raw.rows)
    }
}

impl From<GeneratorMatrix> for RawMatrix {
    fn from(g: GeneratorMatrix) -> Self {
        RawMatrix {
            q: g.field.order(),
            n: g.n,
            rows: g.rows,
        }
    }
}

impl GeneratorMatrix {
    /// Rejects ragged rows, non-canonical entries and dependent rows.
    pub fn new(field: PrimeField, n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            if let Some(&v) = r.iter().find(|&&v| v >= field.order()) {
                return Err(Error::InvalidParameter(format!(
                    "matrix entry {v} is not a canonical residue mod {}",
                    field.order()
                )));
            }
        }
        let rank = rank_of(field, n, &rows);
        if rank < rows.len() {
            return Err(Error::NonInjectiveEvaluation {
                rank,
                dim: rows.len(),
            });
        }
        Ok(GeneratorMatrix { field, n, rows })
    }

    /// A basis (reduced echelon form) of the span of arbitrary rows.
    pub fn from_spanning(field: PrimeField, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        let mut m = Matrix::from_rows(field, n, rows);
        let rank = m.rref().len();
        let basis = m.to_rows().into_iter().take(rank).collect();
        Ok(GeneratorMatrix { field, n, rows: basis })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        GeneratorMatrix { field, n, rows: Vec::new() }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `sum coeffs[i] * row_i`.
    pub fn codeword(&self, coeffs: &[u64]) -> Vec<u64> {
        let k = self.field;
        let mut out = vec![0; self.n];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            if c != 0 {
                for (x, &y) in out.iter_mut().zip(row) {
                    *x = k.add(*x, k.mul(c, y));
                }
            }
        }
        out
    }

    /// Rank of the rows of `self` and `other` stacked together.
    pub fn stacked_rank(&self, other: &GeneratorMatrix) -> usize {
        let rows: Vec<Vec<u64>> = self.rows.iter().chain(&other.rows).cloned().collect();
        rank_of(self.field, self.n, &rows)
    }

    /// Whether the row space of `other` lies inside that of `self`.
    pub fn contains(&self, other: &GeneratorMatrix) -> bool {
        self.n == other.n && self.field == other.field && self.stacked_rank(other) == self.k()
    }

    /// Same row space.
    pub fn same_code(&self, other: &GeneratorMatrix) -> bool {
        self.k() == other.k() && self.contains(other)
    }

    /// Columns with a nonzero entry (0-based).
    pub fn support(&self) -> Vec<usize> {
        support(&self.rows, self.n)
    }

    pub fn weight_distribution(&self, budget: u64) -> Result<WeightProfile> {
        weight_distribution(self, budget)
    }
}

/// Columns (0-based) where some row is nonzero; this is the support of the
/// row space and does not depend on the chosen rows.
pub fn support(rows: &[Vec<u64>], n: usize) -> Vec<usize> {
    (0..n).filter(|&j| rows.iter().any(|r| r[j] != 0)).collect()
}

/// The image of a polynomial space under evaluation at a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationCode {
    space: PolySpace,
    points: PointSet,
    matrix: GeneratorMatrix,
}

impl EvaluationCode {
    pub fn space(&self) -> &PolySpace {
        &self.space
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.matrix
    }

    pub fn field(&self) -> PrimeField {
        self.points.field()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.matrix.k()
    }

    pub fn weight_distribution(&self, budget: u64) -> Result<WeightProfile> {
        weight_distribution(&self.matrix, budget)
    }
}

/// `(f(P_1), ..., f(P_m))`.
pub fn evaluate(f: &Polynomial, points: &PointSet) -> Vec<u64> {
    points.points().iter().map(|p| f.eval_raw(p)).collect()
}

/// Evaluation code of `space` on `points`; row `i` of the generator matrix
/// is the evaluation of basis element `i`. Fails when evaluation is not
/// injective on `space` (standardize first).
pub fn evaluate_space(space: &PolySpace, points: &PointSet) -> Result<EvaluationCode> {
    if space.nvars() != points.nvars() {
        return Err(Error::DimensionMismatch {
            expected: points.nvars(),
            found: space.nvars(),
        });
    }
    if space.field() != points.field() {
        return Err(Error::FieldMismatch {
            left: points.field().order(),
            right: space.field().order(),
        });
    }
    let rows = space.basis().iter().map(|b| evaluate(b, points)).collect();
    let matrix = GeneratorMatrix::new(points.field(), points.len(), rows)?;
    Ok(EvaluationCode {
        space: space.clone(),
        points: points.clone(),
        matrix,
    })
}

/// Replaces each basis element by its normal form modulo `gb` and
/// re-echelonizes. When `gb` is the vanishing ideal of `X`, the result lies
/// in the span of the standard monomials and has the same evaluation image
/// on `X`.
pub fn standardize(space: &PolySpace, gb: &GroebnerBasis) -> Result<PolySpace> {
    let reduced = space
        .basis()
        .iter()
        .map(|b| normal_form(b, gb))
        .collect::<Result<Vec<_>>>()?;
    PolySpace::echelonize(space.field(), space.nvars(), gb.order(), &reduced)
}

/// Weight distribution `A_i` of a code together with its length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub n: usize,
    pub distribution: BTreeMap<usize, u64>,
}

impl WeightProfile {
    /// Weights `i > 0` with `A_i != 0`, ascending.
    pub fn distinct_weights(&self) -> Vec<usize> {
        self.distribution
            .iter()
            .filter(|&(&w, &c)| w > 0 && c > 0)
            .map(|(&w, _)| w)
            .collect()
    }

    pub fn total(&self) -> u128 {
        self.distribution.values().map(|&c| c as u128).sum()
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.distinct_weights().first().copied().ok_or(Error::ZeroCode)
    }

    /// Second smallest nonzero weight; a code with a single nonzero weight
    /// reports its length instead.
    pub fn next_to_minimal(&self) -> Result<usize> {
        let w = self.distinct_weights();
        match w.len() {
            0 => Err(Error::ZeroCode),
            1 => Ok(self.n),
            _ => Ok(w[1]),
        }
    }
}

/// `q^k`, saturating.
pub(crate) fn power(q: u64, k: usize) -> u128 {
    u32::try_from(k)
        .ok()
        .and_then(|k| (q as u128).checked_pow(k))
        .unwrap_or(u128::MAX)
}

pub(crate) fn check_budget(required: u128, budget: u64) -> Result<()> {
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Exact weight distribution by enumerating all `q^k` codewords.
///
/// Coefficient vectors are walked in odometer order; the leading digits are
/// fixed per task so the walk splits into independent ranges whose
/// histograms are summed.
pub fn weight_distribution(code: &GeneratorMatrix, budget: u64) -> Result<WeightProfile> {
    let q = code.field.order();
    let k = code.k();
    let n = code.n;
    check_budget(power(q, k), budget)?;

    // Fix enough high digits to give the pool a few hundred tasks.
    let mut fixed = 0;
    while fixed < k && power(q, fixed) < 256 {
        fixed += 1;
    }
    let free = k - fixed;
    let tasks = power(q, fixed) as u64;

    let hist = (0..tasks)
        .into_par_iter()
        .map(|t| {
            let field = code.field;
            let mut coeffs = vec![0u64; k];
            let mut rest = t;
            for c in coeffs[free..].iter_mut() {
                *c = rest % q;
                rest /= q;
            }
            let mut word = code.codeword(&coeffs);
            let mut hist = vec![0u64; n + 1];
            let mut digits = vec![0u64; free];
            loop {
                hist[word.iter().filter(|&&x| x != 0).count()] += 1;
                // Incrementing digit j always adds row j; a wrap-around means
                // q additions, which is the identity, then carry.
                let mut j = 0;
                loop {
                    if j == free {
                        return hist;
                    }
                    for (x, &y) in word.iter_mut().zip(&code.rows[j]) {
                        *x = field.add(*x, y);
                    }
                    digits[j] += 1;
                    if digits[j] < q {
                        break;
                    }
                    digits[j] = 0;
                    j += 1;
                }
            }
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let distribution = hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    Ok(WeightProfile { n, distribution })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::vanishing_ideal;
    use crate::poly::{Monomial, MonomialOrder};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn k(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn squarefree(s: usize, d: usize) -> Vec<Monomial> {
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

    fn toric(q: u64, s: usize, d: usize) -> EvaluationCode {
        let pts = PointSet::torus(k(q), s);
        let l = PolySpace::from_monomials(k(q), s, MonomialOrder::GRevLex, &squarefree(s, d)).unwrap();
        evaluate_space(&l, &pts).unwrap()
    }

    fn naive_distribution(g: &GeneratorMatrix) -> BTreeMap<usize, u64> {
        let q = g.field().order();
        let mut out = BTreeMap::new();
        for c in (0..g.k()).map(|_| 0..q).multi_cartesian_product() {
            let w = g.codeword(&c).iter().filter(|&&x| x != 0).count();
            *out.entry(w).or_insert(0) += 1;
        }
        if g.k() == 0 {
            out.insert(0, 1);
        }
        out
    }

    #[test]
    fn evaluation_codes() {
        let pts = PointSet::torus(k(3), 2);
        let one = PolySpace::from_monomials(k(3), 2, MonomialOrder::GRevLex, &[m(&[0, 0])]).unwrap();
        let c = evaluate_space(&one, &pts).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(c.matrix().rows(), &[vec![1, 1, 1, 1]]);

        assert_eq!((toric(3, 4, 1).n(), toric(3, 4, 1).k()), (16, 4));
        assert_eq!(toric(3, 4, 2).k(), 6);

        let big = PolySpace::from_monomials(k(3), 2, MonomialOrder::GRevLex, &[m(&[2, 0]), m(&[0, 0])]).unwrap();
        assert_eq!(
            evaluate_space(&big, &pts),
            Err(Error::NonInjectiveEvaluation { rank: 1, dim: 2 })
        );
    }

    #[test]
    fn standardization() {
        let pts = PointSet::torus(k(5), 2);
        let gb = vanishing_ideal(&pts, MonomialOrder::GRevLex);
        let l = PolySpace::from_monomials(k(5), 2, MonomialOrder::GRevLex, &[m(&[4, 0])]).unwrap();
        let st = standardize(&l, &gb).unwrap();
        assert_eq!(st.leads(), &[m(&[0, 0])]);
        let a: Vec<_> = l.basis().iter().map(|b| evaluate(b, &pts)).collect();
        let b: Vec<_> = st.basis().iter().map(|b| evaluate(b, &pts)).collect();
        assert_eq!(a, b);

        let five = PointSet::new(k(3), 2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![0, -1]]).unwrap();
        let gb = vanishing_ideal(&five, MonomialOrder::GRevLex);
        let l = PolySpace::from_monomials(k(3), 2, MonomialOrder::GRevLex, &[m(&[2, 0]), m(&[1, 0])]).unwrap();
        let st = standardize(&l, &gb).unwrap();
        assert_eq!(st.leads(), &[m(&[1, 0])]);

        let l = PolySpace::from_monomials(k(3), 2, MonomialOrder::GRevLex, &[m(&[1, 1]), m(&[0, 1])]).unwrap();
        assert_eq!(standardize(&l, &gb).unwrap(), l);
    }

    #[test]
    fn supports() {
        assert_eq!(support(&[vec![1, 0, 2], vec![0, 0, 1]], 3), vec![0, 2]);
        assert!(support(&[vec![0, 0, 0]], 3).is_empty());
        assert!(support(&[], 3).is_empty());
    }

    #[test]
    fn weights_of_small_codes() {
        let zero = GeneratorMatrix::zero(k(3), 5);
        let w = weight_distribution(&zero, 10).unwrap();
        assert_eq!(w.distribution, BTreeMap::from([(0, 1)]));
        assert!(w.distinct_weights().is_empty());
        assert_eq!(w.next_to_minimal(), Err(Error::ZeroCode));

        let rep = GeneratorMatrix::new(k(3), 5, vec![vec![1; 5]]).unwrap();
        let w = weight_distribution(&rep, 10).unwrap();
        assert_eq!(w.distribution, BTreeMap::from([(0, 1), (5, 2)]));

        let w = toric(3, 4, 4).weight_distribution(100).unwrap();
        assert_eq!(w.distribution, BTreeMap::from([(0, 1), (16, 2)]));
        assert_eq!(w.next_to_minimal().unwrap(), 16);

        let w = toric(3, 4, 1).weight_distribution(100).unwrap();
        assert_eq!(&w.distinct_weights()[..2], &[8, 10]);
        assert_eq!(w.total(), 81);
        assert_eq!(toric(3, 4, 2).weight_distribution(1000).unwrap().next_to_minimal().unwrap(), 6);
        assert_eq!(toric(3, 4, 3).weight_distribution(1000).unwrap().next_to_minimal().unwrap(), 10);
    }

    #[test]
    fn budget_is_enforced() {
        let c = toric(3, 4, 2);
        assert_eq!(
            c.weight_distribution(728),
            Err(Error::BudgetExceeded {
                required: 729,
                budget: 728
            })
        );
    }

    #[test]
    fn matrix_serde_round_trip() {
        let g = GeneratorMatrix::new(k(5), 3, vec![vec![1, 0, 4], vec![0, 1, 2]]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"q":5,"n":3,"rows":[[1,0,4],[0,1,2]]}"#);
        assert_eq!(serde_json::from_str::<GeneratorMatrix>(&s).unwrap(), g);
        assert!(serde_json::from_str::<GeneratorMatrix>(r#"{"q":5,"n":2,"rows":[[1,2],[2,4]]}"#).is_err());
        assert!(serde_json::from_str::<GeneratorMatrix>(r#"{"q":4,"n":1,"rows":[[1]]}"#).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = (u64, usize, Vec<Vec<u64>>)> {
        (prop::sample::select(vec![2u64, 3, 5]), 1usize..8, 0usize..5).prop_flat_map(|(q, n, k)| {
            (
                Just(q),
                Just(n),
                prop::collection::vec(prop::collection::vec(0..q, n), k),
            )
        })
    }

    proptest! {
        #[test]
        fn distribution_matches_naive((q, n, rows) in arb_matrix()) {
            let g = GeneratorMatrix::from_spanning(k(q), n, &rows).unwrap();
            let w = weight_distribution(&g, 1 << 20).unwrap();
            prop_assert_eq!(w.total(), power(q, g.k()));
            prop_assert_eq!(w.distribution.get(&0).copied(), Some(1));
            prop_assert_eq!(w.distribution, naive_distribution(&g));
        }

        #[test]
        fn support_is_basis_independent((q, n, rows) in arb_matrix()) {
            let g = GeneratorMatrix::from_spanning(k(q), n, &rows).unwrap();
            let mut union = vec![false; n];
            for c in (0..g.k()).map(|_| 0..q).multi_cartesian_product() {
                for (j, x) in g.codeword(&c).into_iter().enumerate() {
                    union[j] |= x != 0;
                }
            }
            let brute: Vec<usize> = (0..n).filter(|&j| union[j]).collect();
            prop_assert_eq!(g.support(), brute.clone());
            prop_assert_eq!(support(&rows, n), brute);
        }

        #[test]
        fn standardize_preserves_code(
            q in prop::sample::select(vec![3u64, 5]),
            seed in prop::collection::vec((0u32..5, 0u32..5, -2i64..3), 1..5),
        ) {
            let pts = PointSet::torus(k(q), 2);
            let gb = vanishing_ideal(&pts, MonomialOrder::GRevLex);
            let gens: Vec<Polynomial> = seed
                .chunks(2)
                .map(|c| Polynomial::from_terms(k(q), 2, c.iter().map(|&(a, b, v)| (m(&[a, b]), v))).unwrap())
                .collect();
            let l = PolySpace::echelonize(k(q), 2, MonomialOrder::GRevLex, &gens).unwrap();
            let st = standardize(&l, &gb).unwrap();
            let before: Vec<_> = l.basis().iter().map(|b| evaluate(b, &pts)).collect();
            let after = evaluate_space(&st, &pts).unwrap();
            let g = GeneratorMatrix::from_spanning(k(q), pts.len(), &before).unwrap();
            prop_assert!(g.same_code(after.matrix()));
        }
    }
}
