//! Relative generalized Hamming weights `M_r(C1, C2)` of standard
//! evaluation codes, computed as `|X| - max |V_X(F)|` over sets `F` of `r`
//! monic polynomials of `L1` with distinct leads; the relative footprint
//! lower bound; and a brute-force oracle working from the definition
//! (minimum support of an `r`-dimensional subcode meeting `C2` trivially).

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::bits;
use crate::codes::{check_budget, evaluate, evaluate_space, power, GeneratorMatrix};
use crate::error::{Error, Result};
use crate::groebner::{
    degree_of_sum, normal_form, vanishing_ideal_with_footprint, Footprint, GroebnerBasis, PointSet,
};
use crate::linalg::{rank_of, Echelon};
use crate::poly::{Monomial, MonomialOrder, PolySpace, Polynomial};
use crate::DEFAULT_BUDGET;

/// Knobs shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of candidates (or subspaces, or subsets) a search may
    /// visit before refusing.
    pub budget: u64,
    /// Recompute `deg S/(I, F)` with a Gröbner basis at every improving
    /// candidate set and fail on disagreement with the point count.
    pub validate: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            validate: false,
        }
    }
}

/// A pair of standard polynomial spaces `L2 ⊊ L1` on a point set `X`.
#[derive(Debug, Clone)]
pub struct RghwProblem {
    points: PointSet,
    order: MonomialOrder,
    l1: PolySpace,
    l2: PolySpace,
    ideal: GroebnerBasis,
    footprint: Footprint,
    eval: Vec<Vec<u64>>,
    l2_coords: Vec<Vec<u64>>,
}

impl RghwProblem {
    /// Both spaces must already lie in the span of the standard monomials
    /// of `I(X)` and `L2` must be a proper subspace of `L1`.
    pub fn new(points: PointSet, order: MonomialOrder, l1: &PolySpace, l2: &PolySpace) -> Result<Self> {
        let (ideal, footprint) = vanishing_ideal_with_footprint(&points, order);
        let mut spaces = Vec::with_capacity(2);
        for l in [l1, l2] {
            if l.nvars() != points.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: points.nvars(),
                    found: l.nvars(),
                });
            }
            if l.field() != points.field() {
                return Err(Error::FieldMismatch {
                    left: points.field().order(),
                    right: l.field().order(),
                });
            }
            let l = PolySpace::echelonize(points.field(), points.nvars(), order, l.basis())?;
            for b in l.basis() {
                if normal_form(b, &ideal)? != *b {
                    return Err(Error::NotStandard(b.to_text(order)));
                }
            }
            spaces.push(l);
        }
        let l2 = spaces.pop().unwrap();
        let l1 = spaces.pop().unwrap();
        if l2.dim() >= l1.dim() || !l2.is_subspace_of(&l1) {
            return Err(Error::NotProperSubspace);
        }
        let eval = l1.basis().iter().map(|b| evaluate(b, &points)).collect();
        let l2_coords = l2
            .basis()
            .iter()
            .map(|b| l1.coordinates(b).expect("subspace checked"))
            .collect();
        Ok(RghwProblem {
            points,
            order,
            l1,
            l2,
            ideal,
            footprint,
            eval,
            l2_coords,
        })
    }

    /// Builds the problem from arbitrary generators by first replacing each
    /// one with its normal form modulo `I(X)`; the codes are unchanged.
    pub fn standardized(
        points: PointSet,
        order: MonomialOrder,
        l1_gens: &[Polynomial],
        l2_gens: &[Polynomial],
    ) -> Result<Self> {
        let (ideal, _) = vanishing_ideal_with_footprint(&points, order);
        let reduce = |gens: &[Polynomial]| -> Result<PolySpace> {
            let nf = gens.iter().map(|g| normal_form(g, &ideal)).collect::<Result<Vec<_>>>()?;
            PolySpace::echelonize(points.field(), points.nvars(), order, &nf)
        };
        let l1 = reduce(l1_gens)?;
        let l2 = reduce(l2_gens)?;
        Self::new(points, order, &l1, &l2)
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn l1(&self) -> &PolySpace {
        &self.l1
    }

    pub fn l2(&self) -> &PolySpace {
        &self.l2
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.ideal
    }

    pub fn footprint(&self) -> &Footprint {
        &self.footprint
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `dim L1 - dim L2`, the largest admissible `r`.
    pub fn gap(&self) -> usize {
        self.l1.dim() - self.l2.dim()
    }

    /// Generator matrices of the two evaluation codes.
    pub fn codes(&self) -> Result<(GeneratorMatrix, GeneratorMatrix)> {
        Ok((
            evaluate_space(&self.l1, &self.points)?.matrix().clone(),
            evaluate_space(&self.l2, &self.points)?.matrix().clone(),
        ))
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.gap() {
            return Err(Error::RankOutOfRange { r, max: self.gap() });
        }
        Ok(())
    }

    /// Number of monic elements of `L1 \ L2`.
    pub fn monic_count(&self) -> u128 {
        let q = self.points.field().order();
        (power(q, self.l1.dim()) - power(q, self.l2.dim())) / (q as u128 - 1)
    }

    fn quotient_basis(&self) -> Echelon {
        let mut e = Echelon::new(self.points.field(), self.l1.dim());
        for c in &self.l2_coords {
            e.insert(c.clone());
        }
        e
    }
}

/// `r` monic polynomials with pairwise distinct leads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    polys: Vec<Polynomial>,
}

impl CandidateSet {
    pub fn new(polys: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let mut leads = Vec::with_capacity(polys.len());
        for p in &polys {
            if !p.is_monic(order) {
                return Err(Error::InvalidParameter(format!("{} is not monic", p.to_text(order))));
            }
            let lm = p.lead_monomial(order).expect("monic").clone();
            if leads.contains(&lm) {
                return Err(Error::InvalidParameter(format!("repeated lead {lm}")));
            }
            leads.push(lm);
        }
        Ok(CandidateSet { polys })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leads(&self, order: MonomialOrder) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.lead_monomial(order).expect("monic").clone())
            .collect()
    }
}

/// Decodes `index` into the free coefficients after pivot `j`: coordinate
/// `j` is 1, earlier ones are 0.
fn monic_coords(k1: usize, j: usize, mut index: u64, q: u64) -> Vec<u64> {
    let mut c = vec![0; k1];
    c[j] = 1;
    for x in c[j + 1..].iter_mut() {
        *x = index % q;
        index /= q;
    }
    c
}

fn independent_mod(base: &Echelon, coords: &[&[u64]]) -> bool {
    let mut e = base.clone();
    coords.iter().all(|c| e.insert(c.to_vec()))
}

/// Every set of `r` monic elements of `L1` with distinct leads that is
/// linearly independent modulo `L2`, grouped by lead tuple.
///
/// Each member lies outside `L2`. Independence modulo `L2` is also
/// required: distinct leads alone do not rule out a dependency modulo `L2`
/// (take `L1 = <1, t1, t2>`, `L2 = <t1>`, `F = {t1 + t2, t2}`), and such
/// sets span subcodes that meet `C2`.
pub fn enumerate_candidates(prob: &RghwProblem, r: usize) -> Result<impl Iterator<Item = CandidateSet> + '_> {
    prob.check_r(r)?;
    let k1 = prob.l1.dim();
    let q = prob.points.field().order();
    let base = prob.quotient_basis();
    let iter = (0..k1).combinations(r).flat_map(move |leads| {
        let base = base.clone();
        leads
            .iter()
            .map(|&j| 0..power(q, k1 - 1 - j) as u64)
            .multi_cartesian_product()
            .filter_map(move |fill| {
                let coords: Vec<Vec<u64>> = leads
                    .iter()
                    .zip(&fill)
                    .map(|(&j, &i)| monic_coords(k1, j, i, q))
                    .collect();
                let refs: Vec<&[u64]> = coords.iter().map(Vec::as_slice).collect();
                independent_mod(&base, &refs).then(|| CandidateSet {
                    polys: coords.iter().map(|c| prob.l1.combination(c)).collect(),
                })
            })
    });
    Ok(iter)
}

/// Monic elements of `L1 \ L2` with their zero sets on `X`, sorted by
/// number of zeros (descending, ties by generation order).
struct Pool {
    k1: usize,
    words: usize,
    coords: Vec<u64>,
    images: Vec<u64>,
    masks: Vec<u64>,
    pivot: Vec<usize>,
    zeros: Vec<usize>,
}

impl Pool {
    fn build(prob: &RghwProblem) -> Pool {
        let k = prob.points.field();
        let q = k.order();
        let k1 = prob.l1.dim();
        let n = prob.n();
        let words = bits::words_for(n);
        let base = prob.quotient_basis();

        // (coordinates, image modulo L2, zero mask, pivot)
        type Entry = (Vec<u64>, Vec<u64>, Vec<u64>, usize);
        let per_pivot: Vec<Vec<Entry>> = (0..k1)
            .into_par_iter()
            .map(|j| {
                let mut out = Vec::new();
                for i in 0..power(q, k1 - 1 - j) as u64 {
                    let c = monic_coords(k1, j, i, q);
                    let mut img = c.clone();
                    base.reduce(&mut img);
                    if img.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let mut word = vec![0u64; n];
                    for (row, &a) in prob.eval.iter().zip(&c) {
                        if a != 0 {
                            for (x, &y) in word.iter_mut().zip(row) {
                                *x = k.add(*x, k.mul(a, y));
                            }
                        }
                    }
                    let mut mask = vec![0u64; words];
                    for (p, &x) in word.iter().enumerate() {
                        if x == 0 {
                            bits::set(&mut mask, p);
                        }
                    }
                    out.push((c, img, mask, j));
                }
                out
            })
            .collect();

        let mut flat: Vec<_> = per_pivot.into_iter().flatten().collect();
        flat.sort_by_key(|(_, _, mask, _)| std::cmp::Reverse(bits::count(mask)));
        let mut pool = Pool {
            k1,
            words,
            coords: Vec::with_capacity(flat.len() * k1),
            images: Vec::with_capacity(flat.len() * k1),
            masks: Vec::with_capacity(flat.len() * words),
            pivot: Vec::with_capacity(flat.len()),
            zeros: Vec::with_capacity(flat.len()),
        };
        for (c, img, mask, j) in flat {
            pool.zeros.push(bits::count(&mask));
            pool.coords.extend(c);
            pool.images.extend(img);
            pool.masks.extend(mask);
            pool.pivot.push(j);
        }
        pool
    }

    fn len(&self) -> usize {
        self.pivot.len()
    }

    fn coords(&self, i: usize) -> &[u64] {
        &self.coords[i * self.k1..(i + 1) * self.k1]
    }

    fn image(&self, i: usize) -> &[u64] {
        &self.images[i * self.k1..(i + 1) * self.k1]
    }

    fn mask(&self, i: usize) -> &[u64] {
        &self.masks[i * self.words..(i + 1) * self.words]
    }
}

struct Search<'a> {
    prob: &'a RghwProblem,
    pool: &'a Pool,
    r: usize,
    validate: bool,
}

impl Search<'_> {
    fn polys(&self, chosen: &[usize]) -> Vec<Polynomial> {
        chosen
            .iter()
            .map(|&i| self.prob.l1.combination(self.pool.coords(i)))
            .collect()
    }

    fn check_leaf(&self, chosen: &[usize], count: usize) -> Result<()> {
        if !self.validate {
            return Ok(());
        }
        let f = self.polys(chosen);
        let deg = degree_of_sum(&self.prob.ideal, &f)?;
        if deg != count {
            return Err(Error::ValidationMismatch(format!(
                "|V_X(F)| = {count} but deg S/(I, F) = {deg} for F = [{}]",
                f.iter().map(|p| p.to_text(self.prob.order)).join(", ")
            )));
        }
        Ok(())
    }

    /// Depth-first extension of `chosen`, pruning any branch whose zero set
    /// cannot exceed `best`. With `first_reaching = Some(t)` the walk stops
    /// at the first set with at least `t` common zeros and returns it.
    fn dfs(
        &self,
        chosen: &mut Vec<usize>,
        mask: &[u64],
        quotient: &Echelon,
        best: &AtomicUsize,
        first_reaching: Option<usize>,
    ) -> Result<Option<Vec<usize>>> {
        let count = bits::count(mask);
        if chosen.len() == self.r {
            if let Some(t) = first_reaching {
                return Ok((count >= t).then(|| chosen.clone()));
            }
            if count > best.load(Ordering::Relaxed) {
                self.check_leaf(chosen, count)?;
                best.fetch_max(count, Ordering::Relaxed);
            }
            return Ok(None);
        }
        let pool = self.pool;
        let start = chosen.last().map_or(0, |&i| i + 1);
        let mut next = vec![0u64; pool.words];
        for b in start..pool.len() {
            let bar = match first_reaching {
                Some(t) => t,
                None => best.load(Ordering::Relaxed) + 1,
            };
            if pool.zeros[b] < bar {
                break;
            }
            if chosen.iter().any(|&a| pool.pivot[a] == pool.pivot[b]) {
                continue;
            }
            bits::and_into(&mut next, mask, pool.mask(b));
            if bits::count(&next) < bar {
                continue;
            }
            let mut q2 = quotient.clone();
            if !q2.insert(pool.image(b).to_vec()) {
                continue;
            }
            chosen.push(b);
            let found = self.dfs(chosen, &next.clone(), &q2, best, first_reaching)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Outcome of the degree-formula search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RghwValue {
    /// `M_r = |X| - max_zeros`.
    pub value: usize,
    /// `max |V_X(F)|` over admissible `F`.
    pub max_zeros: usize,
    /// Number of monic elements of `L1 \ L2` searched over.
    pub candidates: u128,
    /// The first maximizing set in the deterministic search order.
    pub witness: CandidateSet,
}

/// `M_r(L1_X, L2_X) = |X| - max |V_X(F)|`, with the maximum taken over
/// candidate sets as in [`enumerate_candidates`].
///
/// The common-zero count replaces `deg S/(I, F)`; with
/// `opts.validate` every improving set is also checked against a Gröbner
/// basis of `(I, F)`. Candidates are processed in parallel; the result
/// does not depend on the thread count.
pub fn rghw_search(prob: &RghwProblem, r: usize, opts: &SearchOptions) -> Result<RghwValue> {
    prob.check_r(r)?;
    let candidates = prob.monic_count();
    check_budget(candidates, opts.budget)?;
    let pool = Pool::build(prob);
    let search = Search {
        prob,
        pool: &pool,
        r,
        validate: opts.validate,
    };
    let base = Echelon::new(prob.points.field(), prob.l1.dim());
    let best = AtomicUsize::new(0);

    (0..pool.len()).into_par_iter().try_for_each(|a| -> Result<()> {
        if pool.zeros[a] <= best.load(Ordering::Relaxed) && !(a == 0 && r == 1) {
            return Ok(());
        }
        let mut q = base.clone();
        q.insert(pool.image(a).to_vec());
        search.dfs(&mut vec![a], pool.mask(a), &q, &best, None)?;
        Ok(())
    })?;
    let max_zeros = best.load(Ordering::Relaxed);

    let mut witness = None;
    for a in 0..pool.len() {
        if pool.zeros[a] < max_zeros {
            break;
        }
        let mut q = base.clone();
        q.insert(pool.image(a).to_vec());
        let unused = AtomicUsize::new(0);
        if let Some(w) = search.dfs(&mut vec![a], pool.mask(a), &q, &unused, Some(max_zeros))? {
            witness = Some(w);
            break;
        }
    }
    let witness = witness.expect("an admissible set exists for r within the gap");
    if opts.validate && max_zeros == 0 {
        search.check_leaf(&witness, 0)?;
    }
    Ok(RghwValue {
        value: prob.n() - max_zeros,
        max_zeros,
        candidates,
        witness: CandidateSet {
            polys: search.polys(&witness),
        },
    })
}

/// `M_r(L1_X, L2_X)`.
pub fn rghw_degree(prob: &RghwProblem, r: usize, opts: &SearchOptions) -> Result<usize> {
    Ok(rghw_search(prob, r, opts)?.value)
}

/// Generalized Hamming weight `delta_r(L1_X)`; requires `L2 = {0}`.
pub fn ghw(prob: &RghwProblem, r: usize, opts: &SearchOptions) -> Result<usize> {
    if prob.l2.dim() != 0 {
        return Err(Error::InvalidParameter(
            "generalized Hamming weights need an empty second space".into(),
        ));
    }
    rghw_degree(prob, r, opts)
}

/// Leads `m` of `L1` reached by some element of `L1 \ L2`.
///
/// With the basis of `L1` in reduced echelon form, `m = in(b_j)` is reached
/// iff some `b_i` with `i >= j` (lead at most `m`) lies outside `L2`: if
/// `b_j` itself is in `L2`, then `b_j + b_i` has lead `m` and is not.
pub fn lead_set_difference(prob: &RghwProblem) -> Vec<Monomial> {
    let basis = prob.l1.basis();
    let outside: Vec<bool> = basis.iter().map(|b| !prob.l2.contains(b)).collect();
    (0..basis.len())
        .filter(|&j| outside[j..].iter().any(|&o| o))
        .map(|j| prob.l1.leads()[j].clone())
        .collect()
}

/// Relative footprint bound
/// `|X| - max deg S/(in I, M)` over `r`-subsets `M` of
/// [`lead_set_difference`].
pub fn relative_footprint(prob: &RghwProblem, r: usize, opts: &SearchOptions) -> Result<usize> {
    let leads = lead_set_difference(prob);
    if r == 0 || r > leads.len() {
        return Err(Error::RankOutOfRange { r, max: leads.len() });
    }
    check_budget(binomial(leads.len(), r), opts.budget)?;
    let best = leads
        .iter()
        .cloned()
        .combinations(r)
        .par_bridge()
        .map(|m| prob.footprint.count_outside(&m))
        .max()
        .unwrap_or(0);
    Ok(prob.n() - best)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Number of `r`-dimensional subspaces of `F_q^k` (Gaussian binomial).
pub fn subspace_count(q: u64, k: usize, r: usize) -> u128 {
    if r > k {
        return 0;
    }
    (0..k)
        .combinations(r)
        .map(|p| {
            let free: usize = p.iter().enumerate().map(|(i, &pi)| (k - 1 - pi) - (r - 1 - i)).sum();
            power(q, free)
        })
        .fold(0u128, u128::saturating_add)
}

/// `M_r(C1, C2)` from the definition: the minimum support size over all
/// `r`-dimensional subcodes `D` of `C1` with `D ∩ C2 = {0}`.
///
/// Subcodes are enumerated once each as row spaces of `r x k1` coefficient
/// matrices in reduced echelon form.
pub fn rghw_definition_oracle(
    c1: &GeneratorMatrix,
    c2: &GeneratorMatrix,
    r: usize,
    budget: u64,
) -> Result<usize> {
    if c1.n() != c2.n() || c1.field() != c2.field() || !c1.contains(c2) || c2.k() >= c1.k() {
        return Err(Error::NotProperSubspace);
    }
    let (k1, k2) = (c1.k(), c2.k());
    if r == 0 || r > k1 - k2 {
        return Err(Error::RankOutOfRange { r, max: k1 - k2 });
    }
    let field = c1.field();
    let q = field.order();
    let n = c1.n();
    check_budget(subspace_count(q, k1, r), budget)?;

    let pivot_sets: Vec<Vec<usize>> = (0..k1).combinations(r).collect();
    let best = pivot_sets
        .par_iter()
        .map(|piv| {
            let slots: Vec<(usize, usize)> = piv
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| ((p + 1)..k1).filter(|c| !piv.contains(c)).map(move |c| (i, c)))
                .collect();
            let mut best = usize::MAX;
            for fill in slots.iter().map(|_| 0..q).multi_cartesian_product().chain(
                // multi_cartesian_product of nothing yields nothing
                slots.is_empty().then(Vec::new),
            ) {
                let mut coeffs = vec![vec![0u64; k1]; r];
                for (i, &p) in piv.iter().enumerate() {
                    coeffs[i][p] = 1;
                }
                for (&(i, c), &v) in slots.iter().zip(&fill) {
                    coeffs[i][c] = v;
                }
                let rows: Vec<Vec<u64>> = coeffs.iter().map(|c| c1.codeword(c)).collect();
                let mut stacked = rows.clone();
                stacked.extend(c2.rows().iter().cloned());
                if rank_of(field, n, &stacked) < r + k2 {
                    continue;
                }
                let supp = (0..n).filter(|&j| rows.iter().any(|row| row[j] != 0)).count();
                best = best.min(supp);
            }
            best
        })
        .min()
        .unwrap_or(usize::MAX);
    Ok(best)
}
