//! Gröbner bases of zero-dimensional ideals over `F_q`, vanishing ideals of
//! finite point sets, footprints (standard monomials), degrees and affine
//! varieties.
//!
//! Every ideal handled here contains the vanishing ideal of a finite point
//! set, so all quotients are zero-dimensional and degrees are counts of
//! standard monomials.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{divide, Monomial, MonomialOrder, Polynomial};

/// A nonempty list of pairwise-distinct points of `F_q^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: PrimeField,
    nvars: usize,
    points: Vec<Vec<u64>>,
}

impl PointSet {
    /// Coordinates are reduced modulo `q`, so `-1` is accepted for `q - 1`.
    pub fn new(field: PrimeField, nvars: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let pts = points
            .into_iter()
            .map(|p| p.into_iter().map(|v| field.reduce(v)).collect())
            .collect();
        Self::from_residues(field, nvars, pts)
    }

    pub fn from_residues(field: PrimeField, nvars: usize, points: Vec<Vec<u64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if p.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.len(),
                });
            }
            if let Some(&v) = p.iter().find(|&&v| v >= field.order()) {
                return Err(Error::InvalidParameter(format!(
                    "coordinate {v} is not a canonical residue mod {}",
                    field.order()
                )));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        Ok(PointSet {
            field,
            nvars,
            points,
        })
    }

    /// The affine torus `(K*)^s` in lexicographic order.
    pub fn torus(field: PrimeField, nvars: usize) -> Self {
        let units: Vec<u64> = field.nonzero_elements().iter().map(|e| e.value()).collect();
        let points = (0..nvars)
            .map(|_| units.iter().copied())
            .multi_cartesian_product()
            .collect::<Vec<_>>();
        let points = if nvars == 0 { vec![vec![]] } else { points };
        PointSet {
            field,
            nvars,
            points,
        }
    }

    /// The Cartesian product `A_1 x ... x A_s` in lexicographic order.
    pub fn cartesian(field: PrimeField, subsets: &[Vec<u64>]) -> Result<Self> {
        if subsets.iter().any(|a| a.is_empty()) {
            return Err(Error::EmptyPointSet);
        }
        let points = subsets
            .iter()
            .map(|a| a.iter().copied())
            .multi_cartesian_product()
            .collect();
        Self::from_residues(field, subsets.len(), points)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    /// The points at the given positions, or `None` if that selection is empty.
    pub fn subset(&self, indices: &[usize]) -> Option<PointSet> {
        if indices.is_empty() {
            return None;
        }
        Some(PointSet {
            field: self.field,
            nvars: self.nvars,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        })
    }
}

/// A Gröbner basis with respect to a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leads(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.lead_monomial(self.order).expect("nonzero generator").clone())
            .collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leads().iter().any(Monomial::is_one)
    }
}

/// The standard monomials of a zero-dimensional monomial ideal, sorted in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Footprint {
    order: MonomialOrder,
    monomials: Vec<Monomial>,
}

impl Footprint {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Standard monomials of total degree at most `d`.
    pub fn degree_at_most(&self, d: u32) -> Vec<Monomial> {
        self.monomials
            .iter()
            .filter(|m| m.degree() <= d)
            .cloned()
            .collect()
    }

    /// Number of standard monomials divisible by none of `extra`, i.e. the
    /// degree of `S/(L, extra)` where `L` is the monomial ideal of this
    /// footprint.
    pub fn count_outside(&self, extra: &[Monomial]) -> usize {
        self.monomials
            .iter()
            .filter(|m| !extra.iter().any(|e| e.divides(m)))
            .count()
    }
}

fn spoly(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.lead(ord).expect("nonzero");
    let (gm, gc) = g.lead(ord).expect("nonzero");
    let k = f.field();
    let l = fm.lcm(&gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), k.inv(fc.value()).unwrap());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), k.inv(gc.value()).unwrap());
    &a - &b
}

/// Turns any Gröbner basis into the reduced one: drops generators whose lead
/// is divisible by another lead, interreduces, makes monic and sorts by lead.
fn reduce_basis(mut g: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    g.sort_by(|a, b| ord.cmp(a.lead_monomial(ord).unwrap(), b.lead_monomial(ord).unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in g {
        let lm = p.lead_monomial(ord).unwrap();
        if !minimal.iter().any(|m| m.lead_monomial(ord).unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let (_, r) = divide(&minimal[i], &others, ord).expect("nonzero divisors");
        out.push(r.monic(ord));
    }
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens` (Buchberger's
/// algorithm, normal selection strategy, coprime-lead criterion).
pub fn buchberger(
    field: PrimeField,
    nvars: usize,
    gens: &[Polynomial],
    ord: MonomialOrder,
) -> Result<GroebnerBasis> {
    for f in gens {
        if f.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: f.nvars(),
            });
        }
        if f.field() != field {
            return Err(Error::FieldMismatch {
                left: field.order(),
                right: f.field().order(),
            });
        }
    }
    let mut g: Vec<Polynomial> = gens.iter().filter(|f| !f.is_zero()).map(|f| f.monic(ord)).collect();
    if g.is_empty() {
        return Err(Error::NoGenerators);
    }
    let unit = |field, nvars| GroebnerBasis {
        field,
        nvars,
        order: ord,
        generators: vec![Polynomial::constant(field, nvars, 1)],
        reduced: true,
    };
    if g.iter().any(|f| f.lead_monomial(ord).unwrap().is_one()) {
        return Ok(unit(field, nvars));
    }
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).tuple_combinations().collect();
    while !pairs.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize)| {
            g[i].lead_monomial(ord).unwrap().lcm(g[j].lead_monomial(ord).unwrap())
        };
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (la, lb) = (lcm_of(&pairs[a]), lcm_of(&pairs[b]));
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| ord.cmp(&la, &lb))
                    .then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (g[i].lead_monomial(ord).unwrap(), g[j].lead_monomial(ord).unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let s = spoly(&g[i], &g[j], ord);
        let (_, r) = divide(&s, &g, ord)?;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(ord);
        if r.lead_monomial(ord).unwrap().is_one() {
            return Ok(unit(field, nvars));
        }
        let new = g.len();
        g.push(r);
        pairs.extend((0..new).map(|k| (k, new)));
    }
    Ok(GroebnerBasis {
        field,
        nvars,
        order: ord,
        generators: reduce_basis(g, ord),
        reduced: true,
    })
}

/// Reduced Gröbner basis of the vanishing ideal `I(X)` together with its
/// footprint.
///
/// Candidate monomials are visited in increasing order; each one is either a
/// new standard monomial (its evaluation vector on `X` is independent of the
/// previous ones) or the lead of a basis element `t - sum c_i m_i` read off
/// from the dependency.
pub fn vanishing_ideal_with_footprint(
    points: &PointSet,
    ord: MonomialOrder,
) -> (GroebnerBasis, Footprint) {
    let k = points.field;
    let s = points.nvars;
    let n = points.len();
    // Echelon rows of evaluation vectors with the polynomial each row
    // evaluates from.
    let mut rows: Vec<(Vec<u64>, usize, Polynomial)> = Vec::new();
    let mut standard: Vec<Monomial> = Vec::new();
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut gen_leads: Vec<Monomial> = Vec::new();
    let mut candidates: Vec<Monomial> = vec![Monomial::one(s)];
    let mut visited: HashSet<Monomial> = HashSet::new();

    while let Some(pos) = (0..candidates.len()).min_by(|&a, &b| ord.cmp(&candidates[a], &candidates[b])) {
        let t = candidates.swap_remove(pos);
        if !visited.insert(t.clone()) || gen_leads.iter().any(|l| l.divides(&t)) {
            continue;
        }
        let mut v: Vec<u64> = points.points.iter().map(|p| t.evaluate(k, p)).collect();
        let mut poly = Polynomial::monomial(k, t.clone(), 1);
        for (row, piv, p) in &rows {
            let f = v[*piv];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = k.sub(*x, k.mul(f, y));
                }
                poly = &poly - &p.scale(f);
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => {
                gen_leads.push(t);
                gens.push(poly);
            }
            Some(piv) => {
                let inv = k.inv(v[piv]).expect("nonzero pivot");
                for x in v.iter_mut() {
                    *x = k.mul(*x, inv);
                }
                rows.push((v, piv, poly.scale(inv)));
                for i in 0..s {
                    let mut e = t.exponents().to_vec();
                    e[i] += 1;
                    candidates.push(Monomial::new(e));
                }
                standard.push(t);
            }
        }
    }
    debug_assert_eq!(standard.len(), n);
    (
        GroebnerBasis {
            field: k,
            nvars: s,
            order: ord,
            generators: gens,
            reduced: true,
        },
        Footprint {
            order: ord,
            monomials: standard,
        },
    )
}

/// Reduced Gröbner basis of `I(X)`.
pub fn vanishing_ideal(points: &PointSet, ord: MonomialOrder) -> GroebnerBasis {
    vanishing_ideal_with_footprint(points, ord).0
}

/// Remainder of `f` on division by `gb`; the canonical representative of
/// `f` modulo the ideal when `gb` is a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    Ok(divide(f, &gb.generators, gb.order)?.1)
}

/// Minimal monomial generators of the initial ideal.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    let leads = gb.leads();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in leads.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, l)| j != i && l.divides(m) && (l != m || j < i));
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

/// Standard monomials of the monomial ideal generated by `lead_gens`.
///
/// Fails unless every variable has a pure power among the generators (or
/// the ideal is the whole ring).
pub fn footprint(lead_gens: &[Monomial], nvars: usize, ord: MonomialOrder) -> Result<Footprint> {
    if let Some(m) = lead_gens.iter().find(|m| m.nvars() != nvars) {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: m.nvars(),
        });
    }
    if lead_gens.iter().any(Monomial::is_one) {
        return Ok(Footprint {
            order: ord,
            monomials: Vec::new(),
        });
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in lead_gens {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if let Some(i) = bounds.iter().position(|&b| b == u32::MAX) {
        return Err(Error::NotZeroDimensional(i + 1));
    }
    let mut monomials: Vec<Monomial> = bounds
        .iter()
        .map(|&b| 0..b)
        .multi_cartesian_product()
        .map(Monomial::new)
        .filter(|m| !lead_gens.iter().any(|g| g.divides(m)))
        .collect();
    if nvars == 0 {
        monomials = vec![Monomial::one(0)];
    }
    monomials.sort_by(|a, b| ord.cmp(a, b));
    Ok(Footprint {
        order: ord,
        monomials,
    })
}

/// Footprint of the ideal with Gröbner basis `gb`.
pub fn footprint_of(gb: &GroebnerBasis) -> Result<Footprint> {
    footprint(&initial_ideal(gb), gb.nvars, gb.order)
}

/// `deg(S/I) = dim_K(S/I)` for a zero-dimensional ideal.
pub fn degree_zero_dim(gb: &GroebnerBasis) -> Result<usize> {
    Ok(footprint_of(gb)?.len())
}

/// Affine Hilbert function: standard monomials of degree at most `d`.
pub fn hilbert_affine(gb: &GroebnerBasis, d: u32) -> Result<usize> {
    Ok(footprint_of(gb)?.degree_at_most(d).len())
}

/// `d_1...d_s - (d_1 - a_1)...(d_s - a_s)`, the degree of
/// `S/(t_1^{d_1}, ..., t_s^{d_s}, t^a)`. Requires `a_i < d_i` for all `i`.
pub fn box_degree(d: &[u64], a: &[u64]) -> Result<u64> {
    if d.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: d.len(),
            found: a.len(),
        });
    }
    if let Some(i) = (0..d.len()).find(|&i| a[i] >= d[i]) {
        return Err(Error::InvalidParameter(format!(
            "exponent a_{} = {} is not below d_{} = {}",
            i + 1,
            a[i],
            i + 1,
            d[i]
        )));
    }
    let full: u64 = d.iter().product();
    let rest: u64 = d.iter().zip(a).map(|(x, y)| x - y).product();
    Ok(full - rest)
}

/// Positions of the points of `X` where every polynomial of `f` vanishes.
pub fn variety_in(f: &[Polynomial], points: &PointSet) -> Result<Vec<usize>> {
    if let Some(p) = f.iter().find(|p| p.nvars() != points.nvars) {
        return Err(Error::DimensionMismatch {
            expected: points.nvars,
            found: p.nvars(),
        });
    }
    Ok(points
        .points
        .iter()
        .enumerate()
        .filter(|(_, p)| f.iter().all(|g| g.eval_raw(p) == 0))
        .map(|(i, _)| i)
        .collect())
}

/// The three equivalent emptiness conditions for `V_X(F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptinessCriteria {
    /// `(I(X) : (F)) = I(X)`.
    pub colon_equals_ideal: bool,
    /// `V_X(F)` is empty.
    pub variety_empty: bool,
    /// `(I(X), F) = S`.
    pub unit_ideal: bool,
}

impl EmptinessCriteria {
    pub fn agree(&self) -> bool {
        self.colon_equals_ideal == self.variety_empty && self.variety_empty == self.unit_ideal
    }
}

fn require_nonzero_set(f: &[Polynomial]) -> Result<()> {
    if f.iter().all(Polynomial::is_zero) {
        return Err(Error::NoGenerators);
    }
    Ok(())
}

/// Evaluates the three emptiness conditions independently. The colon ideal
/// is `I(X \ V_X(F))`, valid because `I(X)` is an intersection of maximal
/// ideals. Empty or all-zero `F` is rejected.
pub fn emptiness_criteria(
    points: &PointSet,
    f: &[Polynomial],
    ord: MonomialOrder,
) -> Result<EmptinessCriteria> {
    require_nonzero_set(f)?;
    let variety = variety_in(f, points)?;
    let ideal = vanishing_ideal(points, ord);
    let outside: Vec<usize> = (0..points.len()).filter(|i| !variety.contains(i)).collect();
    let colon_equals_ideal = match points.subset(&outside) {
        Some(rest) => vanishing_ideal(&rest, ord).generators == ideal.generators,
        None => false,
    };
    let mut gens = ideal.generators.clone();
    gens.extend(f.iter().cloned());
    let sum = buchberger(points.field, points.nvars, &gens, ord)?;
    let one = Polynomial::constant(points.field, points.nvars, 1);
    let unit_ideal = normal_form(&one, &sum)?.is_zero();
    Ok(EmptinessCriteria {
        colon_equals_ideal,
        variety_empty: variety.is_empty(),
        unit_ideal,
    })
}

/// `deg S/(I, F)` computed from a Gröbner basis of `(I, F)`, where `gb` is a
/// Gröbner basis of a zero-dimensional ideal `I`.
pub fn degree_of_sum(gb: &GroebnerBasis, f: &[Polynomial]) -> Result<usize> {
    let mut gens = gb.generators.clone();
    gens.extend(f.iter().filter(|p| !p.is_zero()).cloned());
    let sum = buchberger(gb.field, gb.nvars, &gens, gb.order)?;
    degree_zero_dim(&sum)
}

/// `(deg S/(I, F), deg S/(in I, in F))` for `I = I(X)`.
///
/// The first value comes from a Gröbner basis of `(I, F)` and equals
/// `|V_X(F)|`; the second is the footprint bound. When `V_X(F)` is empty
/// the first value is 0 and no Gröbner basis is computed.
pub fn degree_with(points: &PointSet, f: &[Polynomial], ord: MonomialOrder) -> Result<(usize, usize)> {
    let variety = variety_in(f, points)?;
    let (ideal, fp) = vanishing_ideal_with_footprint(points, ord);
    let f_leads: Vec<Monomial> = f
        .iter()
        .filter_map(|p| p.lead_monomial(ord).cloned())
        .collect();
    let bound = fp.count_outside(&f_leads);
    if variety.is_empty() {
        return Ok((0, bound));
    }
    Ok((degree_of_sum(&ideal, f)?, bound))
}
