use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// Sparse polynomial in `F_q[t1, ..., ts]`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        Self::monomial(field, Monomial::one(nvars), c)
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: i64) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(field, nvars);
        p.add_term(m, field.reduce(c));
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, combining
    /// like terms.
    pub fn from_terms<I>(field: PrimeField, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            p.add_term(m, field.reduce(c));
        }
        Ok(p)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn lead_monomial(&self, ord: MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| ord.cmp(a, b))
    }

    pub fn lead_coefficient(&self, ord: MonomialOrder) -> Option<u64> {
        self.lead_monomial(ord).map(|m| self.terms[m])
    }

    /// The leading term with respect to `ord`.
    pub fn lead(&self, ord: MonomialOrder) -> Result<(Monomial, FieldElement)> {
        let m = self.lead_monomial(ord).ok_or(Error::ZeroPolynomial)?;
        let c = self.field.element(self.terms[m] as i64);
        Ok((m.clone(), c))
    }

    pub fn is_monic(&self, ord: MonomialOrder) -> bool {
        self.lead_coefficient(ord) == Some(1)
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.lead_coefficient(ord) {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.field.inv(c).expect("nonzero lead")),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.field.order();
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), self.field.mul(v, c)))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let c = c % self.field.order();
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, &v)| (t.mul(m), self.field.mul(v, c)))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let k = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = k.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self -= c * m * g`, in place.
    pub(crate) fn sub_scaled(&mut self, c: u64, m: &Monomial, g: &Polynomial) {
        let k = self.field;
        let nc = k.neg(c % k.order());
        if nc == 0 {
            return;
        }
        for (t, &v) in &g.terms {
            self.add_term(t.mul(m), k.mul(v, nc));
        }
    }

    /// Value at a point given as canonical residues.
    pub fn eval_raw(&self, point: &[u64]) -> u64 {
        let k = self.field;
        self.terms
            .iter()
            .fold(0, |acc, (m, &c)| k.add(acc, k.mul(c, m.evaluate(k, point))))
    }

    pub fn evaluate(&self, point: &[i64]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let p: Vec<u64> = point.iter().map(|&v| self.field.reduce(v)).collect();
        Ok(self.field.element(self.eval_raw(&p) as i64))
    }

    /// Canonical text form: terms in descending order, coefficients as
    /// centered residues, e.g. `t1*t2^2 - t1*t2`.
    pub fn to_text(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut mons: Vec<&Monomial> = self.terms.keys().collect();
        mons.sort_by(|a, b| ord.cmp(b, a));
        let mut out = String::new();
        for (i, m) in mons.into_iter().enumerate() {
            let c = self.field.centered(self.terms[m]);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs == 1 {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}*{m}"));
            }
        }
        out
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(MonomialOrder::default()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(self.field.neg(1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (m, &c) in &self.terms {
            for (t, &d) in &rhs.terms {
                out.add_term(m.mul(t), self.field.mul(c, d));
            }
        }
        out
    }
}

/// Multivariate division of `f` by the ordered list `divisors`.
///
/// Returns `(quotients, remainder)` with `f = sum q_i g_i + r`, where no
/// monomial of `r` is divisible by any `lead(g_i)`. At each step the first
/// divisor whose lead divides the current leading term is used.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    ord: MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let k = f.field;
    let mut leads = Vec::with_capacity(divisors.len());
    for g in divisors {
        if g.nvars != f.nvars {
            return Err(Error::DimensionMismatch {
                expected: f.nvars,
                found: g.nvars,
            });
        }
        if g.field != k {
            return Err(Error::FieldMismatch {
                left: k.order(),
                right: g.field.order(),
            });
        }
        let (m, c) = g.lead(ord)?;
        leads.push((m, k.inv(c.value())?));
    }
    let mut quotients = vec![Polynomial::zero(k, f.nvars); divisors.len()];
    let mut rem = Polynomial::zero(k, f.nvars);
    let mut p = f.clone();
    while let Some(lm) = p.lead_monomial(ord).cloned() {
        let lc = p.terms[&lm];
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (gm, ginv))| gm.quotient_of(&lm).map(|t| (i, t, k.mul(lc, *ginv))));
        match hit {
            Some((i, t, c)) => {
                quotients[i].add_term(t.clone(), c);
                p.sub_scaled(c, &t, &divisors[i]);
            }
            None => {
                p.terms.remove(&lm);
                rem.add_term(lm, lc);
            }
        }
    }
    Ok((quotients, rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn poly(q: u64, terms: &[(&[u32], i64)]) -> Polynomial {
        let nvars = terms.first().map_or(2, |t| t.0.len());
        Polynomial::from_terms(
            k(q),
            nvars,
            terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), *c)),
        )
        .unwrap()
    }

    #[test]
    fn leading_terms() {
        let f = poly(3, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let (m, c) = f.lead(MonomialOrder::Lex).unwrap();
        assert_eq!((m.exponents(), c.value()), (&[1u32, 0][..], 1));

        let g = poly(3, &[(&[0, 3], 2), (&[1, 1], 1)]);
        let (m, c) = g.lead(MonomialOrder::GRevLex).unwrap();
        assert_eq!((m.exponents(), c.value()), (&[0u32, 3][..], 2));

        let h = poly(3, &[(&[1, 2], 1), (&[1, 1], -1)]);
        let (m, c) = h.lead(MonomialOrder::GRevLex).unwrap();
        assert_eq!((m.exponents(), c.value()), (&[1u32, 2][..], 1));

        assert_eq!(
            Polynomial::zero(k(3), 2).lead(MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn evaluation() {
        let f = poly(3, &[(&[2, 0], 1), (&[1, 0], -1)]);
        assert_eq!(f.evaluate(&[2, 0]).unwrap().value(), 2);
        assert_eq!(Polynomial::constant(k(3), 2, 1).evaluate(&[2, 1]).unwrap().value(), 1);
        let g = poly(3, &[(&[1, 2], 1), (&[1, 1], -1)]);
        assert_eq!(g.evaluate(&[1, 1]).unwrap().value(), 0);
        assert!(g.evaluate(&[1]).is_err());
    }

    #[test]
    fn degree_of_zero_is_minus_one() {
        assert_eq!(Polynomial::zero(k(5), 3).degree(), -1);
        assert_eq!(poly(5, &[(&[1, 2, 0], 3)]).degree(), 3);
    }

    #[test]
    fn text_form_uses_centered_coefficients() {
        let f = poly(3, &[(&[1, 2], 1), (&[1, 1], 2)]);
        assert_eq!(f.to_text(MonomialOrder::GRevLex), "t1*t2^2 - t1*t2");
        let g = poly(5, &[(&[4, 0], 1), (&[0, 0], -1)]);
        assert_eq!(g.to_string(), "t1^4 - 1");
        let h = poly(7, &[(&[0, 1], 3), (&[0, 0], 2)]);
        assert_eq!(h.to_string(), "3*t2 + 2");
    }

    #[test]
    fn division_single_step() {
        let f = poly(5, &[(&[2], 1)]);
        let g = poly(5, &[(&[2], 1), (&[0], -1)]);
        let (qs, r) = divide(&f, std::slice::from_ref(&g), MonomialOrder::GRevLex).unwrap();
        assert_eq!(qs[0], Polynomial::constant(k(5), 1, 1));
        assert_eq!(r, Polynomial::constant(k(5), 1, 1));
    }

    #[test]
    fn division_nothing_divisible() {
        let f = poly(3, &[(&[0, 1], 1), (&[0, 0], 2)]);
        let g = poly(3, &[(&[2, 0], 1), (&[1, 0], -1)]);
        let (qs, r) = divide(&f, &[g], MonomialOrder::GRevLex).unwrap();
        assert!(qs[0].is_zero());
        assert_eq!(r, f);
    }

    #[test]
    fn division_by_five_point_basis() {
        let gb = vec![
            poly(3, &[(&[2, 0], 1), (&[1, 0], -1)]),
            poly(3, &[(&[0, 3], 1), (&[0, 1], -1)]),
            poly(3, &[(&[1, 2], 1), (&[1, 1], -1)]),
        ];
        let f = poly(3, &[(&[1, 2], 1)]);
        let (_, r) = divide(&f, &gb, MonomialOrder::GRevLex).unwrap();
        assert_eq!(r, poly(3, &[(&[1, 1], 1)]));
        for p in [[0, 0], [1, 0], [0, 1], [1, 1], [0, 2]] {
            assert_eq!(f.eval_raw(&p), r.eval_raw(&p));
        }
    }

    #[test]
    fn zero_divisor_rejected() {
        let f = poly(3, &[(&[1, 0], 1)]);
        assert_eq!(
            divide(&f, &[Polynomial::zero(k(3), 2)], MonomialOrder::Lex).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    fn arb_poly(q: u64, nvars: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..=4, nvars), 0i64..q as i64), 0..6)
            .prop_map(move |ts| {
                let ts = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= 4);
                Polynomial::from_terms(k(q), nvars, ts.map(|(e, c)| (Monomial::new(e), c))).unwrap()
            })
    }

    fn arb_case() -> impl Strategy<Value = (Polynomial, Vec<Polynomial>, MonomialOrder)> {
        (prop_oneof![Just(3u64), Just(5u64)], 1usize..=3).prop_flat_map(|(q, n)| {
            (
                arb_poly(q, n),
                prop::collection::vec(arb_poly(q, n).prop_filter("nonzero", |p| !p.is_zero()), 1..4),
                prop_oneof![
                    Just(MonomialOrder::Lex),
                    Just(MonomialOrder::GrLex),
                    Just(MonomialOrder::GRevLex)
                ],
            )
        })
    }

    proptest! {
        #[test]
        fn division_reconstructs_dividend((f, gs, ord) in arb_case()) {
            let (qs, r) = divide(&f, &gs, ord).unwrap();
            let mut sum = r.clone();
            for (q, g) in qs.iter().zip(&gs) {
                sum = &sum + &(q * g);
                if !q.is_zero() {
                    let lead_qg = (q * g).lead_monomial(ord).cloned().unwrap();
                    let lead_f = f.lead_monomial(ord).unwrap();
                    prop_assert_ne!(ord.cmp(&lead_qg, lead_f), std::cmp::Ordering::Greater);
                }
            }
            prop_assert_eq!(sum, f);
            for m in r.monomials() {
                for g in &gs {
                    prop_assert!(!g.lead_monomial(ord).unwrap().divides(m));
                }
            }
        }
    }
}
