//! Problem files: a JSON document naming the field, the point set and the
//! polynomial spaces.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "q": 3,
//!   "s": 2,
//!   "order": "grevlex",
//!   "points": [[0, 0], [1, 0], [0, 1], [1, 1], [0, -1]],
//!   "l1": {"degree_at_most": 2},
//!   "l2": {"degree_at_most": 1},
//!   "r": [1, 2]
//! }
//! ```
//!
//! Instead of `points`, a `family` may be given:
//! `{"kind": "cartesian", "subsets": [[0, 1], [0, 1, 2]]}`,
//! `{"kind": "torus"}`, `{"kind": "squarefree"}` or
//! `{"kind": "hypersimplex-torus"}` (the last three all use the torus
//! `(F_q^*)^s`).
//!
//! A space is either a list of polynomials or one of the named spaces
//! `{"degree_at_most": d}`, `{"squarefree_degree": d}`,
//! `{"squarefree_degree_at_most": d}` and `{"cartesian_degree": d}`. A
//! polynomial is a string (`"t1^2*t2 - t2"`), a list of
//! `[[exponents], coefficient]` pairs, or a bare exponent vector for a
//! monomial.

use std::path::Path;

use anyhow::{bail, Context, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use rghw_core::families::{squarefree_monomials, squarefree_monomials_at_most, CartesianSpec, ExponentProfile};
use rghw_core::{Monomial, MonomialOrder, PointSet, Polynomial, PrimeField, RghwProblem};

use crate::parse::parse_polynomial;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: u32,
    pub q: u64,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l1: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    Cartesian { subsets: Vec<Vec<i64>> },
    Torus,
    Squarefree,
    HypersimplexTorus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceSpec {
    Polys(Vec<PolyItem>),
    Named(NamedSpace),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum NamedSpace {
    /// All monomials of degree at most `d`.
    DegreeAtMost(i64),
    /// Squarefree monomials of degree exactly `d`.
    SquarefreeDegree(usize),
    /// Squarefree monomials of degree at most `d`.
    SquarefreeDegreeAtMost(i64),
    /// Monomials with `deg_{t_i} < |A_i|` and degree at most `d`; needs a
    /// Cartesian family.
    CartesianDegree(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyItem {
    Text(String),
    Terms(Vec<(Vec<u32>, i64)>),
    Monomial(Vec<u32>),
}

/// A problem file resolved against the field.
#[derive(Debug, Clone)]
pub struct Problem {
    pub file: ProblemFile,
    pub field: PrimeField,
    pub order: MonomialOrder,
    pub points: PointSet,
    pub cartesian: Option<CartesianSpec>,
}

pub fn read(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: invalid problem file", path.display()))
}

impl Problem {
    /// `order` overrides the file's order when given.
    pub fn resolve(file: ProblemFile, order: Option<MonomialOrder>) -> Result<Self> {
        if file.schema != SCHEMA_VERSION {
            bail!("field `schema`: unsupported version {} (expected {SCHEMA_VERSION})", file.schema);
        }
        let field = PrimeField::new(file.q).context("field `q`")?;
        if file.s == 0 {
            bail!("field `s`: need at least one variable");
        }
        let order = match (order, &file.order) {
            (Some(o), _) => o,
            (None, Some(name)) => name.parse::<MonomialOrder>().context("field `order`")?,
            (None, None) => MonomialOrder::default(),
        };
        let mut cartesian = None;
        let points = match (&file.points, &file.family) {
            (Some(_), Some(_)) => bail!("give either `points` or `family`, not both"),
            (None, None) => bail!("missing `points` or `family`"),
            (Some(pts), None) => {
                if let Some((i, p)) = pts.iter().find_position(|p| p.len() != file.s) {
                    bail!("field `points[{i}]`: expected {} coordinates, found {}", file.s, p.len());
                }
                PointSet::new(field, file.s, pts.clone()).context("field `points`")?
            }
            (None, Some(Family::Cartesian { subsets })) => {
                if subsets.len() != file.s {
                    bail!("field `family.subsets`: expected {} subsets, found {}", file.s, subsets.len());
                }
                let spec = CartesianSpec::new(field, subsets.clone()).context("field `family.subsets`")?;
                let pts = spec.points();
                cartesian = Some(spec);
                pts
            }
            (None, Some(Family::Torus | Family::Squarefree | Family::HypersimplexTorus)) => PointSet::torus(field, file.s),
        };
        Ok(Problem {
            file,
            field,
            order,
            points,
            cartesian,
        })
    }

    pub fn space(&self, name: &str, spec: &SpaceSpec) -> Result<Vec<Polynomial>> {
        let s = self.file.s;
        let monomials = |ms: Vec<Monomial>| -> Vec<Polynomial> {
            ms.into_iter().map(|m| Polynomial::monomial(self.field, m, 1)).collect()
        };
        Ok(match spec {
            SpaceSpec::Polys(items) => items
                .iter()
                .enumerate()
                .map(|(i, item)| self.poly(item).with_context(|| format!("field `{name}[{i}]`")))
                .collect::<Result<_>>()?,
            SpaceSpec::Named(NamedSpace::DegreeAtMost(d)) => {
                let d = *d;
                let all: Vec<Monomial> = (0..s)
                    .map(|_| 0..=d.max(0) as u32)
                    .multi_cartesian_product()
                    .filter(|e| e.iter().map(|&x| x as i64).sum::<i64>() <= d)
                    .map(Monomial::new)
                    .collect();
                monomials(all)
            }
            SpaceSpec::Named(NamedSpace::SquarefreeDegree(d)) => {
                if *d > s {
                    bail!("field `{name}`: squarefree degree {d} exceeds s = {s}");
                }
                monomials(squarefree_monomials(s, *d))
            }
            SpaceSpec::Named(NamedSpace::SquarefreeDegreeAtMost(d)) => monomials(squarefree_monomials_at_most(s, *d)),
            SpaceSpec::Named(NamedSpace::CartesianDegree(d)) => {
                let Some(spec) = &self.cartesian else {
                    bail!("field `{name}`: `cartesian_degree` needs a cartesian family");
                };
                let profile = ExponentProfile::new(&spec.dims());
                monomials(
                    profile
                        .at_most(*d)
                        .into_iter()
                        .map(|a| Monomial::new(a.into_iter().map(|e| e as u32).collect()))
                        .collect(),
                )
            }
        })
    }

    fn poly(&self, item: &PolyItem) -> Result<Polynomial> {
        let s = self.file.s;
        let check_len = |e: &[u32]| -> Result<()> {
            if e.len() != s {
                bail!("exponent vector {e:?} has {} entries, expected {s}", e.len());
            }
            Ok(())
        };
        Ok(match item {
            PolyItem::Text(t) => parse_polynomial(t, self.field, s)?,
            PolyItem::Monomial(e) => {
                check_len(e)?;
                Polynomial::monomial(self.field, Monomial::new(e.clone()), 1)
            }
            PolyItem::Terms(terms) => {
                for (e, _) in terms {
                    check_len(e)?;
                }
                Polynomial::from_terms(self.field, s, terms.iter().map(|(e, c)| (Monomial::new(e.clone()), *c)))?
            }
        })
    }

    /// Both spaces standardized against `I(X)`; a missing `l2` is the zero
    /// space.
    pub fn rghw_problem(&self) -> Result<RghwProblem> {
        let Some(l1) = &self.file.l1 else {
            bail!("missing field `l1`");
        };
        let l1 = self.space("l1", l1)?;
        let l2 = match &self.file.l2 {
            Some(l2) => self.space("l2", l2)?,
            None => Vec::new(),
        };
        RghwProblem::standardized(self.points.clone(), self.order, &l1, &l2).map_err(|e| match e {
            rghw_core::Error::NotProperSubspace => {
                anyhow::anyhow!("`l2` must be a proper subspace of `l1` after standardization")
            }
            other => other.into(),
        })
    }
}
