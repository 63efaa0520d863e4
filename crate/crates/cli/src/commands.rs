//! Subcommand implementations.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Result};

use rghw_core::codes::evaluate_space;
use rghw_core::families::{toric_code, toric_deg1_weight, toric_min_distance_formula, HypersimplexSpec};
use rghw_core::groebner::vanishing_ideal_with_footprint;
use rghw_core::rghw::{relative_footprint, rghw_definition_oracle, rghw_search};
use rghw_core::{Error, MonomialOrder, PolySpace, PrimeField, SearchOptions};

use crate::problem::{self, Problem};
use crate::report::{InputEcho, RValue, ResultReport, ToricRow, ToricTable, VanishingReport, WeightsReport};

pub struct Settings {
    pub order: Option<MonomialOrder>,
    pub validate: bool,
    pub budget: u64,
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

fn refusal(e: &Error) -> Option<String> {
    matches!(e, Error::BudgetExceeded { .. }).then(|| e.to_string())
}

pub fn vanishing_ideal(path: &Path, settings: &Settings) -> Result<VanishingReport> {
    let start = Instant::now();
    let problem = Problem::resolve(problem::read(path)?, settings.order)?;
    let ord = problem.order;
    let (gb, fp) = vanishing_ideal_with_footprint(&problem.points, ord);
    let mut generators: Vec<_> = gb.generators().to_vec();
    generators.sort_by(|a, b| ord.cmp(a.lead_monomial(ord).unwrap(), b.lead_monomial(ord).unwrap()));
    Ok(VanishingReport {
        q: problem.field.order(),
        s: problem.file.s,
        order: ord.to_string(),
        generators: generators.iter().map(|g| g.to_text(ord)).collect(),
        footprint: fp.monomials().iter().map(|m| m.to_string()).collect(),
        degree: fp.len(),
        timing_us: micros(start),
    })
}

pub fn rghw(path: &Path, settings: &Settings) -> Result<ResultReport> {
    let start = Instant::now();
    let problem = Problem::resolve(problem::read(path)?, settings.order)?;
    let ord = problem.order;
    let prob = problem.rghw_problem()?;
    let rs: Vec<usize> = match &problem.file.r {
        Some(rs) => rs.clone(),
        None => (1..=prob.gap()).collect(),
    };
    if let Some(&r) = rs.iter().find(|&&r| r == 0 || r > prob.gap()) {
        bail!("field `r`: {r} is out of range 1..={}", prob.gap());
    }
    let opts = SearchOptions {
        budget: settings.budget,
        validate: settings.validate,
    };
    let codes = if settings.validate { Some(prob.codes()?) } else { None };

    let mut values = Vec::with_capacity(rs.len());
    for r in rs {
        let mut v = RValue {
            r,
            m_r: None,
            rfp_r: None,
            witness: Vec::new(),
            candidates: None,
            oracle: None,
            refusals: Vec::new(),
        };
        match rghw_search(&prob, r, &opts) {
            Ok(res) => {
                v.m_r = Some(res.value);
                v.candidates = Some(res.candidates as u64);
                v.witness = res.witness.polys().iter().map(|f| f.to_text(ord)).collect();
            }
            Err(e) => match refusal(&e) {
                Some(msg) => v.refusals.push(format!("M_r: {msg}")),
                None => return Err(e.into()),
            },
        }
        match relative_footprint(&prob, r, &opts) {
            Ok(x) => v.rfp_r = Some(x),
            Err(e) => match refusal(&e) {
                Some(msg) => v.refusals.push(format!("RFP_r: {msg}")),
                None => return Err(e.into()),
            },
        }
        if let Some((c1, c2)) = &codes {
            match rghw_definition_oracle(c1, c2, r, settings.budget) {
                Ok(x) => {
                    if let Some(m) = v.m_r {
                        if m != x {
                            bail!("validation failed for r = {r}: degree formula gives {m}, subcode enumeration gives {x}");
                        }
                    }
                    v.oracle = Some(x);
                }
                Err(e) => match refusal(&e) {
                    Some(msg) => v.refusals.push(format!("definition oracle: {msg}")),
                    None => return Err(e.into()),
                },
            }
        }
        if let (Some(m), Some(f)) = (v.m_r, v.rfp_r) {
            if f > m {
                bail!("internal error: RFP_{r} = {f} exceeds M_{r} = {m}");
            }
        }
        values.push(v);
    }

    let texts = |l: &PolySpace| l.basis().iter().map(|b| b.to_text(ord)).collect();
    Ok(ResultReport {
        input: InputEcho {
            q: problem.field.order(),
            s: problem.file.s,
            order: ord.to_string(),
            points: prob.n(),
            l1_basis: texts(prob.l1()),
            l2_basis: texts(prob.l2()),
        },
        n: prob.n(),
        k1: prob.l1().dim(),
        k2: prob.l2().dim(),
        values,
        validated: settings.validate,
        timing_us: micros(start),
    })
}

pub fn weights(path: &Path, settings: &Settings) -> Result<WeightsReport> {
    let start = Instant::now();
    let problem = Problem::resolve(problem::read(path)?, settings.order)?;
    let Some(l1) = &problem.file.l1 else {
        bail!("missing field `l1`");
    };
    let gens = problem.space("l1", l1)?;
    let (gb, _) = vanishing_ideal_with_footprint(&problem.points, problem.order);
    let space = PolySpace::echelonize(problem.field, problem.file.s, problem.order, &gens)?;
    let space = rghw_core::codes::standardize(&space, &gb)?;
    let code = evaluate_space(&space, &problem.points)?;
    let w = code.weight_distribution(settings.budget)?;
    Ok(WeightsReport {
        q: problem.field.order(),
        n: code.n(),
        k: code.k(),
        distinct_weights: w.distinct_weights(),
        distribution: w.distribution,
        timing_us: micros(start),
    })
}

pub fn toric_table(q: u64, s: usize, settings: &Settings) -> Result<ToricTable> {
    let start = Instant::now();
    let field = PrimeField::new(q)?;
    if s == 0 {
        bail!("--s must be at least 1");
    }
    let ord = settings.order.unwrap_or_default();
    let mut rows = Vec::with_capacity(s);
    for d in 1..=s {
        let code = toric_code(&HypersimplexSpec::new(field, s, d)?, ord)?;
        let mut row = ToricRow {
            d,
            n: code.n(),
            k: code.k(),
            delta: None,
            delta_formula: toric_min_distance_formula(q, s, d)?,
            delta2: None,
            delta2_formula: (d == 1 && q >= 3 && s >= 4).then(|| toric_deg1_weight(q, s, 2)).transpose()?,
            refused: None,
        };
        match code.weight_distribution(settings.budget) {
            Ok(w) => {
                row.delta = Some(w.min_distance()?);
                row.delta2 = Some(w.next_to_minimal()?);
            }
            Err(e) => match refusal(&e) {
                Some(msg) => row.refused = Some(msg),
                None => return Err(e.into()),
            },
        }
        rows.push(row);
    }
    Ok(ToricTable {
        q,
        s,
        rows,
        timing_us: micros(start),
    })
}
