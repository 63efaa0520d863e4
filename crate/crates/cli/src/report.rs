//! Machine-readable results and their human renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub q: u64,
    pub s: usize,
    pub order: String,
    pub points: usize,
    /// Echelon bases after standardization.
    pub l1_basis: Vec<String>,
    pub l2_basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RValue {
    pub r: usize,
    pub m_r: Option<usize>,
    pub rfp_r: Option<usize>,
    /// A set `F` attaining `|V_X(F)| = n - M_r`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<u64>,
    /// Value from the subcode-enumeration oracle, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub refusals: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultReport {
    pub input: InputEcho,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub values: Vec<RValue>,
    pub validated: bool,
    pub timing_us: u64,
}

impl ResultReport {
    pub fn refused(&self) -> bool {
        self.values.iter().any(|v| !v.refusals.is_empty())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        writeln!(out, "F_{}, s = {}, order {}, n = {}, k1 = {}, k2 = {}", i.q, i.s, i.order, self.n, self.k1, self.k2).unwrap();
        writeln!(out, "L1 basis: {}", list(&i.l1_basis)).unwrap();
        writeln!(out, "L2 basis: {}", list(&i.l2_basis)).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "{:>3}  {:>6}  {:>6}", "r", "M_r", "RFP_r").unwrap();
        for v in &self.values {
            writeln!(out, "{:>3}  {:>6}  {:>6}", v.r, show(v.m_r), show(v.rfp_r)).unwrap();
        }
        for v in &self.values {
            if !v.witness.is_empty() {
                writeln!(out, "witness r = {}: {}", v.r, v.witness.join(", ")).unwrap();
            }
            for refusal in &v.refusals {
                writeln!(out, "refused r = {}: {refusal}", v.r).unwrap();
            }
        }
        if self.validated {
            writeln!(out, "validated against Gröbner degrees and subcode enumeration").unwrap();
        }
        writeln!(out, "time: {:.3} s", self.timing_us as f64 / 1e6).unwrap();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub q: u64,
    pub s: usize,
    pub order: String,
    pub generators: Vec<String>,
    pub footprint: Vec<String>,
    pub degree: usize,
    pub timing_us: u64,
}

impl VanishingReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            writeln!(out, "{g}").unwrap();
        }
        writeln!(out, "degree: {}", self.degree).unwrap();
        writeln!(out, "footprint: {}", list(&self.footprint)).unwrap();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub distribution: BTreeMap<usize, u64>,
    pub distinct_weights: Vec<usize>,
    pub timing_us: u64,
}

impl WeightsReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "[n, k] = [{}, {}] over F_{}", self.n, self.k, self.q).unwrap();
        writeln!(out, "{:>6}  {:>12}", "weight", "count").unwrap();
        for (w, c) in &self.distribution {
            writeln!(out, "{w:>6}  {c:>12}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricRow {
    pub d: usize,
    pub n: usize,
    pub k: usize,
    pub delta: Option<usize>,
    pub delta_formula: u64,
    pub delta2: Option<usize>,
    /// Closed form for the second weight; only known in degree one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta2_formula: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refused: Option<String>,
}

impl ToricRow {
    pub fn mismatch(&self) -> bool {
        self.delta.is_some_and(|d| d as u64 != self.delta_formula)
            || matches!((self.delta2, self.delta2_formula), (Some(a), Some(b)) if a as u64 != b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricTable {
    pub q: u64,
    pub s: usize,
    pub rows: Vec<ToricRow>,
    pub timing_us: u64,
}

impl ToricTable {
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "hypersimplex toric codes over F_{}, s = {}", self.q, self.s).unwrap();
        writeln!(
            out,
            "{:>3}  {:>6}  {:>6}  {:>6}  {:>9}  {:>6}  {:>10}",
            "d", "n", "k", "δ", "δ formula", "δ²", "δ² formula"
        )
        .unwrap();
        for r in &self.rows {
            let delta2 = if self.q == 2 { "-".to_string() } else { show(r.delta2) };
            let flag = if r.mismatch() { "  MISMATCH" } else { "" };
            writeln!(
                out,
                "{:>3}  {:>6}  {:>6}  {:>6}  {:>9}  {:>6}  {:>10}{flag}",
                r.d,
                r.n,
                r.k,
                show(r.delta),
                r.delta_formula,
                delta2,
                r.delta2_formula.map_or("-".to_string(), |v| v.to_string()),
            )
            .unwrap();
        }
        for r in &self.rows {
            if let Some(msg) = &r.refused {
                writeln!(out, "refused d = {}: {msg}", r.d).unwrap();
            }
        }
        out
    }
}

fn show(v: Option<usize>) -> String {
    v.map_or("refused".to_string(), |v| v.to_string())
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultReport {
        ResultReport {
            input: InputEcho {
                q: 5,
                s: 2,
                order: "grevlex".into(),
                points: 16,
                l1_basis: vec!["t1^3".into(), "1".into()],
                l2_basis: vec![],
            },
            n: 16,
            k1: 2,
            k2: 0,
            values: vec![
                RValue {
                    r: 1,
                    m_r: Some(12),
                    rfp_r: Some(4),
                    witness: vec!["t1^3 - 1".into()],
                    candidates: Some(6),
                    oracle: Some(12),
                    refusals: vec![],
                },
                RValue {
                    r: 2,
                    m_r: None,
                    rfp_r: Some(8),
                    witness: vec![],
                    candidates: None,
                    oracle: None,
                    refusals: vec!["enumeration of 31 elements exceeds the budget of 10".into()],
                },
            ],
            validated: true,
            timing_us: 1234,
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = sample();
        let text = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(serde_json::from_str::<ResultReport>(&text).unwrap(), r);
        assert!(r.refused());
        assert!(r.render().contains("refused r = 2"));
    }

    #[test]
    fn other_reports_round_trip() {
        let w = WeightsReport {
            q: 3,
            n: 5,
            k: 1,
            distribution: BTreeMap::from([(0, 1), (5, 2)]),
            distinct_weights: vec![5],
            timing_us: 3,
        };
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.contains(r#""distribution":{"0":1,"5":2}"#));
        assert_eq!(serde_json::from_str::<WeightsReport>(&text).unwrap(), w);

        let t = ToricTable {
            q: 3,
            s: 2,
            rows: vec![ToricRow {
                d: 1,
                n: 4,
                k: 2,
                delta: Some(2),
                delta_formula: 2,
                delta2: Some(4),
                delta2_formula: None,
                refused: None,
            }],
            timing_us: 0,
        };
        assert_eq!(serde_json::from_str::<ToricTable>(&serde_json::to_string(&t).unwrap()).unwrap(), t);
        assert!(!t.rows[0].mismatch());
    }
}
