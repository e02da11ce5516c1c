//! Command results, rendered either as text or as JSON.
//!
//! Every report type derives `Serialize` and `Deserialize`. Big integers are
//! decimal strings so no precision is lost, and sets are arrays of 1-based
//! positions. Parsing emitted JSON back into the same type and rendering it
//! again reproduces the original bytes.

use std::fmt::Write as _;

use num_bigint::BigUint;
use scrows::{FaceSet, Partition};
use serde::{Deserialize, Serialize};

fn big(v: &BigUint) -> String {
    v.to_string()
}

fn positions(x: &FaceSet) -> Vec<usize> {
    x.to_vec()
}

fn braces(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntry {
    pub row: String,
    pub cardinality: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub w: usize,
    pub kind: String,
    pub rows: Vec<RowEntry>,
    pub total: String,
}

impl PartitionReport {
    pub fn new(p: &Partition) -> Self {
        PartitionReport {
            w: p.width(),
            kind: p.kind().to_string(),
            rows: p
                .rows()
                .iter()
                .map(|r| RowEntry {
                    row: r.render(),
                    cardinality: big(&r.cardinality()),
                })
                .collect(),
            total: big(&p.cardinality()),
        }
    }

    fn text(&self) -> String {
        let mut s = format!("w={} kind={} rows={}\n", self.w, self.kind, self.rows.len());
        for r in &self.rows {
            let _ = writeln!(s, "{}\t{}", r.row, r.cardinality);
        }
        let _ = writeln!(s, "total {}", self.total);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub w: usize,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ie: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fvector_sum: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_sum: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
}

impl CountReport {
    fn text(&self) -> String {
        let mut s = format!("{}\n", self.count);
        let routes = [
            ("ie", &self.ie),
            ("partition", &self.partition),
            ("fvector-sum", &self.fvector_sum),
            ("tau-sum", &self.tau_sum),
        ];
        if routes.iter().filter(|(_, v)| v.is_some()).count() > 1 {
            for (name, v) in routes {
                if let Some(v) = v {
                    let _ = writeln!(s, "{name} {v}");
                }
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVectorReport {
    pub w: usize,
    /// `f[k]` = number of faces with `k` elements, `k = 0..=w`.
    pub f: Vec<String>,
    /// `tau[k]` = number of `k`-sets outside the complex; absent for oracle runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<String>>,
}

impl FVectorReport {
    pub fn new(f: &scrows::CountVector, tau: Option<&scrows::CountVector>) -> Self {
        FVectorReport {
            w: f.width(),
            f: f.iter().map(big).collect(),
            tau: tau.map(|t| t.iter().map(big).collect()),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for (k, fk) in self.f.iter().enumerate() {
            match &self.tau {
                Some(t) => {
                    let _ = writeln!(s, "{k}\t{fk}\t{}", t[k]);
                }
                None => {
                    let _ = writeln!(s, "{k}\t{fk}");
                }
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetsReport {
    pub w: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetsReport {
    pub fn new(w: usize, sets: &[FaceSet]) -> Self {
        SetsReport {
            w,
            sets: sets.iter().map(positions).collect(),
        }
    }

    /// Set-file format, so the output can be fed back in.
    fn text(&self) -> String {
        let sets: Vec<FaceSet> = self
            .sets
            .iter()
            .map(|v| FaceSet::from_positions(v.iter().copied()).expect("positions are 1-based"))
            .collect();
        crate::io::render_set_file(self.w, &sets)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub face: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disjoint_rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus_rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empty_intersections: Option<usize>,
    pub link: PartitionReport,
}

impl LinkReport {
    fn text(&self) -> String {
        let mut s = format!("link of {}\n", braces(&self.face));
        if let (Some(d), Some(m), Some(e)) = (self.disjoint_rows, self.minus_rows, self.empty_intersections) {
            let _ = writeln!(s, "disjoint rows {d}, minus rows {m}, empty intersections {e} of {}", d * m);
        }
        s.push_str(&self.link.text());
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximizeReport {
    pub value: i128,
    pub witness: Vec<usize>,
}

impl MaximizeReport {
    fn text(&self) -> String {
        format!("max {}\nwitness {}\n", self.value, braces(&self.witness))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolyReport {
    pub d: usize,
    pub convention: String,
    /// Coefficients of `t^0, t^1, …`.
    pub coefficients: Vec<String>,
}

impl HPolyReport {
    fn text(&self) -> String {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| c.parse().expect("integer coefficients"))
            .collect();
        let p = scrows::Poly::from_coeffs(coeffs);
        format!("d={} convention={}\nh(t) = {p}\n{}\n", self.d, self.convention, self.coefficients.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyEntry {
    /// Homological degree `i` of `H̃_i`, starting at `-1`.
    pub degree: isize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub prime: u64,
    pub reduced: Vec<HomologyEntry>,
    pub euler_characteristic: i64,
}

impl HomologyReport {
    pub fn new(h: &scrows::algebra::ReducedHomology) -> Self {
        HomologyReport {
            prime: h.prime,
            reduced: h
                .dims
                .iter()
                .enumerate()
                .map(|(k, &dim)| HomologyEntry {
                    degree: k as isize - 1,
                    dim,
                })
                .collect(),
            euler_characteristic: h.euler_characteristic(),
        }
    }

    fn text(&self) -> String {
        let mut s = format!("GF({})\n", self.prime);
        for e in &self.reduced {
            let _ = writeln!(s, "H~_{}\t{}", e.degree, e.dim);
        }
        let _ = writeln!(s, "euler {}", self.euler_characteristic);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IeTermsReport {
    pub m: usize,
    /// `terms[k]` = number of potentially nonzero `k`-fold terms, `k = 0..=m`.
    pub terms: Vec<String>,
    pub partition: PartitionReport,
}

impl IeTermsReport {
    fn text(&self) -> String {
        let mut s = self.partition.text();
        s.push_str("terms by k:");
        for t in &self.terms {
            let _ = write!(s, " {t}");
        }
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsmRow {
    pub s: usize,
    /// `fr(s, k)` for `k = 1..=w`.
    pub counts: Vec<String>,
    pub sum: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsmTableReport {
    pub w: usize,
    pub m: usize,
    pub rows: Vec<FsmRow>,
    /// Column sums for `k = 1..=w`; each is `C(w, k)`.
    pub column_sums: Vec<String>,
    pub total: String,
}

impl FsmTableReport {
    pub fn new(t: &scrows::fsm::FrequencyTable) -> Self {
        let w = t.width();
        let rows = (0..=t.transactions())
            .map(|s| FsmRow {
                s,
                counts: (1..=w).map(|k| big(t.get(s, k))).collect(),
                sum: big(&t.row_sum(s, 1)),
            })
            .collect();
        let column_sums: Vec<String> = (1..=w).map(|k| big(&t.column_sum(k))).collect();
        let total: BigUint = (1..=w).map(|k| t.column_sum(k)).sum();
        FsmTableReport {
            w,
            m: t.transactions(),
            rows,
            column_sums,
            total: big(&total),
        }
    }

    fn text(&self) -> String {
        let mut s = String::from("s\\k");
        for k in 1..=self.w {
            let _ = write!(s, "\t{k}");
        }
        s.push_str("\tsum\n");
        for r in &self.rows {
            let _ = write!(s, "{}", r.s);
            for c in &r.counts {
                let _ = write!(s, "\t{c}");
            }
            let _ = writeln!(s, "\t{}", r.sum);
        }
        s.push_str("sum");
        for c in &self.column_sums {
            let _ = write!(s, "\t{c}");
        }
        let _ = writeln!(s, "\t{}", self.total);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedReport {
    pub s: usize,
    pub closed: Vec<Vec<usize>>,
}

impl ClosedReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.closed {
            let _ = writeln!(s, "{}", braces(c));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilityReport {
    pub query: String,
    pub s: usize,
    pub k: usize,
    /// `None` when the conditioning event is empty.
    pub numerator: Option<String>,
    pub denominator: Option<String>,
    pub decimal: Option<String>,
}

impl ProbabilityReport {
    fn text(&self) -> String {
        match (&self.numerator, &self.denominator, &self.decimal) {
            (Some(n), Some(d), Some(x)) => format!("{n}/{d} ≈ {x}\n"),
            _ => "undefined\n".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub w: usize,
    pub h: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub parallel: bool,
    /// Rows of the complex's own partition.
    pub rows: usize,
    /// Rows of the transversal partition behind the f-vector.
    pub transversal_rows: usize,
    pub cardinality: String,
    pub f: Vec<String>,
    pub partition_ms: f64,
    pub fvector_ms: f64,
}

impl BenchReport {
    fn text(&self) -> String {
        let mut s = format!("w={} h={}", self.w, self.h);
        if let Some(m) = self.m {
            let _ = write!(s, " m={m}");
        }
        if let Some(seed) = self.seed {
            let _ = write!(s, " seed={seed}");
        }
        let _ = writeln!(s, " parallel={}", self.parallel);
        let _ = writeln!(s, "R {}", self.rows);
        let _ = writeln!(s, "transversal rows {}", self.transversal_rows);
        let _ = writeln!(s, "|SC| {}", self.cardinality);
        let _ = writeln!(s, "f {}", self.f.join(" "));
        let _ = writeln!(s, "partition {:.3} ms", self.partition_ms);
        let _ = writeln!(s, "f-vector {:.3} ms", self.fvector_ms);
        s
    }
}

/// One command's result.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Count(CountReport),
    FVector(FVectorReport),
    Partition(PartitionReport),
    Sets(SetsReport),
    Link(LinkReport),
    Maximize(MaximizeReport),
    HPoly(HPolyReport),
    Homology(HomologyReport),
    IeTerms(IeTermsReport),
    FsmTable(FsmTableReport),
    Closed(ClosedReport),
    Probability(ProbabilityReport),
    Bench(BenchReport),
}

impl Report {
    pub fn text(&self) -> String {
        match self {
            Report::Count(r) => r.text(),
            Report::FVector(r) => r.text(),
            Report::Partition(r) => r.text(),
            Report::Sets(r) => r.text(),
            Report::Link(r) => r.text(),
            Report::Maximize(r) => r.text(),
            Report::HPoly(r) => r.text(),
            Report::Homology(r) => r.text(),
            Report::IeTerms(r) => r.text(),
            Report::FsmTable(r) => r.text(),
            Report::Closed(r) => r.text(),
            Report::Probability(r) => r.text(),
            Report::Bench(r) => r.text(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
