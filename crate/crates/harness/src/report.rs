//! Report records, verdicts, JSON emission and digests.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use updom_core::domset::DominationCertificate;
use updom_core::exact::{SolveResult, SolveStatus};
use updom_core::witness::WitnessOutcome;
use updom_core::VertexSet;

use crate::closed_form::ClosedForm;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// Recorded for information; never affects the exit code.
    Observation,
    /// Budget ran out before the check could be decided.
    Inconclusive,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, verdict: Verdict, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), verdict, detail: detail.into() }
    }

    /// Pass or Fail according to `ok`.
    pub fn expect(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Verdict::Pass } else { Verdict::Fail }, detail)
    }
}

/// A solver value with its status and search effort.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolvedValue {
    pub value: usize,
    pub status: SolveStatus,
    pub nodes: u64,
}

impl From<&SolveResult> for SolvedValue {
    fn from(r: &SolveResult) -> Self {
        SolvedValue { value: r.value, status: r.status, nodes: r.stats.nodes }
    }
}

impl SolvedValue {
    pub fn exact(&self) -> Option<usize> {
        self.status.is_exact().then_some(self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub n: usize,
    pub edges: usize,
    pub gamma: SolvedValue,
    pub upper_gamma: SolvedValue,
    pub alpha: SolvedValue,
    /// A maximum minimal dominating set (the best found under budget).
    pub upper_witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub construction: String,
    pub case: String,
    pub claimed_bound: usize,
    pub size: usize,
    pub witness: VertexSet,
}

impl From<&WitnessOutcome> for WitnessSummary {
    fn from(o: &WitnessOutcome) -> Self {
        WitnessSummary {
            construction: o.construction.clone(),
            case: o.case.clone(),
            claimed_bound: o.claimed_bound,
            size: o.certified_lower_bound,
            witness: o.witness,
        }
    }
}

/// Everything computed for one ordered pair `(G, H)`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub g_spec: String,
    pub h_spec: String,
    pub g: GraphInvariants,
    pub h: GraphInvariants,
    pub product_n: usize,
    /// Γ(G □ H); absent when the product exceeds the exact-search size limit.
    pub product_upper_gamma: Option<SolvedValue>,
    /// γ(G □ H), for the product-domination comparison.
    pub product_gamma: Option<SolvedValue>,
    /// `Γ(G)Γ(H) + min{n_G - Γ(G), n_H - Γ(H)}`.
    pub rhs_min: usize,
    /// The same with `max` in place of `min`.
    pub rhs_max: usize,
    pub closed_form: Option<ClosedForm>,
    pub witnesses: Vec<WitnessSummary>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

/// Invariants of a single graph, optionally against an expected Γ.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub spec: String,
    pub invariants: GraphInvariants,
    pub expected_upper_gamma: Option<usize>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

/// One size of the X-family comparison: a certified lower bound for the
/// primed product against the exact (or partial) value for the unprimed one.
#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    pub n: usize,
    pub primed_spec: String,
    pub unprimed_spec: String,
    /// Size of the column witness in the primed product.
    pub primed_lower_bound: usize,
    pub primed_witness: VertexSet,
    pub unprimed_upper_gamma: Option<SolvedValue>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

/// One named construction applied to a pair.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub g_spec: String,
    pub h_spec: String,
    pub construction: String,
    pub outcome: Option<WitnessSummary>,
    pub certificate: Option<DominationCertificate>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Bound(BoundReport),
    Graph(GraphReport),
    Separation(SeparationReport),
    Witness(WitnessReport),
}

impl Report {
    pub fn checks(&self) -> &[Check] {
        match self {
            Report::Bound(r) => &r.checks,
            Report::Graph(r) => &r.checks,
            Report::Separation(r) => &r.checks,
            Report::Witness(r) => &r.checks,
        }
    }

    pub fn title(&self) -> String {
        match self {
            Report::Bound(r) => format!("{} x {}", r.g_spec, r.h_spec),
            Report::Graph(r) => r.spec.clone(),
            Report::Separation(r) => format!("{} vs {}", r.primed_spec, r.unprimed_spec),
            Report::Witness(r) => format!("{} x {} [{}]", r.g_spec, r.h_spec, r.construction),
        }
    }

    /// Worst verdict among the checks that count (observations excluded).
    pub fn verdict(&self) -> Verdict {
        worst(self.checks())
    }
}

fn worst(checks: &[Check]) -> Verdict {
    checks.iter().map(|c| c.verdict).filter(|v| *v != Verdict::Observation).max().unwrap_or(Verdict::Pass)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub observation: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportSet {
    pub schema: u32,
    pub command: String,
    pub reports: Vec<Report>,
}

impl ReportSet {
    pub fn new(command: impl Into<String>, reports: Vec<Report>) -> Self {
        ReportSet { schema: SCHEMA, command: command.into(), reports }
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for check in self.reports.iter().flat_map(Report::checks) {
            match check.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Inconclusive => t.inconclusive += 1,
                Verdict::Observation => t.observation += 1,
            }
        }
        t
    }

    /// 0 when everything passes, 1 on any failure, 3 when some check
    /// could not be decided within budget.
    pub fn exit_code(&self) -> i32 {
        let t = self.tally();
        if t.fail > 0 {
            1
        } else if t.inconclusive > 0 {
            3
        } else {
            0
        }
    }

    /// JSON with timings stripped, so equal work gives equal bytes.
    pub fn stable_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("reports serialize");
        strip_timings(&mut value);
        serde_json::to_string(&value).expect("value serializes")
    }

    /// SHA-256 of [`ReportSet::stable_json`], hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.stable_json().as_bytes()))
    }

    /// Full JSON document including timings and the digest.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("reports serialize");
        let obj = value.as_object_mut().expect("report set is an object");
        obj.insert("digest".into(), Value::String(self.digest()));
        obj.insert("tally".into(), serde_json::to_value(self.tally()).expect("tally serializes"));
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// One line per report plus failing or undecided checks, then a summary.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for report in &self.reports {
            let _ = writeln!(out, "{:<13} {:<40} {}", label(report.verdict()), report.title(), headline(report));
            for c in report.checks() {
                if matches!(c.verdict, Verdict::Fail | Verdict::Inconclusive) || self.reports.len() == 1 {
                    let _ = writeln!(out, "    {:<13} {:<28} {}", label(c.verdict), c.name, c.detail);
                }
            }
        }
        let t = self.tally();
        let _ = writeln!(
            out,
            "{} reports: {} pass, {} fail, {} inconclusive, {} observations; digest {}",
            self.reports.len(),
            t.pass,
            t.fail,
            t.inconclusive,
            t.observation,
            &self.digest()[..16]
        );
        out
    }
}

fn label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Observation => "observation",
    }
}

fn show(v: &SolvedValue) -> String {
    match v.status {
        SolveStatus::Exact => v.value.to_string(),
        SolveStatus::LowerBoundOnly => format!(">={}", v.value),
        SolveStatus::UpperBoundOnly => format!("<={}", v.value),
    }
}

fn headline(report: &Report) -> String {
    match report {
        Report::Bound(r) => {
            let product = r.product_upper_gamma.as_ref().map(show).unwrap_or_else(|| "-".into());
            let best = r.witnesses.iter().map(|w| w.size).max().unwrap_or(0);
            let closed = r.closed_form.as_ref().map(|c| format!(" closed={}", c.value)).unwrap_or_default();
            format!("Γ(G□H)={product} rhs_min={} rhs_max={} witness={best}{closed}", r.rhs_min, r.rhs_max)
        }
        Report::Graph(r) => {
            let i = &r.invariants;
            format!("n={} γ={} Γ={} α={}", i.n, show(&i.gamma), show(&i.upper_gamma), show(&i.alpha))
        }
        Report::Separation(r) => {
            let other = r.unprimed_upper_gamma.as_ref().map(show).unwrap_or_else(|| "-".into());
            format!("n={} primed>={} unprimed={other}", r.n, r.primed_lower_bound)
        }
        Report::Witness(r) => match &r.outcome {
            Some(w) => {
                format!("case={} size={} claimed={} witness={:?}", w.case, w.size, w.claimed_bound, w.witness.to_vec())
            }
            None => r.checks.first().map(|c| c.detail.clone()).unwrap_or_default(),
        },
    }
}

fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timings);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_report(elapsed_ms: u64, verdicts: &[Verdict]) -> Report {
        let value = SolvedValue { value: 1, status: SolveStatus::Exact, nodes: 3 };
        Report::Graph(GraphReport {
            spec: "k:2".into(),
            invariants: GraphInvariants {
                n: 2,
                edges: 1,
                gamma: value,
                upper_gamma: value,
                alpha: value,
                upper_witness: VertexSet::singleton(0),
            },
            expected_upper_gamma: None,
            checks: verdicts.iter().map(|&v| Check::new("c", v, "")).collect(),
            elapsed_ms,
        })
    }

    #[test]
    fn digest_ignores_timings() {
        let a = ReportSet::new("t", vec![graph_report(5, &[Verdict::Pass])]);
        let b = ReportSet::new("t", vec![graph_report(900, &[Verdict::Pass])]);
        assert_eq!(a.digest(), b.digest());
        assert!(!a.stable_json().contains("elapsed_ms"));
        assert!(a.to_json().contains("\"elapsed_ms\""));
        assert!(a.stable_json().starts_with("{\"command\":\"t\""));
    }

    #[test]
    fn exit_codes() {
        use Verdict::*;
        let code = |v: &[Verdict]| ReportSet::new("t", vec![graph_report(0, v)]).exit_code();
        assert_eq!(code(&[Pass, Observation]), 0);
        assert_eq!(code(&[Pass, Inconclusive]), 3);
        assert_eq!(code(&[Inconclusive, Fail]), 1);
        assert_eq!(ReportSet::new("t", vec![]).exit_code(), 0);
    }

    #[test]
    fn json_shape() {
        let json = ReportSet::new("t", vec![graph_report(1, &[Verdict::Pass])]).to_json();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["reports"][0]["kind"], "graph");
        assert_eq!(v["reports"][0]["invariants"]["gamma"]["status"], "exact");
        assert_eq!(v["tally"]["pass"], 1);
        assert_eq!(v["digest"].as_str().unwrap().len(), 64);
    }
}
