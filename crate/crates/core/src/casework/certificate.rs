use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::assumptions::{check_assumptions, AssumptionReport, Declared};
use super::cases::{coverage, decomposition_exclusions, generate_cases, Coverage, Exclusion, REDUCTION_BETAS};
use super::rules::{rule_blue, rule_green, rule_grey, rule_reduction, rule_sporadic_3, rule_sporadic_5, CaseNode, RuleContext};
use crate::error::{Error, Result};
use crate::exotica::{rokhlin_vanishes, Rokhlin};
use crate::knot::KnotRecord;

pub const SCHEMA: &str = "slicecheck.certificate/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "NOT_SLICE")]
    NotSlice,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NotSlice => "NOT_SLICE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertInput {
    pub knot: String,
    /// sha256 of the record's canonical JSON.
    pub digest: String,
    pub lk: i64,
    /// Full twists in the box, n = −lk.
    pub twists: i64,
    pub declared: Declared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub input: CertInput,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assumptions: Option<AssumptionReport>,
    /// Rokhlin invariant of the surgery with framings (lk²−1, 1); reported, not gated on.
    pub rokhlin: Rokhlin,
    pub decomposition: Vec<Exclusion>,
    pub cases: Vec<CaseNode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Coverage>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl Certificate {
    /// Citations of the case leaves, without duplicates, in order of appearance.
    pub fn leaf_citations(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for n in &self.cases {
            if !out.contains(&n.citation) {
                out.push(n.citation.clone());
            }
        }
        out
    }
}

pub fn record_digest(k: &KnotRecord) -> String {
    let v = serde_json::to_value(k).expect("record serializes");
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

fn run_case(ctx: &RuleContext, case: &super::cases::AffineClassPair) -> Result<CaseNode> {
    match case.label.as_str() {
        "grey" => rule_grey(ctx, case),
        "blue" => rule_blue(ctx, case),
        "green eta=0" => rule_green(ctx, case, 0),
        "green eta=1" => rule_green(ctx, case, 1),
        "sporadic (3,1)" => rule_sporadic_3(ctx, case),
        "sporadic (-1,-3)" => rule_sporadic_5(ctx, case),
        label => {
            let (d, beta) = REDUCTION_BETAS
                .iter()
                .find(|(_, b)| label == format!("reduction ({},{})", b.0, b.1))
                .ok_or_else(|| Error::Internal(format!("no rule for case {label}")))?;
            rule_reduction(ctx, case, *d, *beta)
        }
    }
}

/// Run the full case analysis for the symmetric link A = B = K.
pub fn certify_not_slice(k: &KnotRecord, lk: i64, declared: Declared) -> Certificate {
    let mut cert = Certificate {
        schema: SCHEMA.into(),
        input: CertInput { knot: k.name.clone(), digest: record_digest(k), lk, twists: -lk, declared },
        assumptions: None,
        rokhlin: rokhlin_vanishes(lk),
        decomposition: Vec::new(),
        cases: Vec::new(),
        coverage: None,
        verdict: Verdict::Inconclusive,
        reasons: Vec::new(),
    };
    let report = match check_assumptions(k, lk, declared) {
        Ok(r) => r,
        Err(e) => {
            cert.reasons.push(format!("assumptions: {e}"));
            return cert;
        }
    };
    let failures: Vec<String> = report
        .items
        .iter()
        .filter(|i| report.failures().contains(&i.id))
        .map(|i| format!("assumption {} fails: {}", i.id, i.detail))
        .collect();
    cert.assumptions = Some(report.clone());
    if !failures.is_empty() {
        cert.reasons = failures;
        return cert;
    }

    match decomposition_exclusions(lk, k.arf) {
        Ok(d) => cert.decomposition = d,
        Err(e) => cert.reasons.push(format!("decomposition: {e}")),
    }
    let cases = match generate_cases(lk) {
        Ok(c) => c,
        Err(e) => {
            cert.reasons.push(format!("case generation: {e}"));
            return cert;
        }
    };
    let cov = coverage(&cases);
    let ctx = RuleContext { knot: k, lk, report: &report };
    for case in &cases {
        match run_case(&ctx, case) {
            Ok(node) => cert.cases.push(node),
            Err(e) => cert.reasons.push(format!("{}: {e}", case.label)),
        }
    }
    for e in cert.decomposition.iter().filter(|e| !e.closed()) {
        cert.reasons.push(format!("exclusion {} not established", e.label));
    }
    for n in &cert.cases {
        for l in n.open_leaves() {
            cert.reasons.push(format!("{} / {} survives", n.label, l.label));
        }
    }
    for o in &cov.uncovered {
        cert.reasons.push(format!("orbit {o} not covered"));
    }
    cert.coverage = Some(cov);
    if cert.reasons.is_empty() {
        cert.verdict = Verdict::NotSlice;
    }
    cert
}
