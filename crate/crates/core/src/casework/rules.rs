use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::assumptions::{AssumptionReport, A4D_EXCLUDED};
use super::cases::AffineClassPair;
use crate::error::{Error, Result};
use crate::genus::genus_window;
use crate::homology::{AmbientProfile, HomologyClass};
use crate::knot::{eval_signature, torus2_signature, torus2_signature_affine, KnotExpression, KnotRecord, RootOfUnity};
use crate::obstructions::{
    derived_discs, lk_consistency, linking_verdict, pair_cp2, signature_obstruction, Construction, ObstructionVerdict,
    Outcome, Witness,
};
use crate::symbolic::{Poly, SymClass};

/// A parameter-independence claim together with the numeric samples that
/// back it up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCheck {
    pub quantity: String,
    pub expression: String,
    pub parameter: String,
    pub samples: Vec<(i64, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub sign_choice: i8,
    pub knot: String,
    pub verdict: ObstructionVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLeaf {
    pub label: String,
    pub classes: BTreeMap<String, HomologyClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
    pub verdict: ObstructionVerdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub branches: Vec<Branch>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseNode {
    pub label: String,
    pub cell: String,
    pub citation: String,
    pub alpha: String,
    pub beta: String,
    pub constraint: String,
    pub parameters: BTreeMap<String, String>,
    pub symbolic: Vec<SymbolicCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub cross_checks: Vec<String>,
    pub leaves: Vec<CaseLeaf>,
}

impl CaseNode {
    fn from_case(case: &AffineClassPair, citation: &str) -> Self {
        Self {
            label: case.label.clone(),
            cell: case.cell.clone(),
            citation: citation.into(),
            alpha: case.alpha.to_string(),
            beta: case.beta.to_string(),
            constraint: format!("{} = 0", case.constraint),
            parameters: BTreeMap::new(),
            symbolic: Vec::new(),
            cross_checks: Vec::new(),
            leaves: Vec::new(),
        }
    }

    pub fn closed(&self) -> bool {
        !self.leaves.is_empty() && self.leaves.iter().all(|l| l.verdict.is_ruled_out())
    }

    pub fn open_leaves(&self) -> Vec<&CaseLeaf> {
        self.leaves.iter().filter(|l| !l.verdict.is_ruled_out()).collect()
    }
}

/// What every rule needs: the knot (A = B = K), lk and the assumption report.
pub struct RuleContext<'a> {
    pub knot: &'a KnotRecord,
    pub lk: i64,
    pub report: &'a AssumptionReport,
}

impl RuleContext<'_> {
    fn expr(&self) -> KnotExpression {
        KnotExpression::atom(self.knot.clone())
    }

    fn sum_signature(&self, w: RootOfUnity) -> Result<(KnotExpression, i64)> {
        let e = KnotExpression::sum(vec![self.expr(), self.expr()]);
        let s = eval_signature(&e, w)?;
        Ok((e, s))
    }
}

fn root(r: i64, m: i64) -> RootOfUnity {
    RootOfUnity::new(r, m).expect("valid root")
}

fn cite(lemma: &str, thm: &str) -> String {
    format!("Lemma: {lemma} / Thm: {thm}")
}

fn lhs_of(v: &ObstructionVerdict) -> String {
    match &v.witness {
        Witness::Signature(s) => s.lhs.clone(),
        _ => String::new(),
    }
}

fn require_constant(samples: &[(i64, String)], what: &str) -> Result<()> {
    if samples.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err(Error::Internal(format!("{what} depends on the parameter: {samples:?}")));
    }
    Ok(())
}

fn classes(items: &[(&str, &HomologyClass)]) -> BTreeMap<String, HomologyClass> {
    items.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

fn int_class(s: &SymClass, env: &[(&str, i128)]) -> Result<HomologyClass> {
    s.eval(env).ok_or_else(|| Error::Internal(format!("class {s} did not evaluate")))
}

/// α+β = (lk−1, lk+1) with square −4·lk; the inequality is
/// |σ_{A#B}(−1) + 2·lk| ≤ 2.
pub fn rule_grey(ctx: &RuleContext, case: &AffineClassPair) -> Result<CaseNode> {
    ctx.report.require(&["A2", "A4a", "A4c"], "grey cell")?;
    let mut node = CaseNode::from_case(case, "Lemma: table1");
    let b = case.constraint.solve_for("b").ok_or_else(|| Error::Internal("grey constraint not solvable for b".into()))?;
    node.parameters.insert("b".into(), b.to_string());
    let sum = case.alpha.add(&case.beta.substitute("b", &b));
    if sum.involves("a") {
        return Err(Error::Internal(format!("grey alpha+beta = {sum} still involves a")));
    }
    let square = sum.square();
    if square != Poly::linear(0, &[(-4, "lk")]) {
        return Err(Error::Internal(format!("grey square is {square}, expected -4*lk")));
    }
    let w = root(1, 2);
    let (knot, sig) = ctx.sum_signature(w)?;
    let ambient = AmbientProfile::cp2_bcp2();
    let class = int_class(&sum, &[("lk", ctx.lk as i128)])?;
    let mut verdict = signature_obstruction(sig, &ambient, &class, 0, w)?;
    verdict.citation = cite("table1", "signature");

    let mut samples = Vec::new();
    for a in -2..=2 {
        let bb = ctx.lk - 1 - a;
        let (al, be) = (HomologyClass::pair(a, a + 1), HomologyClass::pair(bb, bb + 1));
        if !lk_consistency(&al, &be, ctx.lk) {
            return Err(Error::Internal(format!("grey sample a={a} violates the linking constraint")));
        }
        samples.push((a, lhs_of(&signature_obstruction(sig, &ambient, &al.add(&be), 0, w)?)));
    }
    require_constant(&samples, "grey inequality")?;
    node.symbolic.push(SymbolicCheck {
        quantity: "(alpha+beta)^2".into(),
        expression: square.to_string(),
        parameter: "a".into(),
        samples,
    });
    node.leaves.push(CaseLeaf {
        label: "alpha+beta".into(),
        classes: classes(&[("alpha+beta", &class)]),
        knot: Some(knot.to_string()),
        verdict,
        branches: vec![],
        flags: vec![],
    });
    Ok(node)
}

/// α+β = (2a+lk+1, 2a+lk+1) has square 0; the inequality is |σ_{A#B}(−1)| ≤ 2.
pub fn rule_blue(ctx: &RuleContext, case: &AffineClassPair) -> Result<CaseNode> {
    ctx.report.require(&["A4a", "A6"], "blue cell")?;
    let mut node = CaseNode::from_case(case, "Lemma: table3");
    let b = case.constraint.solve_for("b").ok_or_else(|| Error::Internal("blue constraint not solvable for b".into()))?;
    node.parameters.insert("b".into(), b.to_string());
    let sum = case.alpha.add(&case.beta.substitute("b", &b));
    let square = sum.square();
    if !square.is_zero() {
        return Err(Error::Internal(format!("blue square is {square}, expected 0")));
    }
    let w = root(1, 2);
    let (knot, sig) = ctx.sum_signature(w)?;
    let ambient = AmbientProfile::cp2_bcp2();
    let class = int_class(&sum, &[("a", 0), ("lk", ctx.lk as i128)])?;
    let mut verdict = signature_obstruction(sig, &ambient, &class, 0, w)?;
    verdict.citation = cite("table3", "signature");

    let mut samples = Vec::new();
    for a in -2..=2 {
        let c = int_class(&sum, &[("a", a as i128), ("lk", ctx.lk as i128)])?;
        let v = signature_obstruction(sig, &ambient, &c, 0, w)?;
        if v.outcome != verdict.outcome {
            return Err(Error::Internal(format!("blue sample a={a} changes the outcome")));
        }
        samples.push((a, lhs_of(&v)));
    }
    require_constant(&samples, "blue inequality")?;
    node.symbolic.push(SymbolicCheck {
        quantity: "(alpha+beta)^2".into(),
        expression: square.to_string(),
        parameter: "a".into(),
        samples,
    });
    node.leaves.push(CaseLeaf {
        label: "alpha+beta at a=0".into(),
        classes: classes(&[("alpha+beta", &class)]),
        knot: Some(knot.to_string()),
        verdict,
        branches: vec![],
        flags: vec![],
    });
    Ok(node)
}

/// f_η(ã, b) = ãb + (ã+1−2η)(b+1), the pairing α·β in the green cells with ã = a+η.
pub fn green_f(eta: i64, at: i64, b: i64) -> i64 {
    at * b + (at + 1 - 2 * eta) * (b + 1)
}

/// The eight (ã, b) pairs listed for η = 0, in the order of the value list.
pub const GREEN_LISTED_PAIRS: [(i64, i64); 8] = [(1, 1), (1, -1), (-1, 1), (-1, -1), (1, 3), (1, -3), (-1, 3), (-1, -3)];

/// (ã, b) with 1 ≤ |ã·b| ≤ 3.
pub fn green_small_products() -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for at in -3..=3i64 {
        for b in -3..=3i64 {
            let p = (at * b).abs();
            if (1..=3).contains(&p) {
                v.push((at, b));
            }
        }
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GreenSolution {
    pub a: i64,
    pub b: i64,
    pub eta: i64,
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Every (a, b, η) in the green cells with α·β = −lk, from
/// (2a+1)(2b+1) = 2(−lk−1+η)+1.
pub fn green_divisor_oracle(lk: i64) -> Vec<GreenSolution> {
    let mut out = Vec::new();
    for eta in 0..=1 {
        let n = 2 * (-lk - 1 + eta) + 1;
        for d in divisors(n.unsigned_abs()) {
            for s in [1i64, -1] {
                let u = s * d as i64;
                let v = n / u;
                let sol = GreenSolution { a: (u - 1) / 2, b: (v - 1) / 2, eta };
                out.push(sol);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub(crate) fn green_classes(at: i64, b: i64, eta: i64) -> (HomologyClass, HomologyClass) {
    let a = at - eta;
    (HomologyClass::pair(a, a + 1), HomologyClass::pair(b + eta, -(b + 1 - eta)))
}

fn a4d_flags(pairing: i64) -> Vec<String> {
    if pairing % 2 == 0 {
        vec!["even_pairing".into()]
    } else if A4D_EXCLUDED.contains(&-pairing) {
        vec![]
    } else {
        vec!["outside_a4d".into()]
    }
}

/// The green cell for η ∈ {0, 1}: a signature bound forces |ã·b| ≤ 3, A6
/// removes ã·b = 0, and the remaining pairings are matched against lk.
pub fn rule_green(ctx: &RuleContext, case: &AffineClassPair, eta: i64) -> Result<CaseNode> {
    ctx.report.require(&["A2", "A4a", "A4d", "A6"], "green cell")?;
    let mut node = CaseNode::from_case(case, "Lemma: table2");
    node.parameters.insert("eta".into(), eta.to_string());
    node.parameters.insert("u".into(), "a+eta".into());
    let pairing = case.alpha.pairing(&case.beta);
    let expected = Poly::var("a").mul(&Poly::var("b")).scale(2).add(&Poly::linear(1 - eta as i128, &[(1, "a"), (1, "b")]));
    if pairing != expected {
        return Err(Error::Internal(format!("green pairing {pairing} != {expected}")));
    }
    let sum = case.alpha.add(&case.beta);
    let square = sum.square().substitute("a", &Poly::linear(-(eta as i128), &[(1, "u")]));
    if square != Poly::var("u").mul(&Poly::var("b")).scale(4) {
        return Err(Error::Internal(format!("green square {square} != 4*u*b")));
    }
    node.symbolic.push(SymbolicCheck {
        quantity: "(alpha+beta)^2".into(),
        expression: square.to_string(),
        parameter: "u".into(),
        samples: vec![],
    });

    let w = root(1, 2);
    let ambient = AmbientProfile::cp2_bcp2();
    let (knot, sig) = ctx.sum_signature(w)?;
    let g4 = ctx.knot.g4 as i64;
    let sigma_bound = 4 * g4;
    let middle_min = 8;
    let rhs = ambient.b2 as i64;
    node.leaves.push(CaseLeaf {
        label: "|u*b| >= 4".into(),
        classes: BTreeMap::new(),
        knot: Some(knot.to_string()),
        verdict: ObstructionVerdict {
            outcome: if middle_min - sigma_bound > rhs { Outcome::RuledOut } else { Outcome::Consistent },
            rule: "signature_bound".into(),
            citation: cite("table2", "signature"),
            witness: Witness::SignatureBound { sigma_bound, middle_min, rhs },
        },
        branches: vec![],
        flags: vec![],
    });

    let reps = [(0, 2), (0, -2), (0, 4), (2, 0), (-2, 0)];
    let mut samples = Vec::new();
    let mut zero_leaf = None;
    for (i, &(at, b)) in reps.iter().enumerate() {
        let (al, be) = green_classes(at, b, eta);
        let c = al.add(&be);
        let mut v = signature_obstruction(sig, &ambient, &c, 0, w)?;
        v.citation = cite("table2", "signature");
        samples.push((i as i64, lhs_of(&v)));
        if zero_leaf.is_none() {
            zero_leaf = Some(CaseLeaf {
                label: format!("u*b = 0, representative (u,b) = ({at},{b})"),
                classes: classes(&[("alpha", &al), ("beta", &be), ("alpha+beta", &c)]),
                knot: Some(knot.to_string()),
                verdict: v,
                branches: vec![],
                flags: vec![],
            });
        }
    }
    require_constant(&samples, "green u*b = 0 inequality")?;
    node.symbolic.push(SymbolicCheck {
        quantity: "lhs for u*b = 0".into(),
        expression: format!("sigma_A#B(-1) = {sig}"),
        parameter: "representative".into(),
        samples,
    });
    node.leaves.push(zero_leaf.expect("representatives"));

    let mut consistent = BTreeSet::new();
    for (at, b) in green_small_products() {
        let (al, be) = green_classes(at, b, eta);
        let f = green_f(eta, at, b);
        if pair_cp2(&al, &be) != f {
            return Err(Error::Internal(format!("green f({at},{b}) = {f} disagrees with the pairing")));
        }
        let v = linking_verdict(&al, &be, ctx.lk, &cite("table2", "linking"));
        if v.outcome == Outcome::Consistent {
            consistent.insert(GreenSolution { a: at - eta, b, eta });
        }
        node.leaves.push(CaseLeaf {
            label: format!("(u,b) = ({at},{b})"),
            classes: classes(&[("alpha", &al), ("beta", &be)]),
            knot: None,
            verdict: v,
            branches: vec![],
            flags: a4d_flags(f),
        });
    }

    let oracle = green_divisor_oracle(ctx.lk);
    for s in &oracle {
        let (al, be) = green_classes(s.a + s.eta, s.b, s.eta);
        if !lk_consistency(&al, &be, ctx.lk) {
            return Err(Error::Internal(format!("oracle solution {s:?} fails the pairing")));
        }
    }
    let bounded: BTreeSet<GreenSolution> = oracle
        .iter()
        .filter(|s| s.eta == eta && (1..=3).contains(&((s.a + s.eta) * s.b).abs()))
        .copied()
        .collect();
    if bounded != consistent {
        return Err(Error::Internal(format!("green enumeration {consistent:?} != divisor oracle {bounded:?}")));
    }
    let total = oracle.iter().filter(|s| s.eta == eta).count();
    node.cross_checks.push(format!(
        "divisor oracle: {total} solutions with eta={eta}, {} with 1 <= |u*b| <= 3; matches enumeration",
        bounded.len()
    ));
    Ok(node)
}

/// A discarded sporadic β: the genus bound confines α+β to a finite window
/// and each surviving pairing is compared with lk.
pub fn rule_reduction(ctx: &RuleContext, case: &AffineClassPair, d: i64, beta: (i64, i64)) -> Result<CaseNode> {
    ctx.report.require(&["A2", "A4d"], "sporadic reduction")?;
    let mut node = CaseNode::from_case(case, "Lemma: reduction");
    let bound = 2 * ctx.knot.g4 as u64;
    let win = genus_window(d + 1, bound).ok_or_else(|| Error::Internal(format!("no window for offset {}", d + 1)))?;
    node.parameters.insert("x".into(), "a+b1".into());
    node.parameters.insert("offset".into(), (d + 1).to_string());
    node.leaves.push(CaseLeaf {
        label: "x outside genus window".into(),
        classes: BTreeMap::new(),
        knot: None,
        verdict: ObstructionVerdict {
            outcome: Outcome::RuledOut,
            rule: "genus_window".into(),
            citation: cite("reduction", "genus function"),
            witness: Witness::GenusWindow {
                offset: win.offset,
                genus_bound: win.genus_bound,
                lower_cutoff: win.lower_cutoff,
                upper_cutoff: win.upper_cutoff,
                genus_at_cutoffs: win.genus_at_cutoffs,
                solutions: win.solutions.clone(),
            },
        },
        branches: vec![],
        flags: vec![],
    });
    let be = HomologyClass::pair(beta.0, beta.1);
    for x in win.solutions {
        let a = x - beta.0;
        let al = HomologyClass::pair(a, a + 1);
        let v = linking_verdict(&al, &be, ctx.lk, &cite("reduction", "linking"));
        let f = pair_cp2(&al, &be);
        node.leaves.push(CaseLeaf {
            label: format!("x = {x}"),
            classes: classes(&[("alpha", &al), ("beta", &be), ("alpha+beta", &al.add(&be))]),
            knot: None,
            verdict: v,
            branches: vec![],
            flags: a4d_flags(f),
        });
    }
    Ok(node)
}

fn cable_branches(
    first: &KnotExpression,
    second: &KnotExpression,
    x: &HomologyClass,
    y: &HomologyClass,
    n: i64,
    w: RootOfUnity,
    lemma: &str,
) -> Result<Vec<Branch>> {
    let ambient = AmbientProfile::cp2_bcp2();
    derived_discs(first, second, x, y, n)?
        .into_iter()
        .filter(|d| d.construction == Construction::CableSum)
        .map(|d| {
            let sig = eval_signature(&d.knot, w)?;
            let mut v = signature_obstruction(sig, &ambient, &d.class, 0, w)?;
            v.citation = cite(lemma, "signature");
            Ok(Branch { sign_choice: d.sign_choice, knot: d.knot.to_string(), verdict: v })
        })
        .collect()
}

fn leaf_from_branches(label: &str, cls: BTreeMap<String, HomologyClass>, branches: Vec<Branch>) -> CaseLeaf {
    let closing = branches.iter().position(|b| b.verdict.is_ruled_out());
    let chosen = &branches[closing.unwrap_or(0)];
    let ruled = branches.iter().filter(|b| b.verdict.is_ruled_out()).count();
    let mut flags = Vec::new();
    if ruled == 1 && branches.len() > 1 {
        flags.push("single_branch_closure".into());
    }
    CaseLeaf {
        label: label.into(),
        classes: cls,
        knot: Some(chosen.knot.clone()),
        verdict: chosen.verdict.clone(),
        branches,
        flags,
    }
}

/// β = (3, 1): lk = 6j+1, a = −3j, the cable disc A # B_(2,12j−14±1) in class
/// α+2β = (−3j+6, −3j+3) at ζ₃.
pub fn rule_sporadic_3(ctx: &RuleContext, case: &AffineClassPair) -> Result<CaseNode> {
    ctx.report.require(&["A4a", "A4e", "A7"], "sporadic (3,1)")?;
    if (ctx.lk - 1).rem_euclid(6) != 0 {
        return Err(Error::Precondition(format!("lk = {} is not 1 mod 6", ctx.lk)));
    }
    let mut node = CaseNode::from_case(case, "Lemma: 3-signatures");
    let j0 = (ctx.lk - 1) / 6;
    node.parameters.insert("j".into(), j0.to_string());
    node.parameters.insert("a".into(), "-3*j".into());
    let w = root(1, 3);

    // Symbolic pass in j.
    let aj = Poly::linear(0, &[(-3, "j")]);
    let alpha = SymClass::new(aj.clone(), aj.add(&Poly::constant(1)));
    let beta = case.beta.clone();
    let lk_j = Poly::linear(1, &[(6, "j")]);
    if !alpha.pairing(&beta).add(&lk_j).is_zero() {
        return Err(Error::Internal("a = -3j does not satisfy the linking constraint".into()));
    }
    let class = alpha.add(&beta.scale(2));
    let square = class.square();
    if !class.divisible_by(3) || square != Poly::linear(27, &[(-18, "j")]) {
        return Err(Error::Internal(format!("class {class} with square {square} is not as expected")));
    }
    let middle = square.div_exact(9).ok_or_else(|| Error::Internal("square not divisible by 9".into()))?.scale(4);
    let beta_sq = beta.square().as_constant().expect("concrete beta");

    let a_knot = ctx.expr();
    let s_sum = ctx.knot.signature(w)? + ctx.knot.signature(w.conj())?;
    for s in [1i64, -1] {
        let c = -2 * beta_sq as i64 + 2 + s; // q = −2β² − 2n ± 1 with n = −6j−1
        let torus = torus2_signature_affine(12, c, w)?
            .ok_or_else(|| Error::Internal(format!("torus term for q = 12j{c:+} is not affine")))?;
        let torus_poly = Poly::linear(torus.intercept as i128, &[(torus.slope as i128, "j")]);
        let lhs = Poly::var("S").add(&torus_poly).sub(&middle);
        if lhs.involves("j") {
            return Err(Error::Internal(format!("3-signature inequality {lhs} depends on j")));
        }
        let mut samples = Vec::new();
        for j in j0 - 2..=j0 + 2 {
            let lk = 6 * j + 1;
            let al = HomologyClass::pair(-3 * j, -3 * j + 1);
            let be = HomologyClass::pair(3, 1);
            let br = cable_branches(&a_knot, &a_knot, &al, &be, -lk, w, "3-signatures")?;
            let b = br.iter().find(|b| b.sign_choice as i64 == s).expect("both signs");
            samples.push((j, lhs_of(&b.verdict)));
        }
        require_constant(&samples, "3-signature inequality")?;
        let predicted = lhs.eval(&[("S", s_sum as i128)]).expect("constant").to_string();
        if samples[0].1 != predicted {
            return Err(Error::Internal(format!("3-signature numeric lhs {} != symbolic {predicted}", samples[0].1)));
        }
        node.symbolic.push(SymbolicCheck {
            quantity: format!("lhs, branch {s:+}, S = sigma_A(1/3) + sigma_B(1/3)"),
            expression: lhs.to_string(),
            parameter: "j".into(),
            samples,
        });
    }
    let al = HomologyClass::pair(-3 * j0, -3 * j0 + 1);
    let be = HomologyClass::pair(3, 1);
    if !lk_consistency(&al, &be, ctx.lk) {
        return Err(Error::Internal("sporadic (3,1) classes violate the linking constraint".into()));
    }
    let branches = cable_branches(&a_knot, &a_knot, &al, &be, -ctx.lk, w, "3-signatures")?;
    let disc = al.add(&be.scaled(2));
    node.leaves.push(leaf_from_branches(
        "cable disc alpha+2beta",
        classes(&[("alpha", &al), ("beta", &be), ("alpha+2beta", &disc)]),
        branches,
    ));
    Ok(node)
}

/// β = (−1, −3): lk = 10k+1, a = −5k−2, roles swapped, the disc
/// A_(2,−4±1) # B in class 2α+β = (−10k−5, −10k−5) at ζ₅.
pub fn rule_sporadic_5(ctx: &RuleContext, case: &AffineClassPair) -> Result<CaseNode> {
    ctx.report.require(&["A3", "A4a", "A4f", "A8"], "sporadic (-1,-3)")?;
    if (ctx.lk - 1).rem_euclid(10) != 0 {
        return Err(Error::Precondition(format!("lk = {} is not 1 mod 10", ctx.lk)));
    }
    let mut node = CaseNode::from_case(case, "Lemma: 5-signatures");
    let k0 = (ctx.lk - 1) / 10;
    node.parameters.insert("k".into(), k0.to_string());
    node.parameters.insert("a".into(), "-5*k-2".into());
    let w = root(1, 5);

    let ak = Poly::linear(-2, &[(-5, "k")]);
    let alpha = SymClass::new(ak.clone(), ak.add(&Poly::constant(1)));
    let beta = case.beta.clone();
    let lk_k = Poly::linear(1, &[(10, "k")]);
    if !alpha.pairing(&beta).add(&lk_k).is_zero() {
        return Err(Error::Internal("a = -5k-2 does not satisfy the linking constraint".into()));
    }
    let alpha_sq = alpha.square();
    if alpha_sq != Poly::linear(3, &[(10, "k")]) {
        return Err(Error::Internal(format!("alpha^2 = {alpha_sq}, expected 10k+3")));
    }
    let n = lk_k.scale(-1);
    let class = beta.add(&alpha.scale(2));
    if !class.square().is_zero() || !class.divisible_by(5) {
        return Err(Error::Internal(format!("class {class} is not square-zero and 5-divisible")));
    }
    let a_knot = ctx.expr();
    let s_sum = ctx.knot.signature(w)? + ctx.knot.signature(root(2, 5))?;
    for s in [1i64, -1] {
        let q = alpha_sq.scale(-2).sub(&n.scale(2)).add(&Poly::constant(s as i128));
        let q = q.as_constant().ok_or_else(|| Error::Internal(format!("cable parameter {q} depends on k")))? as i64;
        let lhs = Poly::linear(torus2_signature(q, w)? as i128, &[(1, "S")]);
        let mut samples = Vec::new();
        for k in k0 - 2..=k0 + 2 {
            let lk = 10 * k + 1;
            let al = HomologyClass::pair(-5 * k - 2, -5 * k - 1);
            let be = HomologyClass::pair(-1, -3);
            let br = cable_branches(&a_knot, &a_knot, &be, &al, -lk, w, "5-signatures")?;
            let b = br.iter().find(|b| b.sign_choice as i64 == s).expect("both signs");
            samples.push((k, lhs_of(&b.verdict)));
        }
        require_constant(&samples, "5-signature inequality")?;
        let predicted = lhs.eval(&[("S", s_sum as i128)]).expect("constant").to_string();
        if samples[0].1 != predicted {
            return Err(Error::Internal(format!("5-signature numeric lhs {} != symbolic {predicted}", samples[0].1)));
        }
        node.symbolic.push(SymbolicCheck {
            quantity: format!("lhs, branch {s:+}, q = {q}, S = sigma_A(1/5) + sigma_A(2/5)"),
            expression: lhs.to_string(),
            parameter: "k".into(),
            samples,
        });
    }
    let al = HomologyClass::pair(-5 * k0 - 2, -5 * k0 - 1);
    let be = HomologyClass::pair(-1, -3);
    if !lk_consistency(&al, &be, ctx.lk) {
        return Err(Error::Internal("sporadic (-1,-3) classes violate the linking constraint".into()));
    }
    let branches = cable_branches(&a_knot, &a_knot, &be, &al, -ctx.lk, w, "5-signatures")?;
    let disc = be.add(&al.scaled(2));
    node.leaves.push(leaf_from_branches(
        "cable disc 2alpha+beta",
        classes(&[("alpha", &al), ("beta", &be), ("2alpha+beta", &disc)]),
        branches,
    ));
    Ok(node)
}
