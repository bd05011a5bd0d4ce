//! Certificate engine: assumption checks, symmetry-reduced case generation,
//! one rule per case, and an independent replay of the resulting witnesses.

pub mod assumptions;
pub mod cases;
pub mod certificate;
pub mod replay;
pub mod rules;

pub use assumptions::{check_assumptions, AssumptionItem, AssumptionReport, Declared, Status, A4D_EXCLUDED};
pub use cases::{coverage, decomposition_exclusions, generate_cases, AffineClassPair, Coverage, Exclusion};
pub use certificate::{certify_not_slice, record_digest, CertInput, Certificate, Verdict};
pub use replay::{replay_certificate, replay_verdict};
pub use rules::{
    green_divisor_oracle, green_f, green_small_products, rule_blue, rule_green, rule_grey, rule_reduction,
    rule_sporadic_3, rule_sporadic_5, CaseLeaf, CaseNode, GreenSolution, RuleContext, GREEN_LISTED_PAIRS,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{KnotRecord, RootOfUnity};

    fn k10_125() -> KnotRecord {
        let w = |r, m| RootOfUnity::new(r, m).unwrap();
        KnotRecord::new("10_125", 1, 1, [(w(1, 2), 2), (w(1, 3), 0), (w(1, 5), 0), (w(2, 5), 2)], None).unwrap()
    }

    #[test]
    fn fig1_link_is_certified() {
        let cert = certify_not_slice(&k10_125(), -29, Declared::default());
        assert_eq!(cert.verdict, Verdict::NotSlice, "{:?}", cert.reasons);
        replay_certificate(&cert).unwrap();
        assert_eq!(
            cert.leaf_citations(),
            ["Lemma: table1", "Lemma: table3", "Lemma: table2", "Lemma: reduction", "Lemma: 3-signatures", "Lemma: 5-signatures"]
        );
        let sp3 = cert.cases.iter().find(|c| c.label == "sporadic (3,1)").unwrap();
        assert_eq!(sp3.leaves[0].flags, vec!["single_branch_closure".to_string()]);
    }

    #[test]
    fn reduction_tables() {
        let cert = certify_not_slice(&k10_125(), -29, Declared::default());
        let values = |label: &str| -> Vec<i64> {
            let n = cert.cases.iter().find(|c| c.label == label).unwrap();
            n.leaves
                .iter()
                .filter_map(|l| match &l.verdict.witness {
                    crate::obstructions::Witness::Linking(w) => Some(w.pairing),
                    _ => None,
                })
                .collect()
        };
        let mut t = values("reduction (-1,3)");
        t.sort();
        assert_eq!(t, vec![1, 5]);
        let mut t = values("reduction (1,-3)");
        t.sort();
        assert_eq!(t, vec![-1, 3, 7, 11]);
        let mut t = values("reduction (-3,-1)");
        t.sort();
        assert_eq!(t, vec![-5, -3, -1, 1]);
    }

    #[test]
    fn green_values() {
        let v: Vec<i64> = GREEN_LISTED_PAIRS.iter().map(|&(a, b)| green_f(0, a, b)).collect();
        assert_eq!(v, vec![5, -1, -1, 1, 11, -7, -3, 3]);
        for a in -10..=10 {
            for b in -10..=10 {
                assert_eq!(green_f(1, a, b), -green_f(0, -a, b));
                assert_eq!(green_f(0, a, b), green_f(0, b, a));
            }
        }
    }

    #[test]
    fn oracle_solutions_satisfy_pairing() {
        let sols = green_divisor_oracle(-29);
        assert!(sols.iter().any(|s| s.eta == 0 && (2 * s.a + 1) * (2 * s.b + 1) == 57));
        for s in sols {
            assert_eq!(green_f(s.eta, s.a + s.eta, s.b), 29);
        }
    }

    #[test]
    fn gates() {
        let k = k10_125();
        for lk in [1, 3, -7, 2] {
            assert_eq!(certify_not_slice(&k, lk, Declared::default()).verdict, Verdict::Inconclusive);
        }
        let cert = certify_not_slice(&KnotRecord::unknot(), -29, Declared::default());
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert!(cert.reasons.iter().any(|r| r.contains("A2")) || cert.reasons.iter().any(|r| r.contains("assumptions")));
    }
}
