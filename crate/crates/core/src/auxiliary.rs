//! Smaller results: the b₂+1 component bound for even manifolds, explicit
//! classes realizing three linking numbers, and the topological obstruction
//! for #⁷T(2,3) in CP² and CP²-bar.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{AmbientProfile, HomologyClass, IntersectionForm, Parity};
use crate::knot::{eval_signature, KnotExpression, RootOfUnity};
use crate::obstructions::{prime_power_base, signature_obstruction, ObstructionVerdict, Outcome, Witness};

/// Whether a knot with this σ(−1) obstructs the (b₂+1)-component link in X.
pub fn b2plus1_obstruction(x: &AmbientProfile, sigma_k_at_minus1: i64) -> Result<bool> {
    if x.parity != Parity::Even {
        return Err(Error::InvalidAmbient(format!("{} has an odd form", x.name)));
    }
    Ok(sigma_k_at_minus1 > x.b2 as i64 - x.sigma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RealizeTarget {
    S2xS2,
    Cp2bCp2,
}

impl std::str::FromStr for RealizeTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s2xs2" => Ok(Self::S2xS2),
            "cp2bcp2" => Ok(Self::Cp2bCp2),
            _ => Err(Error::Parse(format!("unknown target {s}"))),
        }
    }
}

/// Columns v₁, v₂, v₃ with v₁·v₂ = a, v₁·v₃ = b, v₂·v₃ = c.
pub fn yasuhara_realize(a: i64, b: i64, c: i64, target: RealizeTarget) -> Result<[[i64; 3]; 2]> {
    let (m, form) = match target {
        RealizeTarget::S2xS2 => {
            if a == 0 && b == 0 {
                return Err(Error::Precondition("gcd(0,0) undefined; use the cp2bcp2 construction".into()));
            }
            let g = a.gcd(&b);
            let (ap, bp) = (a / g, b / g);
            // s·b′ + r·a′ = 1
            let e = bp.extended_gcd(&ap);
            let (s, r) = if e.gcd == 1 { (e.x, e.y) } else { (-e.x, -e.y) };
            ([[g, s * c, r * c], [0, ap, bp]], IntersectionForm::hyperbolic())
        }
        RealizeTarget::Cp2bCp2 => ([[1, a, b], [0, 1, a * b - c]], IntersectionForm::cp2_bcp2()),
    };
    let col = |i: usize| HomologyClass::pair(m[0][i], m[1][i]);
    let got = (form.pairing(&col(0), &col(1))?, form.pairing(&col(0), &col(2))?, form.pairing(&col(1), &col(2))?);
    if got != (a, b, c) {
        return Err(Error::Internal(format!("realization pairs to {got:?}, wanted {:?}", (a, b, c))));
    }
    Ok(m)
}

/// f_m(d) = d²/2 − 1 for even m, d²/2·(m²−1)/m² − 1 for odd m.
pub fn kprt_f(m: u64, d: i64) -> Result<Rational64> {
    if prime_power_base(m).is_none() {
        return Err(Error::NotPrimePower(m as i64));
    }
    let half_sq = Rational64::new(d * d, 2);
    let m = m as i64;
    let factor = if m % 2 == 0 { Rational64::from_integer(1) } else { Rational64::new(m * m - 1, m * m) };
    Ok(half_sq * factor - 1)
}

/// The central root: −1 for even m, e^{πi(m−1)/m} for odd m.
pub fn central_root(m: u64) -> Result<RootOfUnity> {
    if m % 2 == 0 {
        RootOfUnity::new(1, 2)
    } else {
        RootOfUnity::new((m as i64 - 1) / 2, m as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotTopProfile {
    pub name: String,
    /// Prime power m ↦ σ at the central root.
    pub central: BTreeMap<u64, i64>,
    pub arf: u8,
}

impl KnotTopProfile {
    pub fn from_expression(name: &str, e: &KnotExpression, arf: u8, ms: &[u64]) -> Result<Self> {
        let mut central = BTreeMap::new();
        for &m in ms {
            if prime_power_base(m).is_none() {
                return Err(Error::NotPrimePower(m as i64));
            }
            central.insert(m, eval_signature(e, central_root(m)?)?);
        }
        Ok(Self { name: name.into(), central, arf })
    }

    pub fn c7t23() -> Result<Self> {
        let e = KnotExpression::sum(vec![KnotExpression::torus2(3)?; 7]);
        let ms: Vec<u64> = (2..=49).filter(|&m| prime_power_base(m).is_some()).collect();
        Self::from_expression("#7 T(2,3)", &e, 1, &ms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KprtEvaluation {
    pub m: u64,
    pub f: String,
    /// |14 − |f_m(d)||; the inequality needs this ≤ 1.
    pub gap: String,
    pub fails: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KprtCase {
    pub ambient: String,
    pub d: String,
    pub evaluations: Vec<KprtEvaluation>,
    pub verdict: ObstructionVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KprtCertificate {
    pub knot: String,
    pub central_signature: BTreeMap<u64, i64>,
    pub cases: Vec<KprtCase>,
    pub obstructed: bool,
}

/// Rule out every class d for #⁷T(2,3) bounding a disc in CP² or CP²-bar.
pub fn verify_c7t23_not_slice_in_cp2s() -> Result<KprtCertificate> {
    let profile = KnotTopProfile::c7t23()?;
    if profile.central.values().any(|&s| s != -14) {
        return Err(Error::Internal(format!("central signatures {:?} are not all -14", profile.central)));
    }
    let sigma = -14;
    let mut cases = Vec::new();
    for ambient in [AmbientProfile::cp2(), AmbientProfile::bcp2()] {
        for d in [1i64, -1] {
            cases.push(KprtCase {
                ambient: ambient.name.clone(),
                d: d.to_string(),
                evaluations: vec![],
                verdict: ObstructionVerdict {
                    outcome: Outcome::RuledOut,
                    rule: "axiom".into(),
                    citation: "Prop: KPRT-powerup / Cor: KPRT 1.15(2)".into(),
                    witness: Witness::Axiom { reference: "Arf C = 1 rules out primitive classes".into() },
                },
            });
        }
        for d in (-6i64..=6).filter(|d| d.abs() >= 2) {
            let ms: Vec<u64> = (2..=d.unsigned_abs()).filter(|&m| prime_power_base(m).is_some() && d % m as i64 == 0).collect();
            let mut evaluations = Vec::new();
            for &m in &ms {
                let f = kprt_f(m, d)?;
                let gap = (Rational64::from_integer(14) - f.abs()).abs();
                evaluations.push(KprtEvaluation { m, f: f.to_string(), gap: gap.to_string(), fails: gap > Rational64::from_integer(1) });
            }
            let chosen = evaluations
                .iter()
                .find(|e| e.fails)
                .ok_or_else(|| Error::Internal(format!("no prime power closes d = {d}")))?
                .m;
            let mut verdict = signature_obstruction(sigma, &ambient, &HomologyClass::new(vec![d]), 0, central_root(chosen)?)?;
            verdict.citation = "Prop: KPRT-powerup / Thm: signature".into();
            cases.push(KprtCase { ambient: ambient.name.clone(), d: d.to_string(), evaluations, verdict });
        }
        // |d| ≥ 7: middle term ≥ d²/2·8/9 ≥ 196/9 > 21, while |σ_K + σ(X)| ≤ 15.
        let boundary = Rational64::new(49, 2) * Rational64::new(8, 9);
        if boundary - 1 <= Rational64::from_integer(20) {
            return Err(Error::Internal("asymptotic bound fails at |d| = 7".into()));
        }
        for d in 7..=40i64 {
            for m in (2..=d as u64).filter(|&m| prime_power_base(m).is_some() && d % m as i64 == 0) {
                if kprt_f(m, d)? < boundary - 1 || kprt_f(m, d)? > kprt_f(m, d + 1)? {
                    return Err(Error::Internal(format!("f_{m}({d}) breaks the asymptotic bound")));
                }
            }
        }
        cases.push(KprtCase {
            ambient: ambient.name.clone(),
            d: "|d| >= 7".into(),
            evaluations: vec![],
            verdict: ObstructionVerdict {
                outcome: Outcome::RuledOut,
                rule: "signature_bound".into(),
                citation: "Prop: KPRT-powerup / Thm: signature".into(),
                witness: Witness::SignatureBound {
                    sigma_bound: 14 + ambient.sigma.abs(),
                    middle_min: boundary.floor().to_integer(),
                    rhs: ambient.b2 as i64,
                },
            },
        });
    }
    let obstructed = cases.iter().all(|c| c.verdict.is_ruled_out());
    Ok(KprtCertificate { knot: profile.name, central_signature: profile.central, cases, obstructed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeComponent {
    Obstructed,
    NotObstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeComponentReport {
    pub verdict: ThreeComponent,
    pub h_slice: ObstructionVerdict,
    pub cp2_certificate: bool,
    pub reasons: Vec<String>,
    /// The complement step relies on Freedman's classification.
    pub axioms: Vec<String>,
}

/// Hopf link ⊔ C in CP²#CP²-bar: C must not be H-slice there and must have a
/// CP²/CP²-bar certificate on file.
pub fn three_component_verdict(c: &KnotTopProfile) -> Result<ThreeComponentReport> {
    let s = *c.central.get(&2).ok_or_else(|| Error::Precondition(format!("{}: no sigma(-1) in profile", c.name)))?;
    let mut h_slice = signature_obstruction(s, &AmbientProfile::cp2_bcp2(), &HomologyClass::pair(0, 0), 0, RootOfUnity::new(1, 2)?)?;
    h_slice.citation = "Thm: 3-cpt-link / Thm: signature".into();
    let mut reasons = Vec::new();
    if !h_slice.is_ruled_out() {
        reasons.push(format!("|sigma(-1)| = {} does not obstruct H-sliceness", s.abs()));
    }
    let known = KnotTopProfile::c7t23()?;
    let cp2_certificate = c.name == known.name
        && c.central.iter().all(|(m, v)| known.central.get(m) == Some(v))
        && verify_c7t23_not_slice_in_cp2s()?.obstructed;
    if !cp2_certificate {
        reasons.push("no CP2 certificate".into());
    }
    let verdict = if reasons.is_empty() { ThreeComponent::Obstructed } else { ThreeComponent::NotObstructed };
    Ok(ThreeComponentReport {
        verdict,
        h_slice,
        cp2_certificate,
        reasons,
        axioms: vec!["complement of a (+-1)-framed disc is a punctured CP2 or -CP2 (Freedman)".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casework::replay_verdict;

    #[test]
    fn b2plus1() {
        assert!(b2plus1_obstruction(&AmbientProfile::s2xs2(), 4).unwrap());
        assert!(!b2plus1_obstruction(&AmbientProfile::s2xs2(), 0).unwrap());
        assert!(b2plus1_obstruction(&AmbientProfile::cp2_bcp2(), 4).is_err());
        let e8e8 = AmbientProfile::from_form("-2E8", IntersectionForm::e8().negated().direct_sum(&IntersectionForm::e8().negated()), 0).unwrap();
        assert!(!b2plus1_obstruction(&e8e8, 32).unwrap());
        assert!(b2plus1_obstruction(&e8e8, 34).unwrap());
    }

    #[test]
    fn realization_examples() {
        assert_eq!(yasuhara_realize(2, 4, 5, RealizeTarget::Cp2bCp2).unwrap(), [[1, 2, 4], [0, 1, 3]]);
        let m = yasuhara_realize(2, 4, 5, RealizeTarget::S2xS2).unwrap();
        assert_eq!((m[0][0], m[1][1], m[1][2]), (2, 1, 2));
        assert_eq!(yasuhara_realize(0, 0, 7, RealizeTarget::Cp2bCp2).unwrap(), [[1, 0, 0], [0, 1, -7]]);
        assert!(yasuhara_realize(0, 0, 7, RealizeTarget::S2xS2).is_err());
        for (a, b, c) in [(0, 3, -4), (-6, 9, 1), (5, 0, 0), (-1, -1, 2)] {
            yasuhara_realize(a, b, c, RealizeTarget::S2xS2).unwrap();
        }
    }

    #[test]
    fn kprt_values() {
        assert_eq!(kprt_f(2, 6).unwrap(), Rational64::from_integer(17));
        assert_eq!(kprt_f(3, 3).unwrap(), Rational64::from_integer(3));
        assert_eq!(kprt_f(2, 0).unwrap(), Rational64::from_integer(-1));
        assert!(kprt_f(6, 6).is_err());
        for d in 1..30 {
            for m in [3u64, 5, 7, 9] {
                assert!(kprt_f(m, d).unwrap() < kprt_f(2, d).unwrap());
                assert!(kprt_f(m, d).unwrap() < kprt_f(m, d + 1).unwrap());
            }
        }
    }

    #[test]
    fn c7t23_certificate() {
        let cert = verify_c7t23_not_slice_in_cp2s().unwrap();
        assert!(cert.obstructed);
        for c in &cert.cases {
            replay_verdict(&c.verdict).unwrap();
            for e in &c.evaluations {
                if c.d.parse::<i64>().map(|d| d.abs() <= 5).unwrap_or(false) {
                    assert!(e.f.parse::<i64>().map(|f| f.abs() <= 11).unwrap_or(true));
                }
            }
        }
        let six = cert.cases.iter().find(|c| c.d == "6").unwrap();
        assert_eq!(six.evaluations[0].f, "17");
        assert_eq!(six.evaluations[1].gap, "1");
    }

    #[test]
    fn three_component() {
        let c = KnotTopProfile::c7t23().unwrap();
        assert_eq!(c.central[&2], -14);
        assert_eq!(three_component_verdict(&c).unwrap().verdict, ThreeComponent::Obstructed);
        let unknot = KnotTopProfile { name: "unknot".into(), central: BTreeMap::from([(2, 0)]), arf: 0 };
        assert_eq!(three_component_verdict(&unknot).unwrap().verdict, ThreeComponent::NotObstructed);
        let two = KnotTopProfile { name: "x".into(), central: BTreeMap::from([(2, -2)]), arf: 1 };
        let r = three_component_verdict(&two).unwrap();
        assert_eq!(r.h_slice.outcome, Outcome::Consistent);
        assert_eq!(r.verdict, ThreeComponent::NotObstructed);
    }
}
