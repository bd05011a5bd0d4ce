//! Obstruction primitives: the Levine–Tristram signature bound for surfaces in
//! closed 4-manifolds, the Arf congruence for characteristic discs, the
//! linking-number identity α·β = −lk, the derived discs obtained by band sums
//! and cables, and the mod-2 trichotomy on S²×S².

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{AmbientProfile, HomologyClass};
use crate::knot::{KnotExpression, RootOfUnity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    RuledOut,
    Consistent,
    Inapplicable,
}

/// Numbers entering a signature inequality
/// |σ_K(ω) + σ(X) − 2r(m−r)[Σ]²/m²| ≤ b₂(X) + 2g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureWitness {
    pub knot_signature: i64,
    pub r: u64,
    pub m: u64,
    pub class: HomologyClass,
    pub class_square: i64,
    pub divisibility: i64,
    pub ambient: String,
    pub ambient_signature: i64,
    pub b2: i64,
    pub genus: u64,
    pub middle_term: String,
    pub lhs: String,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArfWitness {
    pub arf: u8,
    pub class: HomologyClass,
    pub class_square: i64,
    pub ambient: String,
    pub ambient_signature: i64,
    pub quotient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingWitness {
    pub alpha: HomologyClass,
    pub beta: HomologyClass,
    pub pairing: i64,
    pub lk: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Signature(SignatureWitness),
    Arf(ArfWitness),
    Linking(LinkingWitness),
    /// Each class is divisible by `divisor`, so is every pairing with it,
    /// while lk is not.
    Divisibility { classes: Vec<HomologyClass>, divisor: i64, lk: i64 },
    /// Every pairing left × right is divisible by `divisor`, while lk is not.
    PairingDivisibility { left: Vec<HomologyClass>, right: Vec<HomologyClass>, divisor: i64, lk: i64 },
    /// Classes (x, x+offset) exceed the genus bound unless x is a listed
    /// solution; beyond the cutoffs the genus only grows.
    GenusWindow {
        offset: i64,
        genus_bound: u64,
        lower_cutoff: i64,
        upper_cutoff: i64,
        genus_at_cutoffs: (u64, u64),
        /// x strictly inside the window with genus ≤ bound; handled elsewhere.
        solutions: Vec<i64>,
    },
    /// |σ| ≤ sigma_bound and |middle| ≥ middle_min give |lhs| ≥ middle_min − sigma_bound > rhs.
    SignatureBound { sigma_bound: i64, middle_min: i64, rhs: i64 },
    /// A step taken from the literature rather than recomputed.
    Axiom { reference: String },
    None { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub outcome: Outcome,
    pub rule: String,
    pub citation: String,
    pub witness: Witness,
}

impl ObstructionVerdict {
    pub fn is_ruled_out(&self) -> bool {
        self.outcome == Outcome::RuledOut
    }
}

/// The prime p with m = p^k, if m is a prime power ≥ 2.
pub fn prime_power_base(m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let p = (2..=m).find(|d| m % d == 0)?;
    let mut x = m;
    while x % p == 0 {
        x /= p;
    }
    (x == 1).then_some(p)
}

/// 2r(m−r)/m² · square, as an exact rational.
pub fn signature_middle_term(w: RootOfUnity, square: i64) -> Rational64 {
    let (r, m) = (w.r() as i64, w.m() as i64);
    Rational64::new(2 * r * (m - r) * square, m * m)
}

pub fn signature_obstruction(
    sig_value: i64,
    ambient: &AmbientProfile,
    cls: &HomologyClass,
    genus: u64,
    w: RootOfUnity,
) -> Result<ObstructionVerdict> {
    let red = w.reduced();
    let square = ambient.form.square(cls)?;
    let div = cls.divisibility();
    let middle = signature_middle_term(red, square);
    let lhs = Rational64::from_integer(sig_value + ambient.sigma) - middle;
    let rhs = ambient.b2 as i64 + 2 * genus as i64;
    let applicable = prime_power_base(red.m()).is_some() && (div == 0 || div % red.m() as i64 == 0);
    let outcome = if !applicable {
        Outcome::Inapplicable
    } else if lhs.abs() > Rational64::from_integer(rhs) {
        Outcome::RuledOut
    } else {
        Outcome::Consistent
    };
    Ok(ObstructionVerdict {
        outcome,
        rule: "signature".into(),
        citation: "Thm: signature".into(),
        witness: Witness::Signature(SignatureWitness {
            knot_signature: sig_value,
            r: red.r(),
            m: red.m(),
            class: cls.clone(),
            class_square: square,
            divisibility: div,
            ambient: ambient.name.clone(),
            ambient_signature: ambient.sigma,
            b2: ambient.b2 as i64,
            genus,
            middle_term: middle.to_string(),
            lhs: lhs.to_string(),
            rhs,
        }),
    })
}

/// Arf congruence for a smooth disc: (σ(X) − [Σ]²)/8 ≡ Arf K (mod 2).
pub fn arf_obstruction(arf: u8, ambient: &AmbientProfile, cls: &HomologyClass) -> Result<ObstructionVerdict> {
    let square = ambient.form.square(cls)?;
    let characteristic = ambient.form.is_characteristic(cls)?;
    let diff = ambient.sigma - square;
    if characteristic && diff % 8 != 0 {
        return Err(Error::Internal(format!(
            "characteristic class {cls} has sigma - square = {diff}, not divisible by 8"
        )));
    }
    let quotient = diff.div_euclid(8);
    let outcome = if !characteristic {
        Outcome::Inapplicable
    } else if quotient.rem_euclid(2) != arf as i64 {
        Outcome::RuledOut
    } else {
        Outcome::Consistent
    };
    Ok(ObstructionVerdict {
        outcome,
        rule: "arf".into(),
        citation: "Thm: Arf".into(),
        witness: Witness::Arf(ArfWitness {
            arf,
            class: cls.clone(),
            class_square: square,
            ambient: ambient.name.clone(),
            ambient_signature: ambient.sigma,
            quotient,
        }),
    })
}

/// α·β = −lk in CP²#CP²-bar.
pub fn lk_consistency(alpha: &HomologyClass, beta: &HomologyClass, lk: i64) -> bool {
    pair_cp2(alpha, beta) == -lk
}

pub(crate) fn pair_cp2(x: &HomologyClass, y: &HomologyClass) -> i64 {
    x.coords[0] * y.coords[0] - x.coords[1] * y.coords[1]
}

pub fn linking_verdict(alpha: &HomologyClass, beta: &HomologyClass, lk: i64, citation: &str) -> ObstructionVerdict {
    let pairing = pair_cp2(alpha, beta);
    ObstructionVerdict {
        outcome: if pairing == -lk { Outcome::Consistent } else { Outcome::RuledOut },
        rule: "linking".into(),
        citation: citation.into(),
        witness: Witness::Linking(LinkingWitness { alpha: alpha.clone(), beta: beta.clone(), pairing, lk }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Sum,
    ReversedSumWithTorus,
    CableSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedDisc {
    pub knot: KnotExpression,
    pub class: HomologyClass,
    pub construction: Construction,
    /// ±1 for the two band twists; 0 where the construction has no choice.
    pub sign_choice: i8,
    /// T(2,q) or cable parameter, where present.
    pub parameter: Option<i64>,
}

/// The discs of the band-sum and cabling constructions, n = −lk = α·β.
/// Returns A#B (α+β), A#B^r#T(2,2n±1) (α−β) and A#B_(2,−2β²−2n±1) (α+2β).
pub fn derived_discs(
    a: &KnotExpression,
    b: &KnotExpression,
    alpha: &HomologyClass,
    beta: &HomologyClass,
    n: i64,
) -> Result<Vec<DerivedDisc>> {
    if pair_cp2(alpha, beta) != n {
        return Err(Error::Precondition(format!(
            "alpha.beta = {} but n = {n}",
            pair_cp2(alpha, beta)
        )));
    }
    let beta_sq = pair_cp2(beta, beta);
    let mut out = vec![DerivedDisc {
        knot: KnotExpression::sum(vec![a.clone(), b.clone()]),
        class: alpha.add(beta),
        construction: Construction::Sum,
        sign_choice: 0,
        parameter: None,
    }];
    for s in [1i8, -1] {
        let q = 2 * n + s as i64;
        let mut parts = vec![a.clone(), KnotExpression::reverse(b.clone())];
        if q.abs() != 1 {
            parts.push(KnotExpression::torus2(q)?);
        }
        out.push(DerivedDisc {
            knot: KnotExpression::sum(parts),
            class: alpha.sub(beta),
            construction: Construction::ReversedSumWithTorus,
            sign_choice: s,
            parameter: Some(q),
        });
    }
    for s in [1i8, -1] {
        let q = -2 * beta_sq - 2 * n + s as i64;
        out.push(DerivedDisc {
            knot: KnotExpression::sum(vec![a.clone(), KnotExpression::cable2(b.clone(), q)?]),
            class: alpha.add(&beta.scaled(2)),
            construction: Construction::CableSum,
            sign_choice: s,
            parameter: Some(q),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trichotomy {
    AChar,
    BChar,
    SumChar,
    ViolatesHypothesis,
}

/// For the hyperbolic form, characteristic means both residues are 0. When
/// a·b′ + a′·b is even one of α, β, α+β is characteristic.
pub fn my_trichotomy(alpha: (u8, u8), beta: (u8, u8)) -> Trichotomy {
    let (a, a2) = (alpha.0 & 1, alpha.1 & 1);
    let (b, b2) = (beta.0 & 1, beta.1 & 1);
    if (a * b2 + a2 * b) % 2 == 1 {
        return Trichotomy::ViolatesHypothesis;
    }
    if (a, a2) == (0, 0) {
        Trichotomy::AChar
    } else if (b, b2) == (0, 0) {
        Trichotomy::BChar
    } else if ((a + b) % 2, (a2 + b2) % 2) == (0, 0) {
        Trichotomy::SumChar
    } else {
        // Unreachable when the hypothesis holds; kept total for the brute-force check.
        Trichotomy::ViolatesHypothesis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::IntersectionForm;
    use crate::knot::{eval_signature, KnotRecord};

    fn w(r: i64, m: i64) -> RootOfUnity {
        RootOfUnity::new(r, m).unwrap()
    }

    fn c(a: i64, b: i64) -> HomologyClass {
        HomologyClass::pair(a, b)
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..30).filter(|&m| prime_power_base(m).is_some()).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }

    #[test]
    fn signature_examples() {
        let x = AmbientProfile::cp2_bcp2();
        let v = signature_obstruction(4, &x, &c(6, 6), 0, w(1, 2)).unwrap();
        assert_eq!(v.outcome, Outcome::RuledOut);
        let v = signature_obstruction(0, &x, &c(0, 0), 0, w(1, 5)).unwrap();
        assert_eq!(v.outcome, Outcome::Consistent);
        let v = signature_obstruction(4, &x, &c(3, 0), 0, w(1, 2)).unwrap();
        assert_eq!(v.outcome, Outcome::Inapplicable);
        let v = signature_obstruction(4, &x, &c(6, 0), 0, w(1, 6)).unwrap();
        assert_eq!(v.outcome, Outcome::Inapplicable);
        // Central-signature example on CP²: |−14 + 1 − 18| = 31 > 1.
        let v = signature_obstruction(-14, &AmbientProfile::cp2(), &HomologyClass::new(vec![6]), 0, w(1, 2)).unwrap();
        assert_eq!(v.outcome, Outcome::RuledOut);
        match v.witness {
            Witness::Signature(s) => assert_eq!(s.lhs, "-31"),
            _ => panic!(),
        }
    }

    #[test]
    fn zero_class_specialization() {
        let x = AmbientProfile::cp2_bcp2();
        for s in -8..=8 {
            let v = signature_obstruction(s, &x, &c(0, 0), 0, w(1, 2)).unwrap();
            assert_eq!(v.is_ruled_out(), (s + x.sigma).abs() > x.b2 as i64);
        }
    }

    #[test]
    fn arf_examples() {
        let x = AmbientProfile::cp2_bcp2();
        assert_eq!(arf_obstruction(1, &x, &c(5, 5)).unwrap().outcome, Outcome::RuledOut);
        assert_eq!(arf_obstruction(0, &x, &c(5, 5)).unwrap().outcome, Outcome::Consistent);
        assert_eq!(arf_obstruction(1, &x, &c(2, 5)).unwrap().outcome, Outcome::Inapplicable);
        let s = AmbientProfile::s2xs2();
        assert_eq!(arf_obstruction(1, &s, &c(0, 4)).unwrap().outcome, Outcome::RuledOut);
    }

    #[test]
    fn van_der_blij_on_stock_forms() {
        for x in [AmbientProfile::cp2_bcp2(), AmbientProfile::s2xs2()] {
            for a in -9..=9 {
                for b in -9..=9 {
                    if x.form.is_characteristic(&c(a, b)).unwrap() {
                        assert!(arf_obstruction(0, &x, &c(a, b)).is_ok());
                    }
                }
            }
        }
        let e8 = AmbientProfile::from_form("E8", IntersectionForm::e8(), 0).unwrap();
        assert!(arf_obstruction(0, &e8, &HomologyClass::zero(8)).is_ok());
    }

    #[test]
    fn linking_examples() {
        for a in -5..5 {
            for b in -5..5 {
                assert!(lk_consistency(&c(a, a + 1), &c(b, b + 1), a + b + 1));
            }
            assert!(lk_consistency(&c(a, a + 1), &c(3, 1), -2 * a + 1));
        }
        assert!(lk_consistency(&c(0, 0), &c(0, 0), 0));
    }

    #[test]
    fn derived_disc_parameters() {
        let k = KnotExpression::atom(KnotRecord::unknot());
        // β² = 8, n = −6j−1 at j = 2 gives cable parameter 12j − 14 ± 1.
        let j = 2;
        let a = -3 * j;
        let (alpha, beta) = (c(a, a + 1), c(3, 1));
        let discs = derived_discs(&k, &k, &alpha, &beta, -6 * j - 1).unwrap();
        assert_eq!(discs.len(), 5);
        let cables: Vec<i64> = discs.iter().filter(|d| d.construction == Construction::CableSum).map(|d| d.parameter.unwrap()).collect();
        assert_eq!(cables, vec![12 * j - 13, 12 * j - 15]);
        assert_eq!(discs[0].class, alpha.add(&beta));
        assert_eq!(discs[1].class, alpha.sub(&beta));
        assert_eq!(discs[3].class, c(-3 * j + 6, -3 * j + 3));
        assert!(derived_discs(&k, &k, &alpha, &beta, 0).is_err());
    }

    #[test]
    fn derived_discs_zero_classes() {
        let k = KnotExpression::atom(KnotRecord::unknot());
        let discs = derived_discs(&k, &k, &c(0, 0), &c(0, 0), 0).unwrap();
        assert!(discs.iter().all(|d| d.class == c(0, 0)));
        for d in discs.iter().filter(|d| d.construction == Construction::ReversedSumWithTorus) {
            assert_eq!(d.knot.to_string(), "(unknot # unknot^r)");
            assert_eq!(eval_signature(&d.knot, w(1, 2)).unwrap(), 0);
        }
    }

    #[test]
    fn trichotomy_exhaustive() {
        for x in 0..16u8 {
            let (a, b) = ((x & 1, (x >> 1) & 1), ((x >> 2) & 1, (x >> 3) & 1));
            let t = my_trichotomy(a, b);
            if (a.0 * b.1 + a.1 * b.0) % 2 == 0 {
                assert_ne!(t, Trichotomy::ViolatesHypothesis);
            } else {
                assert_eq!(t, Trichotomy::ViolatesHypothesis);
            }
        }
        assert_eq!(my_trichotomy((1, 1), (1, 1)), Trichotomy::SumChar);
        assert_eq!(my_trichotomy((0, 0), (1, 0)), Trichotomy::AChar);
    }
}
