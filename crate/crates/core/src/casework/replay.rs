//! Independent re-check of certificate witnesses. Only the intersection
//! forms, the genus function and plain rational arithmetic are used; no rule
//! code is consulted.

use num_rational::Rational64;
use num_traits::Signed;

use super::cases::{coverage, generate_cases};
use super::certificate::{Certificate, Verdict};
use crate::genus::ruberman_genus;
use crate::homology::{AmbientProfile, HomologyClass};
use crate::obstructions::{ObstructionVerdict, Witness};

fn ambient_by_name(name: &str) -> Option<AmbientProfile> {
    [AmbientProfile::cp2_bcp2(), AmbientProfile::s2xs2(), AmbientProfile::cp2(), AmbientProfile::bcp2()]
        .into_iter()
        .find(|a| a.name == name)
}

fn is_prime_power(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut p = 2;
    while m % p != 0 {
        p += 1;
    }
    let mut x = m;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// Ok if the witness establishes a contradiction on its own.
pub fn replay_verdict(v: &ObstructionVerdict) -> Result<(), String> {
    match &v.witness {
        Witness::Signature(s) => {
            let x = ambient_by_name(&s.ambient).ok_or_else(|| format!("unknown ambient {}", s.ambient))?;
            let sq = x.form.square(&s.class).map_err(|e| e.to_string())?;
            if sq != s.class_square || x.sigma != s.ambient_signature || x.b2 as i64 != s.b2 {
                return Err(format!("ambient data for {} does not match", s.class));
            }
            let (r, m) = (s.r as i64, s.m as i64);
            if !(1..m).contains(&r) || !is_prime_power(s.m) {
                return Err(format!("root {r}/{m} not admissible"));
            }
            let div = s.class.coords.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
            if div != 0 && div % m != 0 {
                return Err(format!("{} is not {m}-divisible", s.class));
            }
            let middle = Rational64::new(2 * r * (m - r) * sq, m * m);
            let lhs = Rational64::from_integer(s.knot_signature + x.sigma) - middle;
            if middle.to_string() != s.middle_term || lhs.to_string() != s.lhs {
                return Err(format!("recomputed lhs {lhs} differs from {}", s.lhs));
            }
            let rhs = x.b2 as i64 + 2 * s.genus as i64;
            if rhs != s.rhs || lhs.abs() <= Rational64::from_integer(rhs) {
                return Err(format!("|{lhs}| <= {rhs}"));
            }
            Ok(())
        }
        Witness::Arf(a) => {
            let x = ambient_by_name(&a.ambient).ok_or_else(|| format!("unknown ambient {}", a.ambient))?;
            if !x.form.is_characteristic(&a.class).map_err(|e| e.to_string())? {
                return Err(format!("{} is not characteristic", a.class));
            }
            let diff = x.sigma - x.form.square(&a.class).map_err(|e| e.to_string())?;
            if diff % 8 != 0 || diff / 8 != a.quotient {
                return Err("Arf quotient mismatch".into());
            }
            if a.quotient.rem_euclid(2) == a.arf as i64 {
                return Err("Arf congruence holds".into());
            }
            Ok(())
        }
        Witness::Linking(l) => {
            let p = l.alpha.coords[0] * l.beta.coords[0] - l.alpha.coords[1] * l.beta.coords[1];
            if p != l.pairing || p == -l.lk {
                return Err(format!("pairing {p} consistent with lk {}", l.lk));
            }
            Ok(())
        }
        Witness::Divisibility { classes, divisor, lk } => {
            if *divisor < 2 || lk.rem_euclid(*divisor) == 0 || classes.iter().any(|c| c.coords.iter().any(|x| x % divisor != 0)) {
                return Err("divisibility witness fails".into());
            }
            Ok(())
        }
        Witness::PairingDivisibility { left, right, divisor, lk } => {
            let bad = left.iter().any(|x| {
                right.iter().any(|y| (x.coords[0] * y.coords[0] - x.coords[1] * y.coords[1]) % divisor != 0)
            });
            if *divisor < 2 || bad || lk.rem_euclid(*divisor) == 0 {
                return Err("pairing divisibility witness fails".into());
            }
            Ok(())
        }
        Witness::GenusWindow { offset, genus_bound, lower_cutoff, upper_cutoff, genus_at_cutoffs, solutions } => {
            let g = |x: i64| ruberman_genus(&HomologyClass::pair(x, x + offset));
            if *upper_cutoff < 0.max(-offset) || *lower_cutoff > 0.min(-offset) {
                return Err("cutoffs do not lie in the monotone range".into());
            }
            if g(*lower_cutoff) <= *genus_bound || g(*upper_cutoff) <= *genus_bound {
                return Err("genus at a cutoff is within the bound".into());
            }
            if (g(*lower_cutoff), g(*upper_cutoff)) != *genus_at_cutoffs {
                return Err("recorded cutoff genera differ".into());
            }
            let inside: Vec<i64> = (lower_cutoff + 1..*upper_cutoff).filter(|&x| g(x) <= *genus_bound).collect();
            if inside != *solutions {
                return Err(format!("window solutions {inside:?} differ from {solutions:?}"));
            }
            Ok(())
        }
        Witness::SignatureBound { sigma_bound, middle_min, rhs } => {
            if middle_min - sigma_bound > *rhs {
                Ok(())
            } else {
                Err("bound does not exceed rhs".into())
            }
        }
        Witness::Axiom { .. } => Ok(()),
        Witness::None { reason } => Err(reason.clone()),
    }
}

/// Re-check a NOT_SLICE certificate: every exclusion and leaf witness, and
/// coverage of the symmetry-reduced case product.
pub fn replay_certificate(cert: &Certificate) -> Result<(), Vec<String>> {
    let mut errs = Vec::new();
    if cert.verdict != Verdict::NotSlice {
        errs.push("certificate does not claim NOT_SLICE".to_string());
    }
    match &cert.assumptions {
        Some(r) if r.all_hold() => {}
        _ => errs.push("assumptions not all satisfied".into()),
    }
    for e in &cert.decomposition {
        if e.verdicts.is_empty() {
            errs.push(format!("exclusion {} has no verdicts", e.label));
        }
        for v in &e.verdicts {
            if let Err(m) = replay_verdict(v) {
                errs.push(format!("exclusion {}: {m}", e.label));
            }
        }
    }
    for node in &cert.cases {
        if node.leaves.is_empty() {
            errs.push(format!("case {} has no leaves", node.label));
        }
        for leaf in &node.leaves {
            if let Err(m) = replay_verdict(&leaf.verdict) {
                errs.push(format!("{} / {}: {m}", node.label, leaf.label));
            }
        }
    }
    match generate_cases(cert.input.lk) {
        Ok(cases) => {
            let cov = coverage(&cases);
            for o in &cov.orbit_covers {
                match &o.covered_by {
                    None => errs.push(format!("orbit {} uncovered", o.representative)),
                    Some(label) => {
                        let in_cases = cert.cases.iter().any(|c| &c.label == label);
                        let in_excl = cert.decomposition.iter().any(|e| &e.label == label);
                        if !in_cases && !in_excl {
                            errs.push(format!("orbit {} needs {label}, absent from certificate", o.representative));
                        }
                    }
                }
            }
        }
        Err(e) => errs.push(e.to_string()),
    }
    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}
