//! Framings with det Q = −1 for the surgery construction, and the Rokhlin
//! classification for the lk = 30ℓ+1 family with framings (lk²−1, 1).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rokhlin {
    Vanishes,
    Nonvanishing,
    OutOfFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingCandidate {
    pub f_a: i64,
    pub f_b: i64,
    pub lk: i64,
    pub det_q: i64,
    pub parity_ok: bool,
    /// Either framing negative.
    pub negative: bool,
    /// Only known for the framing pair (lk²−1, 1) and its swap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rokhlin: Option<Rokhlin>,
}

impl FramingCandidate {
    fn new(f_a: i64, f_b: i64, lk: i64) -> Self {
        let n = lk * lk - 1;
        let rokhlin = ((f_a, f_b) == (n, 1) || (f_a, f_b) == (1, n)).then(|| rokhlin_vanishes(lk));
        Self {
            f_a,
            f_b,
            lk,
            det_q: f_a * f_b - lk * lk,
            parity_ok: f_a % 2 != 0 || f_b % 2 != 0,
            negative: f_a < 0 || f_b < 0,
            rokhlin,
        }
    }
}

pub fn rokhlin_vanishes(lk: i64) -> Rokhlin {
    if (lk - 1).rem_euclid(30) != 0 {
        return Rokhlin::OutOfFamily;
    }
    match ((lk - 1) / 30).rem_euclid(4) {
        0 | 1 => Rokhlin::Nonvanishing,
        _ => Rokhlin::Vanishes,
    }
}

/// All (f_A, f_B) with |f| ≤ bound, one of them odd, and f_A·f_B = lk² − 1.
/// With `allow_indefinite`, every pair with det Q < 0 is returned instead.
pub fn framing_search(lk: i64, bound: i64, allow_indefinite: bool) -> Result<Vec<FramingCandidate>> {
    if bound < 1 {
        return Err(Error::Precondition(format!("bound must be positive, got {bound}")));
    }
    let n = lk
        .checked_mul(lk)
        .ok_or_else(|| Error::Precondition(format!("lk = {lk} too large")))?
        - 1;
    let mut out = Vec::new();
    if allow_indefinite {
        for f_a in -bound..=bound {
            for f_b in -bound..=bound {
                let c = FramingCandidate::new(f_a, f_b, lk);
                if c.parity_ok && c.det_q < 0 {
                    out.push(c);
                }
            }
        }
    } else if n == 0 {
        for f in (-bound..=bound).filter(|f| f % 2 != 0) {
            out.push(FramingCandidate::new(0, f, lk));
            out.push(FramingCandidate::new(f, 0, lk));
        }
    } else {
        for f_a in (1..=bound.min(n.abs())).filter(|d| n % d == 0) {
            for s in [1, -1] {
                let c = FramingCandidate::new(s * f_a, n / (s * f_a), lk);
                if c.f_b.abs() <= bound && c.parity_ok {
                    out.push(c);
                }
            }
        }
    }
    out.sort_by_key(|c| (c.f_a, c.f_b));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub m: i64,
    pub twist_count: i64,
    pub lk: i64,
    pub ell: i64,
    pub f_a: i64,
    pub f_b: i64,
    pub det_q: i64,
    pub rokhlin: Rokhlin,
}

pub fn build_family(m: i64) -> Result<FamilyMember> {
    let twist_count = 30 * (4 * m + 1) - 1;
    let lk = -twist_count;
    let ell = (lk - 1) / 30;
    let f_a = lk * lk - 1;
    let rokhlin = rokhlin_vanishes(lk);
    if ell != -(4 * m + 1) || rokhlin != Rokhlin::Vanishes {
        return Err(Error::Internal(format!("family member m={m} has ell={ell}, rokhlin {rokhlin:?}")));
    }
    Ok(FamilyMember { m, twist_count, lk, ell, f_a, f_b: 1, det_q: f_a - lk * lk, rokhlin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rokhlin_table() {
        assert_eq!(rokhlin_vanishes(-29), Rokhlin::Vanishes);
        assert_eq!(rokhlin_vanishes(31), Rokhlin::Nonvanishing);
        assert_eq!(rokhlin_vanishes(1), Rokhlin::Nonvanishing);
        assert_eq!(rokhlin_vanishes(61), Rokhlin::Vanishes);
        assert_eq!(rokhlin_vanishes(2), Rokhlin::OutOfFamily);
    }

    #[test]
    fn framings_for_fig1() {
        let c = framing_search(-29, 900, false).unwrap();
        let pos: Vec<(i64, i64)> = c.iter().filter(|c| !c.negative).map(|c| (c.f_a, c.f_b)).collect();
        for p in [(24, 35), (40, 21), (120, 7), (840, 1), (1, 840)] {
            assert!(pos.contains(&p), "{p:?}");
        }
        assert!(!pos.contains(&(30, 28)));
        assert!(c.iter().all(|c| c.det_q == -1 && c.parity_ok));
        let r: Vec<_> = c.iter().filter_map(|c| c.rokhlin).collect();
        assert_eq!(r, vec![Rokhlin::Vanishes, Rokhlin::Vanishes]);
    }

    #[test]
    fn unit_and_degenerate_cases() {
        let c = framing_search(0, 5, false).unwrap();
        let p: Vec<(i64, i64)> = c.iter().map(|c| (c.f_a, c.f_b)).collect();
        assert_eq!(p, vec![(-1, 1), (1, -1)]);
        let c = framing_search(1, 3, false).unwrap();
        assert!(c.iter().all(|c| c.f_a * c.f_b == 0 && c.parity_ok));
        assert_eq!(c.len(), 8);
        assert!(framing_search(3, 0, false).is_err());
    }

    #[test]
    fn indefinite_flag() {
        let c = framing_search(2, 3, true).unwrap();
        assert!(c.iter().all(|c| c.det_q < 0 && c.parity_ok));
        assert!(c.iter().any(|c| (c.f_a, c.f_b) == (1, 3)));
    }

    #[test]
    fn family_members() {
        let f = build_family(0).unwrap();
        assert_eq!((f.twist_count, f.lk, f.f_a, f.f_b, f.det_q), (29, -29, 840, 1, -1));
        assert_eq!(build_family(1).unwrap().f_a, 22200);
        for m in -50..=50 {
            let f = build_family(m).unwrap();
            assert_eq!(f.ell.rem_euclid(4), 3);
            assert_eq!(f.det_q, -1);
        }
    }
}
