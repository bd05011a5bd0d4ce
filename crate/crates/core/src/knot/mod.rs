//! Knot invariants: roots of unity, Levine–Tristram signatures (from Seifert
//! matrices or the closed torus-knot formula), Arf invariants and knot
//! expressions built from sums, mirrors, reverses and 2-cables.

mod expr;
mod record;
mod seifert;
mod torus;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use expr::{eval_arf, eval_signature, KnotExpression};
pub use record::KnotRecord;
pub use seifert::{
    alexander_polynomial, arf_from_seifert, lt_signature_seifert, torus2_seifert, LtSignature,
    SeifertForm, SeifertMatrix,
};
pub use torus::{torus2_arf, torus2_signature, torus2_signature_affine, AffineTorusTerm};

/// ζ = e^{2πi r/m}. The fraction is stored as given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    r: u64,
    m: u64,
}

impl RootOfUnity {
    pub fn new(r: i64, m: i64) -> Result<Self> {
        if m < 2 || r < 1 || r >= m {
            return Err(Error::InvalidRoot { r, m });
        }
        Ok(Self { r: r as u64, m: m as u64 })
    }

    /// ζ_m = e^{2πi/m}.
    pub fn zeta(m: i64) -> Result<Self> {
        Self::new(1, m)
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn reduced(&self) -> Self {
        let g = self.r.gcd(&self.m);
        Self { r: self.r / g, m: self.m / g }
    }

    /// Multiplicative order of ζ.
    pub fn order(&self) -> u64 {
        self.reduced().m
    }

    pub fn conj(&self) -> Self {
        Self { r: self.m - self.r, m: self.m }
    }

    /// ζ^k in reduced form, or `None` when ζ^k = 1.
    pub fn pow(&self, k: u64) -> Option<Self> {
        let red = self.reduced();
        let r = (red.r * k) % red.m;
        (r != 0).then(|| Self { r, m: red.m }.reduced())
    }

    /// x = r/m ∈ (0,1).
    pub fn x(&self) -> BigRational {
        BigRational::new(self.r.into(), self.m.into())
    }

    /// min(x, 1−x) = |x| after mapping x into [−1/2, 1/2].
    pub fn abs_centered(&self) -> BigRational {
        BigRational::new(self.r.min(self.m - self.r).into(), self.m.into())
    }

    pub fn is_minus_one(&self) -> bool {
        2 * self.r == self.m
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.m)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected r/m, got {s:?}"));
        let (r, m) = s.trim().split_once('/').ok_or_else(bad)?;
        let r = r.trim().parse::<i64>().map_err(|_| bad())?;
        let m = m.trim().parse::<i64>().map_err(|_| bad())?;
        Self::new(r, m)
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_validate_and_reduce() {
        assert!(RootOfUnity::new(0, 5).is_err());
        assert!(RootOfUnity::new(5, 5).is_err());
        let w = RootOfUnity::new(2, 4).unwrap();
        assert_eq!(w.r(), 2);
        assert_eq!(w.reduced(), RootOfUnity::new(1, 2).unwrap());
        assert!(w.is_minus_one());
        assert_eq!(RootOfUnity::new(1, 5).unwrap().conj(), RootOfUnity::new(4, 5).unwrap());
    }

    #[test]
    fn powers() {
        let z5 = RootOfUnity::zeta(5).unwrap();
        assert_eq!(z5.pow(2), Some(RootOfUnity::new(2, 5).unwrap()));
        assert_eq!(z5.pow(5), None);
        assert_eq!(RootOfUnity::new(1, 2).unwrap().pow(2), None);
        assert_eq!(RootOfUnity::new(3, 8).unwrap().pow(2), Some(RootOfUnity::new(3, 4).unwrap()));
    }

    #[test]
    fn string_round_trip() {
        let w: RootOfUnity = "3/7".parse().unwrap();
        assert_eq!(w, RootOfUnity::new(3, 7).unwrap());
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"3/7\"");
        assert!("3-7".parse::<RootOfUnity>().is_err());
    }
}
