use std::fmt;

use serde::{Deserialize, Serialize};

use super::record::KnotRecord;
use super::torus::{torus2_arf, torus2_signature};
use super::RootOfUnity;
use crate::error::{Error, Result};

/// Knots built from records by connected sum, mirror, reverse and 2-cables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnotExpression {
    Atom(KnotRecord),
    Sum(Vec<KnotExpression>),
    Mirror(Box<KnotExpression>),
    Reverse(Box<KnotExpression>),
    /// (2,q)-cable.
    Cable2(Box<KnotExpression>, i64),
    Torus2(i64),
}

impl KnotExpression {
    pub fn atom(k: KnotRecord) -> Self {
        Self::Atom(k)
    }

    pub fn sum(parts: Vec<KnotExpression>) -> Self {
        Self::Sum(parts)
    }

    pub fn mirror(e: KnotExpression) -> Self {
        Self::Mirror(Box::new(e))
    }

    pub fn reverse(e: KnotExpression) -> Self {
        Self::Reverse(Box::new(e))
    }

    pub fn cable2(e: KnotExpression, q: i64) -> Result<Self> {
        if q % 2 == 0 {
            return Err(Error::EvenTorusParameter(q));
        }
        Ok(Self::Cable2(Box::new(e), q))
    }

    pub fn torus2(q: i64) -> Result<Self> {
        if q % 2 == 0 {
            return Err(Error::EvenTorusParameter(q));
        }
        Ok(Self::Torus2(q))
    }
}

impl fmt::Display for KnotExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Atom(k) => write!(f, "{}", k.name),
            Self::Sum(parts) if parts.is_empty() => write!(f, "unknot"),
            Self::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", s.join(" # "))
            }
            Self::Mirror(e) => write!(f, "m{e}"),
            Self::Reverse(e) => write!(f, "{e}^r"),
            Self::Cable2(e, q) => write!(f, "{e}_(2,{q})"),
            Self::Torus2(q) => write!(f, "T(2,{q})"),
        }
    }
}

/// Levine–Tristram signature with satellite semantics: a (2,q)-cable of C
/// contributes σ_C(ω²) + σ_{T(2,q)}(ω).
pub fn eval_signature(e: &KnotExpression, w: RootOfUnity) -> Result<i64> {
    match e {
        KnotExpression::Atom(k) => k.signature(w),
        KnotExpression::Sum(parts) => parts.iter().map(|p| eval_signature(p, w)).sum(),
        KnotExpression::Mirror(inner) => Ok(-eval_signature(inner, w)?),
        KnotExpression::Reverse(inner) => eval_signature(inner, w),
        KnotExpression::Torus2(q) => torus2_signature(*q, w),
        KnotExpression::Cable2(inner, q) => {
            let companion = match w.pow(2) {
                Some(w2) => eval_signature(inner, w2)?,
                None => 0,
            };
            Ok(companion + torus2_signature(*q, w)?)
        }
    }
}

pub fn eval_arf(e: &KnotExpression) -> Result<u8> {
    match e {
        KnotExpression::Atom(k) => Ok(k.arf),
        KnotExpression::Sum(parts) => parts.iter().try_fold(0u8, |acc, p| Ok(acc ^ eval_arf(p)?)),
        KnotExpression::Mirror(inner) | KnotExpression::Reverse(inner) => eval_arf(inner),
        KnotExpression::Torus2(q) => torus2_arf(*q),
        KnotExpression::Cable2(..) => Err(Error::UnsupportedArf(e.to_string())),
    }
}
