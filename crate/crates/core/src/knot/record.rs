use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::seifert::{arf_from_seifert, SeifertForm, SeifertMatrix};
use super::RootOfUnity;
use crate::error::{Error, Result};

/// Invariant data of a knot: slice genus, Arf invariant, stored
/// Levine–Tristram samples and optionally a Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub g4: u32,
    pub arf: u8,
    /// Keyed by the reduced root of unity.
    pub signature_samples: BTreeMap<RootOfUnity, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<SeifertMatrix>,
}

impl KnotRecord {
    /// Validates |σ| ≤ 2·g4 and, if a Seifert matrix is present, agreement of
    /// every sample and of the Arf invariant with the matrix.
    pub fn new(
        name: &str,
        g4: u32,
        arf: u8,
        samples: impl IntoIterator<Item = (RootOfUnity, i64)>,
        seifert: Option<SeifertMatrix>,
    ) -> Result<Self> {
        if arf > 1 {
            return Err(Error::Precondition(format!("{name}: Arf must be 0 or 1, got {arf}")));
        }
        let mut map = BTreeMap::new();
        for (w, s) in samples {
            if s.abs() > 2 * g4 as i64 {
                return Err(Error::Precondition(format!(
                    "{name}: |sigma({w})| = {} exceeds 2*g4 = {}",
                    s.abs(),
                    2 * g4
                )));
            }
            if let Some(prev) = map.insert(w.reduced(), s) {
                if prev != s {
                    return Err(Error::Precondition(format!("{name}: conflicting samples at {w}")));
                }
            }
        }
        let rec = Self { name: name.to_string(), g4, arf, signature_samples: map, seifert };
        rec.cross_check()?;
        Ok(rec)
    }

    /// Record computed entirely from a Seifert matrix at the given roots.
    pub fn from_seifert(name: &str, g4: u32, v: SeifertMatrix, roots: &[RootOfUnity]) -> Result<Self> {
        let form = SeifertForm::new(&v);
        let samples = roots
            .iter()
            .map(|&w| Ok((w, form.signature(w)?.value)))
            .collect::<Result<Vec<_>>>()?;
        let arf = arf_from_seifert(&v)?;
        Self::new(name, g4, arf, samples, Some(v))
    }

    pub fn unknot() -> Self {
        Self {
            name: "unknot".into(),
            g4: 0,
            arf: 0,
            signature_samples: BTreeMap::new(),
            seifert: Some(SeifertMatrix::unknot()),
        }
    }

    fn cross_check(&self) -> Result<()> {
        let Some(v) = &self.seifert else { return Ok(()) };
        let form = SeifertForm::new(v);
        for (&w, &s) in &self.signature_samples {
            let c = form.signature(w)?.value;
            if c != s {
                return Err(Error::Precondition(format!(
                    "{}: stored sigma({w}) = {s} but the Seifert matrix gives {c}",
                    self.name
                )));
            }
        }
        let a = arf_from_seifert(v)?;
        if a != self.arf {
            return Err(Error::Precondition(format!(
                "{}: stored Arf {} but the Seifert matrix gives {a}",
                self.name, self.arf
            )));
        }
        Ok(())
    }

    /// Stored sample at ω or its conjugate, if any.
    pub fn sample(&self, w: RootOfUnity) -> Option<i64> {
        let red = w.reduced();
        self.signature_samples
            .get(&red)
            .or_else(|| self.signature_samples.get(&red.conj()))
            .copied()
    }

    /// Stored sample, or the value computed from the Seifert matrix.
    pub fn signature(&self, w: RootOfUnity) -> Result<i64> {
        if let Some(s) = self.sample(w) {
            return Ok(s);
        }
        match &self.seifert {
            Some(v) => Ok(SeifertForm::new(v).signature(w)?.value),
            None => Err(Error::MissingSample { knot: self.name.clone(), r: w.r() as i64, m: w.m() as i64 }),
        }
    }

    /// Mirror image: samples negate, Arf and genus are unchanged.
    pub fn mirror(&self) -> Self {
        Self {
            name: format!("m({})", self.name),
            g4: self.g4,
            arf: self.arf,
            signature_samples: self.signature_samples.iter().map(|(&w, &s)| (w, -s)).collect(),
            seifert: self.seifert.as_ref().map(SeifertMatrix::mirror),
        }
    }
}
