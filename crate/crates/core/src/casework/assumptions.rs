use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{KnotRecord, RootOfUnity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Declared,
    Undeclared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssumptionItem {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Facts about the link that cannot be read off a knot record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Declared {
    /// The link has the twist-box diagram with tangles closing to A and B.
    pub a1: bool,
    /// An isotopy swaps A and B.
    pub a3: bool,
}

impl Default for Declared {
    fn default() -> Self {
        Self { a1: true, a3: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub items: Vec<AssumptionItem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<i64>,
}

pub const A4D_EXCLUDED: [i64; 10] = [-11, -7, -5, -3, -1, 1, 3, 5, 7, 11];

pub(crate) fn sample_roots() -> [RootOfUnity; 4] {
    [(1, 2), (1, 3), (1, 5), (2, 5)].map(|(r, m)| RootOfUnity::new(r, m).expect("valid root"))
}

impl AssumptionReport {
    pub fn get(&self, id: &str) -> Option<&AssumptionItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn holds(&self, id: &str) -> bool {
        matches!(self.get(id).map(|i| i.status), Some(Status::Pass | Status::Declared))
    }

    pub fn failures(&self) -> Vec<String> {
        self.items
            .iter()
            .filter(|i| !matches!(i.status, Status::Pass | Status::Declared))
            .map(|i| i.id.clone())
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.failures().is_empty()
    }

    /// Error naming every listed assumption that does not hold.
    pub fn require(&self, ids: &[&str], what: &str) -> Result<()> {
        let missing: Vec<&str> = ids.iter().copied().filter(|id| !self.holds(id)).collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{what} requires {}", missing.join(", "))))
        }
    }
}

fn item(id: &str, ok: bool, detail: String) -> AssumptionItem {
    AssumptionItem { id: id.into(), status: if ok { Status::Pass } else { Status::Fail }, detail }
}

/// Itemized A1–A8 for the symmetric link A = B = K with the given linking number.
pub fn check_assumptions(k: &KnotRecord, lk: i64, declared: Declared) -> Result<AssumptionReport> {
    let [w2, w3, w5, w25] = sample_roots();
    let s2 = k.signature(w2)?;
    let s3 = k.signature(w3)?;
    let s5 = k.signature(w5)?;
    let s25 = k.signature(w25)?;

    let declared_item = |id: &str, flag: bool, what: &str| AssumptionItem {
        id: id.into(),
        status: if flag { Status::Declared } else { Status::Undeclared },
        detail: what.into(),
    };
    let in_family = (lk - 1).rem_euclid(30) == 0 && lk != 1;
    let ell = ((lk - 1).rem_euclid(30) == 0).then(|| (lk - 1) / 30);
    let items = vec![
        declared_item("A1", declared.a1, "twist-box diagram"),
        item("A2", k.g4 == 1, format!("g4({}) = {}", k.name, k.g4)),
        declared_item("A3", declared.a3, "components exchangeable"),
        item(
            "A4",
            in_family,
            match ell {
                Some(l) => format!("lk = {lk} = 30*({l})+1"),
                None => format!("lk = {lk} is not 1 mod 30"),
            },
        ),
        item("A4a", lk.rem_euclid(2) != 0, format!("lk mod 2 = {}", lk.rem_euclid(2))),
        item("A4b", lk.rem_euclid(3) != 0, format!("lk mod 3 = {}", lk.rem_euclid(3))),
        item("A4c", lk.abs() >= 4, format!("|lk| = {}", lk.abs())),
        item("A4d", !A4D_EXCLUDED.contains(&lk), format!("lk = {lk}")),
        item("A4e", lk.rem_euclid(3) == 1, format!("lk mod 3 = {}", lk.rem_euclid(3))),
        item("A4f", lk.rem_euclid(5) == 1, format!("lk mod 5 = {}", lk.rem_euclid(5))),
        item("A5", k.arf == 1, format!("Arf = {}", k.arf)),
        item("A6", s2 != 0, format!("sigma(1/2) = {s2}")),
        item("A7", s3 != 2, format!("sigma(1/3) = {s3}")),
        item("A8", s5 + s25 >= 2, format!("sigma(1/5) + sigma(2/5) = {}", s5 + s25)),
    ];
    let report = AssumptionReport { items, ell };
    if report.holds("A4") {
        for sub in ["A4a", "A4b", "A4c", "A4d", "A4e", "A4f"] {
            if !report.holds(sub) {
                return Err(Error::Internal(format!("A4 holds for lk = {lk} but {sub} fails")));
            }
        }
    }
    Ok(report)
}
