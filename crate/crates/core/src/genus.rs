//! Minimal genus function of CP²#CP²-bar and the decomposition of the classes
//! of genus at most one into affine families, sporadic classes and shapes that
//! the linking-number and Arf assumptions exclude.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homology::{AffineClass, HomologyClass, Symmetry};

/// Minimal genus of a smoothly embedded surface representing (a₁, a₂).
pub fn ruberman_genus(c: &HomologyClass) -> u64 {
    assert_eq!(c.coords.len(), 2, "genus function is defined on rank-2 classes");
    let (x, y) = (c.coords[0].unsigned_abs(), c.coords[1].unsigned_abs());
    let (big, small) = if x >= y { (x, y) } else { (y, x) };
    if big == small {
        return 0;
    }
    // (|a|−1)(|a|−2)/2 − |b|(|b|−1)/2 with |a| > |b|
    let tri = |n: u64| n * n.saturating_sub(1) / 2;
    tri(big - 1) - tri(small)
}

/// Every class in the box |aᵢ| ≤ bound of genus at most g, lexicographically.
pub fn classes_of_genus_at_most(g: u64, bound: i64) -> Vec<HomologyClass> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let c = HomologyClass::pair(a, b);
            if ruberman_genus(&c) <= g {
                out.push(c);
            }
        }
    }
    out
}

/// Closed-form description of the genus-≤1 classes: ||a₁|−|a₂|| ≤ 1, or
/// {|a₁|,|a₂|} is one of {0,2}, {0,3}, {1,3}.
pub fn is_genus_at_most_one_closed_form(c: &HomologyClass) -> bool {
    let (x, y) = (c.coords[0].abs(), c.coords[1].abs());
    let (lo, hi) = (x.min(y), x.max(y));
    hi - lo <= 1 || matches!((lo, hi), (0, 2) | (0, 3) | (1, 3))
}

/// A shape in the decomposition: a one-parameter family or a single class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Family(AffineClass),
    Class(HomologyClass),
}

impl Shape {
    pub fn transform(&self, g: Symmetry) -> Self {
        match self {
            Shape::Family(f) => Shape::Family(f.transform(g)),
            Shape::Class(c) => Shape::Class(g.act_on_class(c)),
        }
    }

    pub fn contains(&self, c: &HomologyClass) -> bool {
        match self {
            Shape::Family(f) => f.contains(c),
            Shape::Class(k) => k == c,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Family(a) => write!(f, "{a}"),
            Shape::Class(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    InfiniteFamily,
    Sporadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBoundedFamily {
    pub kind: FamilyKind,
    pub shape: Shape,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedShape {
    pub shape: Shape,
    pub lemma: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genus1Decomposition {
    pub families: Vec<GenusBoundedFamily>,
    pub sporadics: Vec<GenusBoundedFamily>,
    pub excluded: Vec<ExcludedShape>,
}

/// Which part of the decomposition a class falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    Family,
    Sporadic,
    Excluded,
}

/// The four families (t,t+1), (t+1,t), (t,−(t+1)), (t+1,−t) in that order.
pub fn infinite_families() -> [AffineClass; 4] {
    [
        AffineClass::new([0, 1], [1, 1]),
        AffineClass::new([1, 0], [1, 1]),
        AffineClass::new([0, -1], [1, -1]),
        AffineClass::new([1, 0], [1, -1]),
    ]
}

/// (±1,±3) and (±3,±1), lexicographically.
pub fn sporadic_classes() -> Vec<HomologyClass> {
    let mut v = Vec::new();
    for (x, y) in [(1, 3), (3, 1)] {
        for sx in [-1, 1] {
            for sy in [-1, 1] {
                v.push(HomologyClass::pair(sx * x, sy * y));
            }
        }
    }
    v.sort();
    v
}

pub fn genus1_family_decomposition() -> Genus1Decomposition {
    let labels = ["(a,a+1)", "(a+1,a)", "(a,-(a+1))", "(a+1,-a)"];
    let families = infinite_families()
        .into_iter()
        .zip(labels)
        .map(|(f, l)| GenusBoundedFamily { kind: FamilyKind::InfiniteFamily, shape: Shape::Family(f), label: l.into() })
        .collect();
    let sporadics = sporadic_classes()
        .into_iter()
        .map(|c| GenusBoundedFamily { kind: FamilyKind::Sporadic, label: c.to_string(), shape: Shape::Class(c) })
        .collect();
    let mut excluded = vec![
        ExcludedShape { shape: Shape::Family(AffineClass::new([0, 0], [1, 1])), lemma: "aa".into() },
        ExcludedShape { shape: Shape::Family(AffineClass::new([0, 0], [1, -1])), lemma: "aa".into() },
    ];
    for (v, lemma) in [(2, "aa"), (3, "aa2")] {
        for c in [(0, v), (0, -v), (v, 0), (-v, 0)] {
            excluded.push(ExcludedShape { shape: Shape::Class(HomologyClass::pair(c.0, c.1)), lemma: lemma.into() });
        }
    }
    Genus1Decomposition { families, sporadics, excluded }
}

impl Genus1Decomposition {
    /// Every category the class belongs to (a class may sit on two families;
    /// categories are reported once each).
    pub fn categories_of(&self, c: &HomologyClass) -> Vec<Category> {
        let mut out = Vec::new();
        if self.families.iter().any(|f| f.shape.contains(c)) {
            out.push(Category::Family);
        }
        if self.sporadics.iter().any(|f| f.shape.contains(c)) {
            out.push(Category::Sporadic);
        }
        if self.excluded.iter().any(|e| e.shape.contains(c)) {
            out.push(Category::Excluded);
        }
        out
    }

    pub fn all_shapes(&self) -> Vec<Shape> {
        self.families
            .iter()
            .chain(&self.sporadics)
            .map(|f| f.shape.clone())
            .chain(self.excluded.iter().map(|e| e.shape.clone()))
            .collect()
    }
}

/// Classes (x, x+d) of genus ≤ g. Outside the returned window both coordinates
/// share a sign and the genus grows with |x|, so the window is complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusWindow {
    pub offset: i64,
    pub genus_bound: u64,
    /// Smallest x ≥ max(0,−d) and largest x ≤ min(0,−d) with genus > bound.
    pub upper_cutoff: i64,
    pub lower_cutoff: i64,
    pub genus_at_cutoffs: (u64, u64),
    pub solutions: Vec<i64>,
}

/// Genus-bounded window for the diagonal line (x, x+d), |d| ≥ 2.
pub fn genus_window(d: i64, g: u64) -> Option<GenusWindow> {
    if d.abs() < 2 {
        return None;
    }
    let genus = |x: i64| ruberman_genus(&HomologyClass::pair(x, x + d));
    let mut hi = 0.max(-d);
    while genus(hi) <= g {
        hi += 1;
    }
    let mut lo = 0.min(-d);
    while genus(lo) <= g {
        lo -= 1;
    }
    let solutions = (lo + 1..hi).filter(|&x| genus(x) <= g).collect();
    Some(GenusWindow {
        offset: d,
        genus_bound: g,
        upper_cutoff: hi,
        lower_cutoff: lo,
        genus_at_cutoffs: (genus(lo), genus(hi)),
        solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: i64) -> HomologyClass {
        HomologyClass::pair(a, b)
    }

    #[test]
    fn genus_examples() {
        assert_eq!(ruberman_genus(&c(1, 3)), 1);
        assert_eq!(ruberman_genus(&c(5, 0)), 6);
        assert_eq!(ruberman_genus(&c(3, 0)), 1);
        assert_eq!(ruberman_genus(&c(-7, 7)), 0);
        assert_eq!(ruberman_genus(&c(0, 0)), 0);
        assert_eq!(ruberman_genus(&c(2, 7)), ruberman_genus(&c(7, 2)));
    }

    #[test]
    fn closed_form_matches_on_small_box() {
        for a in -20..=20 {
            for b in -20..=20 {
                assert_eq!(ruberman_genus(&c(a, b)) <= 1, is_genus_at_most_one_closed_form(&c(a, b)));
            }
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(classes_of_genus_at_most(1, 0), vec![c(0, 0)]);
        let g0 = classes_of_genus_at_most(0, 3);
        assert!(g0.iter().all(|x| (x.coords[0].abs() - x.coords[1].abs()).abs() <= 1 || x.coords.iter().any(|v| v.abs() == 2)));
        assert!(g0.contains(&c(2, 0)));
        assert!(!g0.contains(&c(3, 0)));
    }

    #[test]
    fn decomposition_contents() {
        let d = genus1_family_decomposition();
        assert_eq!(d.families.len(), 4);
        assert_eq!(d.sporadics.len(), 8);
        assert!(d.families.iter().any(|f| f.shape == Shape::Family(AffineClass::new([0, 1], [1, 1]))));
        assert!(d.excluded.iter().any(|e| e.lemma == "aa" && e.shape == Shape::Family(AffineClass::new([0, 0], [1, 1]))));
        assert!(d.excluded.iter().any(|e| e.lemma == "aa2" && e.shape == Shape::Class(c(0, 3))));
    }

    #[test]
    fn overlaps_are_family_internal() {
        let d = genus1_family_decomposition();
        for x in [c(1, 0), c(0, 1), c(-1, 0), c(0, -1)] {
            assert_eq!(d.categories_of(&x), vec![Category::Family]);
            assert_eq!(d.families.iter().filter(|f| f.shape.contains(&x)).count(), 2);
        }
    }

    #[test]
    fn windows_reproduce_reduction_ranges() {
        assert_eq!(genus_window(5, 2).unwrap().solutions, vec![-3, -2]);
        assert_eq!(genus_window(-3, 2).unwrap().solutions, vec![0, 1, 2, 3]);
        assert_eq!(genus_window(3, 2).unwrap().solutions, vec![-3, -2, -1, 0]);
        assert!(genus_window(-1, 2).is_none());
    }
}
