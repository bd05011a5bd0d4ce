use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus::{genus1_family_decomposition, infinite_families, sporadic_classes, Shape};
use crate::homology::{AffineClass, AmbientProfile, HomologyClass, Symmetry};
use crate::obstructions::{arf_obstruction, pair_cp2, ObstructionVerdict, Outcome, Witness};
use crate::symbolic::{Poly, SymClass};

/// A pair (α, β) whose coordinates are polynomials in the case parameters,
/// with the linking constraint α·β + lk = 0 attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineClassPair {
    pub label: String,
    pub cell: String,
    pub alpha: SymClass,
    pub beta: SymClass,
    pub parameters: Vec<String>,
    /// α·β + lk; the case requires this to vanish.
    pub constraint: Poly,
    /// The pair of decomposition shapes this case stands for.
    pub shapes: (Shape, Shape),
}

impl AffineClassPair {
    fn new(label: &str, cell: &str, alpha: SymClass, beta: SymClass, params: &[&str], shapes: (Shape, Shape)) -> Self {
        let constraint = alpha.pairing(&beta).add(&Poly::var("lk"));
        Self {
            label: label.into(),
            cell: cell.into(),
            alpha,
            beta,
            parameters: params.iter().map(|s| s.to_string()).collect(),
            constraint,
            shapes,
        }
    }
}

fn family_alpha() -> SymClass {
    SymClass::new(Poly::var("a"), Poly::linear(1, &[(1, "a")]))
}

fn concrete(c: (i64, i64)) -> SymClass {
    SymClass::concrete(&HomologyClass::pair(c.0, c.1))
}

/// Sporadic β that the genus window and A4d discard, by b₂ − b₁.
pub const REDUCTION_BETAS: [(i64, (i64, i64)); 6] =
    [(4, (-1, 3)), (4, (-3, 1)), (-4, (1, -3)), (-4, (3, -1)), (2, (-3, -1)), (2, (1, 3))];

/// Symmetry-reduced cases: the grey, blue and two green cells, the six
/// discarded sporadic configurations and the two surviving ones.
pub fn generate_cases(lk: i64) -> Result<Vec<AffineClassPair>> {
    let mut failed = Vec::new();
    if lk.rem_euclid(2) == 0 {
        failed.push("A4a");
    }
    if lk.rem_euclid(3) == 0 {
        failed.push("A4b");
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(format!("case generation requires {}", failed.join(", "))));
    }
    let [f1, f2, f3, f4] = infinite_families().map(Shape::Family);
    let a = family_alpha();
    let b = |c: i128, d: i128| Poly::linear(c, &[(d, "b")]);
    let mut out = vec![
        AffineClassPair::new("grey", "(a,a+1) x (b,b+1)", a.clone(), SymClass::new(b(0, 1), b(1, 1)), &["a", "b"], (f1.clone(), f1.clone())),
        AffineClassPair::new("blue", "(a,a+1) x (b+1,b)", a.clone(), SymClass::new(b(1, 1), b(0, 1)), &["a", "b"], (f1.clone(), f2)),
        AffineClassPair::new("green eta=0", "(a,a+1) x (b,-(b+1))", a.clone(), SymClass::new(b(0, 1), b(-1, -1)), &["a", "b"], (f1.clone(), f3)),
        AffineClassPair::new("green eta=1", "(a,a+1) x (b+1,-b)", a.clone(), SymClass::new(b(1, 1), b(0, -1)), &["a", "b"], (f1.clone(), f4)),
    ];
    for (d, beta) in REDUCTION_BETAS {
        let s = Shape::Class(HomologyClass::pair(beta.0, beta.1));
        out.push(AffineClassPair::new(
            &format!("reduction {}", HomologyClass::pair(beta.0, beta.1)),
            &format!("(a,a+1) x {} [b2-b1 = {d}]", HomologyClass::pair(beta.0, beta.1)),
            a.clone(),
            concrete(beta),
            &["a"],
            (f1.clone(), s),
        ));
    }
    out.push(AffineClassPair::new("sporadic (3,1)", "(a,a+1) x (3,1)", a.clone(), concrete((3, 1)), &["a"], (f1.clone(), Shape::Class(HomologyClass::pair(3, 1)))));
    out.push(AffineClassPair::new("sporadic (-1,-3)", "(a,a+1) x (-1,-3)", a, concrete((-1, -3)), &["a"], (f1, Shape::Class(HomologyClass::pair(-1, -3)))));
    Ok(out)
}

/// A decomposition-level exclusion, justified before any case is opened.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub label: String,
    pub citation: String,
    pub shapes: Vec<String>,
    pub verdicts: Vec<ObstructionVerdict>,
}

impl Exclusion {
    pub fn closed(&self) -> bool {
        !self.verdicts.is_empty() && self.verdicts.iter().all(|v| v.outcome == Outcome::RuledOut)
    }
}

fn divisibility_verdict(classes: Vec<HomologyClass>, divisor: i64, lk: i64, citation: &str) -> ObstructionVerdict {
    let ok = classes.iter().all(|c| c.divisible_by(divisor)) && lk.rem_euclid(divisor) != 0;
    ObstructionVerdict {
        outcome: if ok { Outcome::RuledOut } else { Outcome::Consistent },
        rule: "divisibility".into(),
        citation: citation.into(),
        witness: Witness::Divisibility { classes, divisor, lk },
    }
}

/// Exclusions of the diagonal families, (0,±2), (±2,0), (±3,0), (0,±3) and of
/// two sporadic classes at once.
pub fn decomposition_exclusions(lk: i64, arf: u8) -> Result<Vec<Exclusion>> {
    let ambient = AmbientProfile::cp2_bcp2();
    let c = HomologyClass::pair;
    let mut out = Vec::new();
    for (label, rep_even, rep_odd) in [("(a,a)", c(2, 2), c(1, 1)), ("(a,-a)", c(2, -2), c(1, -1))] {
        let mut arf_v = arf_obstruction(arf, &ambient, &rep_odd)?;
        arf_v.citation = "Lemma: aa / Thm: Arf".into();
        out.push(Exclusion {
            label: format!("diagonal {label}"),
            citation: "Lemma: aa".into(),
            shapes: vec![label.into()],
            verdicts: vec![divisibility_verdict(vec![rep_even], 2, lk, "Lemma: aa"), arf_v],
        });
    }
    for (v, d, lemma) in [(2, 2, "aa"), (3, 3, "aa2")] {
        let classes = vec![c(0, v), c(0, -v), c(v, 0), c(-v, 0)];
        out.push(Exclusion {
            label: format!("axis classes of length {v}"),
            citation: format!("Lemma: {lemma}"),
            shapes: classes.iter().map(|x| x.to_string()).collect(),
            verdicts: vec![divisibility_verdict(classes, d, lk, &format!("Lemma: {lemma}"))],
        });
    }
    let sp = sporadic_classes();
    let all_even = sp.iter().all(|x| sp.iter().all(|y| pair_cp2(x, y) % 2 == 0));
    out.push(Exclusion {
        label: "two sporadic classes".into(),
        citation: "Lemma: B1-5".into(),
        shapes: vec!["sporadic x sporadic".into()],
        verdicts: vec![ObstructionVerdict {
            outcome: if all_even && lk.rem_euclid(2) != 0 { Outcome::RuledOut } else { Outcome::Consistent },
            rule: "pairing_parity".into(),
            citation: "Lemma: B1-5".into(),
            witness: Witness::PairingDivisibility { left: sp.clone(), right: sp, divisor: 2, lk },
        }],
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCover {
    pub representative: String,
    pub covered_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub shapes: usize,
    pub orbits: usize,
    pub uncovered: Vec<String>,
    pub orbit_covers: Vec<OrbitCover>,
}

impl Coverage {
    pub fn complete(&self) -> bool {
        self.uncovered.is_empty()
    }
}

fn act_on_shapes(g: Symmetry, p: &(Shape, Shape)) -> (Shape, Shape) {
    let (x, y) = (p.0.transform(g), p.1.transform(g));
    if g.swap {
        (y, x)
    } else {
        (x, y)
    }
}

fn excluded_family_label(s: &Shape) -> Option<&'static str> {
    match s {
        Shape::Family(f) if *f == AffineClass::new([0, 0], [1, 1]) => Some("diagonal (a,a)"),
        Shape::Family(f) if *f == AffineClass::new([0, 0], [1, -1]) => Some("diagonal (a,-a)"),
        _ => None,
    }
}

/// Orbits of the product of decomposition shapes under the symmetry group,
/// each matched to a case or to a decomposition exclusion.
pub fn coverage(cases: &[AffineClassPair]) -> Coverage {
    let decomp = genus1_family_decomposition();
    let shapes = decomp.all_shapes();
    let sporadic: BTreeSet<Shape> = decomp.sporadics.iter().map(|f| f.shape.clone()).collect();
    let excluded: BTreeSet<Shape> = decomp.excluded.iter().map(|e| e.shape.clone()).collect();
    let mut seen: BTreeSet<(Shape, Shape)> = BTreeSet::new();
    let mut covers = Vec::new();
    for x in &shapes {
        for y in &shapes {
            let p = (x.clone(), y.clone());
            if seen.contains(&p) {
                continue;
            }
            let orbit: BTreeSet<(Shape, Shape)> = Symmetry::all().map(|g| act_on_shapes(g, &p)).collect();
            seen.extend(orbit.iter().cloned());
            let rep = orbit.iter().next().expect("nonempty orbit").clone();
            let by_case = cases.iter().find(|c| orbit.contains(&c.shapes)).map(|c| c.label.clone());
            let by_exclusion = || {
                for s in [&rep.0, &rep.1] {
                    if excluded.contains(s) {
                        return Some(match excluded_family_label(s) {
                            Some(l) => l.to_string(),
                            None => match s {
                                Shape::Class(c) if c.coords.iter().any(|v| v.abs() == 3) => "axis classes of length 3".into(),
                                _ => "axis classes of length 2".into(),
                            },
                        });
                    }
                }
                (sporadic.contains(&rep.0) && sporadic.contains(&rep.1)).then(|| "two sporadic classes".to_string())
            };
            covers.push(OrbitCover {
                representative: format!("{} x {}", rep.0, rep.1),
                covered_by: by_case.or_else(by_exclusion),
            });
        }
    }
    let uncovered = covers.iter().filter(|c| c.covered_by.is_none()).map(|c| c.representative.clone()).collect();
    Coverage { shapes: shapes.len(), orbits: covers.len(), uncovered, orbit_covers: covers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_need_odd_non_multiple_of_three() {
        assert!(generate_cases(-29).is_ok());
        assert!(generate_cases(4).is_err());
        let e = generate_cases(-27).unwrap_err().to_string();
        assert!(e.contains("A4b"));
    }

    #[test]
    fn grey_constraint() {
        let cases = generate_cases(-29).unwrap();
        assert_eq!(cases[0].constraint, Poly::linear(-1, &[(-1, "a"), (-1, "b"), (1, "lk")]));
        assert_eq!(cases.len(), 12);
    }

    #[test]
    fn coverage_is_complete() {
        let cases = generate_cases(-29).unwrap();
        let cov = coverage(&cases);
        assert_eq!(cov.shapes, 22);
        assert!(cov.complete(), "{:?}", cov.uncovered);
        for c in &cases {
            assert!(cov.orbit_covers.iter().any(|o| o.covered_by.as_deref() == Some(c.label.as_str())), "{}", c.label);
        }
        // Dropping a case leaves a hole.
        let cov = coverage(&cases[1..]);
        assert_eq!(cov.uncovered.len(), 1);
    }

    #[test]
    fn exclusions_close_under_fig1_data() {
        for e in decomposition_exclusions(-29, 1).unwrap() {
            assert!(e.closed(), "{}", e.label);
        }
        let open: Vec<_> = decomposition_exclusions(-29, 0).unwrap().into_iter().filter(|e| !e.closed()).collect();
        assert_eq!(open.len(), 2);
        assert!(!decomposition_exclusions(-30, 1).unwrap()[2].closed());
    }
}
