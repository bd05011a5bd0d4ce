//! Intersection forms, homology classes and the symmetry group of
//! CP²#CP²-bar acting on pairs of disc classes.
//!
//! The fixed basis for H₂(CP²#CP²-bar) is (CP¹ ⊂ CP², CP¹ ⊂ CP²-bar), so the
//! form is diag(+1, −1) and a class (a₁, a₂) has square a₁² − a₂².

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::{integer_determinant, symmetric_inertia};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A unimodular symmetric integer bilinear form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionForm {
    matrix: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidForm("rank must be positive".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidForm(format!("row {i} has length {}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if matrix[j][i] != v {
                    return Err(Error::InvalidForm(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        let det = integer_determinant(&matrix);
        if det != 1.into() && det != (-1).into() {
            return Err(Error::InvalidForm(format!("determinant {det} is not ±1")));
        }
        Ok(Self { matrix })
    }

    /// diag(+1, −1): the form of CP²#CP²-bar in the standard basis.
    pub fn cp2_bcp2() -> Self {
        Self { matrix: vec![vec![1, 0], vec![0, -1]] }
    }

    /// The hyperbolic form [[0,1],[1,0]] of S²×S².
    pub fn hyperbolic() -> Self {
        Self { matrix: vec![vec![0, 1], vec![1, 0]] }
    }

    pub fn cp2() -> Self {
        Self { matrix: vec![vec![1]] }
    }

    pub fn bcp2() -> Self {
        Self { matrix: vec![vec![-1]] }
    }

    /// The positive definite E8 form (Cartan matrix of E8).
    pub fn e8() -> Self {
        let mut m = vec![vec![0i64; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        for (a, b) in edges {
            m[a][b] = -1;
            m[b][a] = -1;
        }
        Self { matrix: m }
    }

    pub fn negated(&self) -> Self {
        Self {
            matrix: self.matrix.iter().map(|r| r.iter().map(|v| -v).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, k) = (self.rank(), other.rank());
        let mut m = vec![vec![0i64; n + k]; n + k];
        for i in 0..n {
            m[i][..n].copy_from_slice(&self.matrix[i]);
        }
        for i in 0..k {
            m[n + i][n..].copy_from_slice(&other.matrix[i]);
        }
        Self { matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        if self.matrix.iter().enumerate().all(|(i, r)| r[i] % 2 == 0) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Signature of the form, computed exactly.
    pub fn signature(&self) -> i64 {
        let (pos, neg, _) = symmetric_inertia(&self.matrix);
        pos as i64 - neg as i64
    }

    fn check(&self, x: &HomologyClass) -> Result<()> {
        if x.coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { rank: self.rank(), len: x.coords.len() });
        }
        Ok(())
    }

    /// xᵀ·Q·y.
    pub fn pairing(&self, x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = 0i64;
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                acc += x.coords[i] * q * y.coords[j];
            }
        }
        Ok(acc)
    }

    pub fn square(&self, x: &HomologyClass) -> Result<i64> {
        self.pairing(x, x)
    }

    /// x is characteristic iff x·y ≡ y·y (mod 2) for every y; by bilinearity
    /// it suffices to test the basis vectors.
    pub fn is_characteristic(&self, x: &HomologyClass) -> Result<bool> {
        self.check(x)?;
        for i in 0..self.rank() {
            let e = HomologyClass::basis(self.rank(), i);
            let lhs = self.pairing(x, &e)?;
            let rhs = self.matrix[i][i];
            if (lhs - rhs).rem_euclid(2) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An element of H₂, given by coordinates in the form's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyClass {
    pub coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn pair(a1: i64, a2: i64) -> Self {
        Self { coords: vec![a1, a2] }
    }

    pub fn zero(rank: usize) -> Self {
        Self { coords: vec![0; rank] }
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// gcd of the coordinates; 0 for the zero class.
    pub fn divisibility(&self) -> i64 {
        self.coords.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    /// Whether m divides the class (every m divides the zero class).
    pub fn divisible_by(&self, m: i64) -> bool {
        m != 0 && self.coords.iter().all(|c| c % m == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    /// Residues mod 2 of a rank-2 class.
    pub fn mod2(&self) -> (u8, u8) {
        (self.coords[0].rem_euclid(2) as u8, self.coords[1].rem_euclid(2) as u8)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The ambient closed 4-manifold, as far as the obstructions need it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientProfile {
    pub name: String,
    pub sigma: i64,
    pub b2: u32,
    pub b2_minus: u32,
    pub parity: Parity,
    pub ks: u8,
    pub form: IntersectionForm,
}

impl AmbientProfile {
    pub fn from_form(name: &str, form: IntersectionForm, ks: u8) -> Result<Self> {
        if ks > 1 {
            return Err(Error::InvalidAmbient(format!("ks must be 0 or 1, got {ks}")));
        }
        let sigma = form.signature();
        let b2 = form.rank() as i64;
        if (b2 - sigma) % 2 != 0 || b2 - sigma < 0 {
            return Err(Error::InvalidAmbient(format!("b2={b2}, sigma={sigma} inconsistent")));
        }
        Ok(Self {
            name: name.to_string(),
            sigma,
            b2: b2 as u32,
            b2_minus: ((b2 - sigma) / 2) as u32,
            parity: form.parity(),
            ks,
            form,
        })
    }

    pub fn cp2_bcp2() -> Self {
        Self::from_form("CP2#-CP2", IntersectionForm::cp2_bcp2(), 0).expect("stock form")
    }

    pub fn s2xs2() -> Self {
        Self::from_form("S2xS2", IntersectionForm::hyperbolic(), 0).expect("stock form")
    }

    pub fn cp2() -> Self {
        Self::from_form("CP2", IntersectionForm::cp2(), 0).expect("stock form")
    }

    pub fn bcp2() -> Self {
        Self::from_form("-CP2", IntersectionForm::bcp2(), 0).expect("stock form")
    }
}

/// One element of the order-8 group generated by S1 (negate a₁), S2 (negate
/// a₂), both acting on the two classes at once, and S3 (swap the classes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symmetry {
    pub flip_first: bool,
    pub flip_second: bool,
    pub swap: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { flip_first: false, flip_second: false, swap: false };
    pub const S1: Symmetry = Symmetry { flip_first: true, flip_second: false, swap: false };
    pub const S2: Symmetry = Symmetry { flip_first: false, flip_second: true, swap: false };
    pub const S3: Symmetry = Symmetry { flip_first: false, flip_second: false, swap: true };

    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|b| Symmetry { flip_first: b & 1 != 0, flip_second: b & 2 != 0, swap: b & 4 != 0 })
    }

    /// Group law; the generators commute so the group is (ℤ/2)³.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        Symmetry {
            flip_first: self.flip_first ^ other.flip_first,
            flip_second: self.flip_second ^ other.flip_second,
            swap: self.swap ^ other.swap,
        }
    }

    pub fn act_on_class(&self, c: &HomologyClass) -> HomologyClass {
        let mut coords = c.coords.clone();
        if self.flip_first {
            coords[0] = -coords[0];
        }
        if self.flip_second {
            coords[1] = -coords[1];
        }
        HomologyClass { coords }
    }

    pub fn act(&self, pair: &(HomologyClass, HomologyClass)) -> (HomologyClass, HomologyClass) {
        let a = self.act_on_class(&pair.0);
        let b = self.act_on_class(&pair.1);
        if self.swap {
            (b, a)
        } else {
            (a, b)
        }
    }

    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.flip_first {
            parts.push("S1");
        }
        if self.flip_second {
            parts.push("S2");
        }
        if self.swap {
            parts.push("S3");
        }
        if parts.is_empty() {
            "id".into()
        } else {
            parts.join("∘")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPair {
    pub canonical: (HomologyClass, HomologyClass),
    pub orbit: Vec<(HomologyClass, HomologyClass)>,
}

/// Lexicographically least representative of the orbit of a pair under the
/// symmetry group, together with the (sorted, deduplicated) orbit.
pub fn symmetry_reduce(pair: &(HomologyClass, HomologyClass)) -> ReducedPair {
    let mut orbit: Vec<_> = Symmetry::all().map(|g| g.act(pair)).collect();
    orbit.sort();
    orbit.dedup();
    ReducedPair { canonical: orbit[0].clone(), orbit }
}

/// A one-parameter family of classes {base + t·direction : t ∈ ℤ}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineClass {
    pub base: [i64; 2],
    pub direction: [i64; 2],
}

impl AffineClass {
    pub fn new(base: [i64; 2], direction: [i64; 2]) -> Self {
        Self { base, direction }.canonical()
    }

    pub fn at(&self, t: i64) -> HomologyClass {
        HomologyClass::pair(self.base[0] + t * self.direction[0], self.base[1] + t * self.direction[1])
    }

    /// Unique description of the same set: direction made lexicographically
    /// positive and the base translated into a fundamental window.
    pub fn canonical(self) -> Self {
        let mut d = self.direction;
        if d < [0, 0] {
            d = [-d[0], -d[1]];
        }
        let mut b = self.base;
        if d[0] != 0 {
            let t = b[0].div_euclid(d[0]);
            b = [b[0] - t * d[0], b[1] - t * d[1]];
        } else if d[1] != 0 {
            let t = b[1].div_euclid(d[1]);
            b = [b[0] - t * d[0], b[1] - t * d[1]];
        }
        Self { base: b, direction: d }
    }

    pub fn transform(&self, g: Symmetry) -> Self {
        let s = [if g.flip_first { -1 } else { 1 }, if g.flip_second { -1 } else { 1 }];
        Self::new(
            [self.base[0] * s[0], self.base[1] * s[1]],
            [self.direction[0] * s[0], self.direction[1] * s[1]],
        )
    }

    /// Parameter t with at(t) == c, if c lies on the family.
    pub fn parameter_of(&self, c: &HomologyClass) -> Option<i64> {
        let (dx, dy) = (c.coords[0] - self.base[0], c.coords[1] - self.base[1]);
        let [u, v] = self.direction;
        let t = if u != 0 {
            if dx % u != 0 {
                return None;
            }
            dx / u
        } else if v != 0 {
            if dy % v != 0 {
                return None;
            }
            dy / v
        } else {
            return if dx == 0 && dy == 0 { Some(0) } else { None };
        };
        (self.at(t) == *c).then_some(t)
    }

    pub fn contains(&self, c: &HomologyClass) -> bool {
        self.parameter_of(c).is_some()
    }
}

impl fmt::Display for AffineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn coord(b: i64, d: i64) -> String {
            let lin = match d {
                0 => String::new(),
                1 => "t".into(),
                -1 => "-t".into(),
                _ => format!("{d}t"),
            };
            match (lin.is_empty(), b) {
                (true, _) => b.to_string(),
                (false, 0) => lin,
                (false, b) if b > 0 => format!("{lin}+{b}"),
                (false, b) => format!("{lin}{b}"),
            }
        }
        write!(
            f,
            "({},{})",
            coord(self.base[0], self.direction[0]),
            coord(self.base[1], self.direction[1])
        )
    }
}
