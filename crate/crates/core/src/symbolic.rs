//! Small multivariate integer polynomials, used to check that parameters cancel
//! in the case rules before any numeric evaluation.

use std::collections::BTreeMap;
use std::fmt;

use crate::homology::HomologyClass;

type Monomial = Vec<(String, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i128>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<String, u32> = a.iter().cloned().collect();
    for (v, e) in b {
        *m.entry(v.clone()).or_default() += e;
    }
    m.into_iter().collect()
}

impl Poly {
    pub fn constant(c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    pub fn var(name: &str) -> Self {
        Self { terms: BTreeMap::from([(vec![(name.to_string(), 1)], 1)]) }
    }

    /// c + Σ kᵢ·vᵢ
    pub fn linear(c: i128, parts: &[(i128, &str)]) -> Self {
        parts.iter().fold(Self::constant(c), |acc, &(k, v)| acc.add(&Self::var(v).scale(k)))
    }

    fn normalize(mut self) -> Self {
        self.terms.retain(|_, c| *c != 0);
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            *terms.entry(m.clone()).or_default() += c;
        }
        Self { terms }.normalize()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i128) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }.normalize()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, i128> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *terms.entry(mono_mul(m1, m2)).or_default() += c1 * c2;
            }
        }
        Self { terms }.normalize()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<i128> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Vec::new()).copied(),
            _ => None,
        }
    }

    pub fn involves(&self, v: &str) -> bool {
        self.terms.keys().any(|m| m.iter().any(|(x, _)| x == v))
    }

    pub fn substitute(&self, v: &str, value: &Poly) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let mut term = Self::constant(*c);
            for (x, e) in m {
                let factor = if x == v { value.pow(*e) } else { Self { terms: BTreeMap::from([(vec![(x.clone(), *e)], 1)]) } };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, env: &[(&str, i128)]) -> Option<i128> {
        let mut p = self.clone();
        for (v, x) in env {
            p = p.substitute(v, &Self::constant(*x));
        }
        p.as_constant()
    }

    /// Coefficient of v¹ when the polynomial is linear in v with a constant
    /// coefficient; the remainder is returned alongside.
    pub fn linear_in(&self, v: &str) -> Option<(i128, Poly)> {
        let mut coeff = 0;
        let mut rest = Self::default();
        for (m, c) in &self.terms {
            match m.iter().find(|(x, _)| x == v) {
                None => rest = rest.add(&Self { terms: BTreeMap::from([(m.clone(), *c)]) }),
                Some((_, 1)) if m.len() == 1 => coeff += c,
                _ => return None,
            }
        }
        Some((coeff, rest))
    }

    /// Solve self = 0 for v, requiring exact integer division.
    pub fn solve_for(&self, v: &str) -> Option<Poly> {
        let (k, rest) = self.linear_in(v)?;
        if k == 0 {
            return None;
        }
        let neg = rest.scale(-1);
        if neg.terms.values().any(|c| c % k != 0) {
            return None;
        }
        Some(Self { terms: neg.terms.into_iter().map(|(m, c)| (m, c / k)).collect() })
    }

    /// Divide every coefficient by k, if all are divisible.
    pub fn div_exact(&self, k: i128) -> Option<Poly> {
        if k == 0 || !self.divisible_by(k) {
            return None;
        }
        Some(Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect() })
    }

    /// Whether every coefficient is divisible by d.
    pub fn divisible_by(&self, d: i128) -> bool {
        self.terms.values().all(|c| c % d == 0)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first, constant last.
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by_key(|(m, _)| std::cmp::Reverse(m.iter().map(|(_, e)| *e).sum::<u32>()));
        for (i, (m, c)) in items.iter().enumerate() {
            let c = **c;
            let body: Vec<String> =
                m.iter().map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") }).collect();
            let body = body.join("*");
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.abs();
            match (body.is_empty(), mag) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, 1) => write!(f, "{sign}{body}")?,
                (false, _) => write!(f, "{sign}{mag}*{body}")?,
            }
        }
        Ok(())
    }
}

/// A rank-2 class whose coordinates are polynomials in the case parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClass(pub [Poly; 2]);

impl SymClass {
    pub fn new(x: Poly, y: Poly) -> Self {
        Self([x, y])
    }

    pub fn concrete(c: &HomologyClass) -> Self {
        Self([Poly::constant(c.coords[0] as i128), Poly::constant(c.coords[1] as i128)])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self([self.0[0].add(&o.0[0]), self.0[1].add(&o.0[1])])
    }

    pub fn scale(&self, k: i128) -> Self {
        Self([self.0[0].scale(k), self.0[1].scale(k)])
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Pairing against diag(1,−1).
    pub fn pairing(&self, o: &Self) -> Poly {
        self.0[0].mul(&o.0[0]).sub(&self.0[1].mul(&o.0[1]))
    }

    pub fn square(&self) -> Poly {
        self.pairing(self)
    }

    pub fn substitute(&self, v: &str, value: &Poly) -> Self {
        Self([self.0[0].substitute(v, value), self.0[1].substitute(v, value)])
    }

    pub fn eval(&self, env: &[(&str, i128)]) -> Option<HomologyClass> {
        Some(HomologyClass::pair(self.0[0].eval(env)? as i64, self.0[1].eval(env)? as i64))
    }

    pub fn involves(&self, v: &str) -> bool {
        self.0.iter().any(|p| p.involves(v))
    }

    pub fn divisible_by(&self, d: i128) -> bool {
        self.0.iter().all(|p| p.divisible_by(d))
    }
}

impl fmt::Display for SymClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grey_cell_cancellation() {
        let alpha = SymClass::new(Poly::var("a"), Poly::linear(1, &[(1, "a")]));
        let beta = SymClass::new(Poly::var("b"), Poly::linear(1, &[(1, "b")]));
        let pairing = alpha.pairing(&beta);
        assert_eq!(pairing, Poly::linear(-1, &[(-1, "a"), (-1, "b")]));
        let b = pairing.add(&Poly::var("lk")).solve_for("b").unwrap();
        let sum = alpha.add(&beta).substitute("b", &b);
        assert!(!sum.involves("a"));
        assert_eq!(sum.square(), Poly::linear(0, &[(-4, "lk")]));
    }

    #[test]
    fn solve_requires_exact_division() {
        // 2a − 1 + 6j + 1 = 0  →  a = −3j
        let p = Poly::linear(0, &[(2, "a"), (6, "j")]);
        assert_eq!(p.solve_for("a").unwrap(), Poly::linear(0, &[(-3, "j")]));
        assert!(Poly::linear(1, &[(2, "a")]).solve_for("a").is_none());
    }

    #[test]
    fn display_and_eval() {
        let p = Poly::var("j").mul(&Poly::var("j")).scale(3).add(&Poly::linear(-2, &[(1, "j")]));
        assert_eq!(p.to_string(), "3*j^2+j-2");
        assert_eq!(p.eval(&[("j", 2)]), Some(12));
    }
}
