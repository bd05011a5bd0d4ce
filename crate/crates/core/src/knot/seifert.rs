//! Exact Levine–Tristram signatures from a Seifert matrix.
//!
//! For ω = e^{2πix} with 0 < x < 1/2 the Hermitian form (1−ω)V + (1−ω̄)Vᵀ is a
//! positive multiple of uS + iK, where S = V+Vᵀ, K = Vᵀ−V and u = tan(πx).
//! Its signature is half that of the real symmetric matrix
//! R(u) = [[uS, −K], [K, uS]]. The signature of R(u) only changes at roots of
//! D(u) = det R(u), so u* = tan(πx) is located among the real roots of
//! T_m(u) = Im((1+iu)^m) with Sturm sequences and R is evaluated at rational
//! points of the same cell. At a root of D the two neighbouring cells give the
//! one-sided limits and the value is their average.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::RootOfUnity;
use crate::error::{Error, Result};
use crate::exact::cyclotomic::cyclotomic_divides;
use crate::exact::matrix::{bigint_determinant, integer_determinant, rational_inertia};
use crate::exact::poly::SturmChain;
use crate::exact::QPoly;

const MAX_BISECTIONS: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidSeifert(format!("size {n} is odd")));
        }
        let skew: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| entries[i][j] - entries[j][i]).collect()).collect();
        let d = integer_determinant(&skew);
        if d.abs() != BigInt::one() {
            return Err(Error::InvalidSeifert(format!("det(V - V^T) = {d}, expected 1")));
        }
        Ok(Self { entries })
    }

    pub fn unknot() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Seifert matrix of the mirror image.
    pub fn mirror(&self) -> Self {
        let n = self.size();
        Self { entries: (0..n).map(|i| (0..n).map(|j| -self.entries[j][i]).collect()).collect() }
    }

    /// Block sum, a Seifert matrix for the connected sum.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut e = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            e[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            e[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        Self { entries: e }
    }

    fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect()).collect()
    }
}

impl TryFrom<Vec<Vec<i64>>> for SeifertMatrix {
    type Error = Error;
    fn try_from(v: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SeifertMatrix> for Vec<Vec<i64>> {
    fn from(v: SeifertMatrix) -> Self {
        v.entries
    }
}

/// The standard genus-(|q|−1)/2 Seifert matrix of T(2,q): −1 on the diagonal
/// and 1 on the superdiagonal for q > 0; the mirror for q < 0.
pub fn torus2_seifert(q: i64) -> Result<SeifertMatrix> {
    if q % 2 == 0 {
        return Err(Error::EvenTorusParameter(q));
    }
    let n = (q.unsigned_abs() - 1) as usize;
    let mut e = vec![vec![0; n]; n];
    for i in 0..n {
        e[i][i] = -1;
        if i + 1 < n {
            e[i][i + 1] = 1;
        }
    }
    let v = SeifertMatrix::new(e)?;
    Ok(if q < 0 { v.mirror() } else { v })
}

/// Arf = 0 iff det(V+Vᵀ) ≡ ±1 (mod 8).
pub fn arf_from_seifert(v: &SeifertMatrix) -> Result<u8> {
    let d = integer_determinant(&v.symmetrized());
    let r = (&d % BigInt::from(8) + BigInt::from(8)) % BigInt::from(8);
    match r.to_i64() {
        Some(1) | Some(7) => Ok(0),
        Some(3) | Some(5) => Ok(1),
        _ => Err(Error::InvalidSeifert(format!("det(V + V^T) = {d} is even"))),
    }
}

/// Δ(t) = det(V − tVᵀ), constant term first.
pub fn alexander_polynomial(v: &SeifertMatrix) -> Vec<BigInt> {
    let n = v.size();
    let pts: Vec<(BigRational, BigRational)> = (0..=n as i64)
        .map(|t| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(v.entries[i][j] - t * v.entries[j][i])).collect())
                .collect();
            (BigRational::from_integer(t.into()), BigRational::from_integer(bigint_determinant(m)))
        })
        .collect();
    QPoly::interpolate(&pts).coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Signature value together with its one-sided limits along the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LtSignature {
    pub value: i64,
    pub left: i64,
    pub right: i64,
    pub jump: bool,
}

/// Precomputed data for repeated signature evaluation of one Seifert matrix.
#[derive(Clone, Debug)]
pub struct SeifertForm {
    s: Vec<Vec<i64>>,
    k: Vec<Vec<i64>>,
    alexander: Vec<BigInt>,
    sturm: SturmChain,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// T_m(u) = Im((1+iu)^m); its real roots are tan(πk/m) for |k| < m/2.
fn tan_polynomial(m: u64) -> QPoly {
    // (1+iu)^m = Σ C(m,j) i^j u^j; keep j odd, sign (−1)^{(j−1)/2}.
    let mut c = vec![BigInt::zero(); m as usize + 1];
    let mut binom = BigInt::one();
    for j in 0..=m {
        if j % 2 == 1 {
            c[j as usize] = if (j / 2) % 2 == 0 { binom.clone() } else { -binom.clone() };
        }
        binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    QPoly::from_bigints(&c)
}

impl SeifertForm {
    pub fn new(v: &SeifertMatrix) -> Self {
        let n = v.size();
        let s = v.symmetrized();
        let k: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| v.entries[j][i] - v.entries[i][j]).collect()).collect();
        let mut form = Self { s, k, alexander: alexander_polynomial(v), sturm: SturmChain::new(&QPoly::one()) };
        let pts: Vec<(BigRational, BigRational)> = (0..=(2 * n) as i64)
            .map(|u| {
                let r = form.real_form(&rat(u));
                (rat(u), BigRational::from_integer(bigint_determinant(
                    r.into_iter().map(|row| row.into_iter().map(|x| x.to_integer()).collect()).collect(),
                )))
            })
            .collect();
        form.sturm = SturmChain::new(&QPoly::interpolate(&pts));
        form
    }

    pub fn size(&self) -> usize {
        self.s.len()
    }

    pub fn alexander(&self) -> &[BigInt] {
        &self.alexander
    }

    fn real_form(&self, u: &BigRational) -> Vec<Vec<BigRational>> {
        let n = self.size();
        let mut r = vec![vec![BigRational::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                let us = u * rat(self.s[i][j]);
                r[i][j] = us.clone();
                r[n + i][n + j] = us;
                r[i][n + j] = rat(-self.k[i][j]);
                r[n + i][j] = rat(self.k[i][j]);
            }
        }
        r
    }

    /// Signature of uS + iK at a rational u.
    fn signature_at(&self, u: &BigRational) -> i64 {
        let (p, n, _) = rational_inertia(self.real_form(u));
        (p as i64 - n as i64) / 2
    }

    fn sym_signature(&self) -> (i64, usize) {
        let (p, n, z) = rational_inertia(
            self.s.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect(),
        );
        (p as i64 - n as i64, z)
    }

    /// Whether ω is a root of the Alexander polynomial, via Φ_ord(ω) | Δ.
    pub fn degenerate_at(&self, w: RootOfUnity) -> bool {
        cyclotomic_divides(w.order(), &self.alexander)
    }

    pub fn signature(&self, w: RootOfUnity) -> Result<LtSignature> {
        if self.size() == 0 {
            return Ok(LtSignature { value: 0, left: 0, right: 0, jump: false });
        }
        let red = w.reduced();
        let red = if 2 * red.r() > red.m() { red.conj() } else { red };
        let cyclo_jump = self.degenerate_at(red);
        if red.is_minus_one() {
            // Left limit from x < 1/2; the right limit is its conjugate mirror image.
            let (value, nullity) = self.sym_signature();
            if (nullity > 0) != cyclo_jump {
                return Err(Error::Internal("degeneracy tests disagree at -1".into()));
            }
            if nullity == 0 {
                return Ok(LtSignature { value, left: value, right: value, jump: false });
            }
            let below = self.limit_below_half()?;
            return Ok(LtSignature { value: below, left: below, right: below, jump: true });
        }
        let (r, m) = (red.r(), red.m());
        let t = SturmChain::new(&tan_polynomial(m));
        let zero = BigRational::zero();
        let mut lo = zero.clone();
        let mut hi = tan_polynomial(m).root_bound();
        let rr = r as usize;
        let common = SturmChain::new(&self.sturm.poly().gcd(t.poly()));
        for _ in 0..MAX_BISECTIONS {
            if t.is_root(&hi) && t.count_roots(&zero, &hi) == rr {
                return self.signature_at_rational(&hi, cyclo_jump);
            }
            let roots = self.sturm.count_roots(&lo, &hi);
            let isolated = t.count_roots(&lo, &hi) == 1;
            if isolated && roots == 0 {
                if cyclo_jump {
                    return Err(Error::Internal(format!("degeneracy tests disagree at {w}")));
                }
                let v = self.signature_at(&hi);
                return Ok(LtSignature { value: v, left: v, right: v, jump: false });
            }
            if isolated && roots == 1 && !self.sturm.is_root(&lo) {
                if common.count_roots(&lo, &hi) == 1 {
                    if !cyclo_jump {
                        return Err(Error::Internal(format!("degeneracy tests disagree at {w}")));
                    }
                    let (left, right) = (self.signature_at(&lo), self.signature_at(&hi));
                    return Ok(LtSignature { value: (left + right) / 2, left, right, jump: true });
                }
            }
            let mid = (&lo + &hi) / rat(2);
            if t.count_roots(&zero, &mid) >= rr {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::Internal(format!("root isolation did not converge at {w}")))
    }

    /// u* rational (x = 1/4 gives u* = 1).
    fn signature_at_rational(&self, u: &BigRational, cyclo_jump: bool) -> Result<LtSignature> {
        let degenerate = self.sturm.is_root(u);
        if degenerate != cyclo_jump {
            return Err(Error::Internal("degeneracy tests disagree at a rational point".into()));
        }
        if !degenerate {
            let v = self.signature_at(u);
            return Ok(LtSignature { value: v, left: v, right: v, jump: false });
        }
        let mut d = BigRational::new(1.into(), 2.into());
        for _ in 0..MAX_BISECTIONS {
            let (a, b) = (u - &d, u + &d);
            if self.sturm.count_roots(&a, &b) == 1 && !self.sturm.is_root(&a) {
                let (left, right) = (self.signature_at(&a), self.signature_at(&b));
                return Ok(LtSignature { value: (left + right) / 2, left, right, jump: true });
            }
            d /= rat(2);
        }
        Err(Error::Internal("neighbourhood search did not converge".into()))
    }

    /// lim_{x→1/2⁻}: signature on the last cell of u before +∞.
    fn limit_below_half(&self) -> Result<i64> {
        let p = self.sturm.poly();
        let u = if p.degree().unwrap_or(0) == 0 { rat(1) } else { p.root_bound() };
        Ok(self.signature_at(&u))
    }
}

/// Levine–Tristram signature of V at ω, averaged at jump points.
pub fn lt_signature_seifert(v: &SeifertMatrix, w: RootOfUnity) -> Result<i64> {
    Ok(SeifertForm::new(v).signature(w)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::torus2_signature;

    fn w(r: i64, m: i64) -> RootOfUnity {
        RootOfUnity::new(r, m).unwrap()
    }

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SeifertMatrix::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(SeifertMatrix::new(vec![vec![1]]).is_err());
        assert!(SeifertMatrix::new(vec![vec![1, 1], vec![0]]).is_err());
        assert_eq!(torus2_seifert(3).unwrap(), trefoil());
    }

    #[test]
    fn trefoil_values() {
        assert_eq!(lt_signature_seifert(&trefoil(), w(1, 2)).unwrap(), -2);
        assert_eq!(lt_signature_seifert(&trefoil(), w(1, 3)).unwrap(), -2);
        assert_eq!(lt_signature_seifert(&trefoil(), w(1, 12)).unwrap(), 0);
        let s = SeifertForm::new(&trefoil()).signature(w(1, 6)).unwrap();
        assert_eq!(s, LtSignature { value: -1, left: 0, right: -2, jump: true });
    }

    #[test]
    fn hermitian_oracle_at_minus_one() {
        // At ω = −1 the form is 2(V + Vᵀ); inertia of the 2x2 matrix by hand.
        let s = trefoil().symmetrized();
        assert_eq!(s, vec![vec![-2, 1], vec![1, -2]]);
        let (det, tr) = (s[0][0] * s[1][1] - s[0][1] * s[1][0], s[0][0] + s[1][1]);
        assert!(det > 0 && tr < 0);
    }

    #[test]
    fn figure_eight_is_zero_everywhere() {
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap();
        let f = SeifertForm::new(&v);
        for m in 2..13 {
            for r in 1..m {
                assert_eq!(f.signature(w(r, m)).unwrap().value, 0);
            }
        }
        assert_eq!(arf_from_seifert(&v).unwrap(), 1);
    }

    #[test]
    fn arf_values() {
        assert_eq!(arf_from_seifert(&trefoil()).unwrap(), 1);
        assert_eq!(arf_from_seifert(&SeifertMatrix::unknot()).unwrap(), 0);
        assert_eq!(arf_from_seifert(&torus2_seifert(5).unwrap()).unwrap(), 1);
        assert_eq!(arf_from_seifert(&torus2_seifert(7).unwrap()).unwrap(), 0);
    }

    #[test]
    fn alexander_of_trefoil() {
        let d: Vec<i64> = alexander_polynomial(&trefoil()).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, -1, 1]);
    }

    #[test]
    fn t27_matches_closed_form() {
        let v = torus2_seifert(7).unwrap();
        assert_eq!(v.size(), 6);
        assert_eq!(lt_signature_seifert(&v, w(1, 2)).unwrap(), -6);
        let f = SeifertForm::new(&v);
        for m in 2..13 {
            for r in 1..m {
                assert_eq!(f.signature(w(r, m)).unwrap().value, torus2_signature(7, w(r, m)).unwrap(), "{r}/{m}");
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let v = torus2_seifert(5).unwrap().block_sum(&trefoil().mirror());
        let f = SeifertForm::new(&v);
        for m in 3..11 {
            for r in 1..m {
                assert_eq!(f.signature(w(r, m)).unwrap(), f.signature(w(m - r, m)).unwrap());
            }
        }
    }

    #[test]
    fn tan_polynomial_roots() {
        // T_4 = 4u − 4u³ has roots 0, ±1.
        assert_eq!(tan_polynomial(4), QPoly::from_ints(&[0, 4, 0, -4]));
    }
}
