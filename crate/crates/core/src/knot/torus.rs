use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::seifert::{arf_from_seifert, torus2_seifert};
use super::RootOfUnity;
use crate::error::{Error, Result};

fn check_odd(q: i64) -> Result<()> {
    if q % 2 == 0 {
        return Err(Error::EvenTorusParameter(q));
    }
    Ok(())
}

/// σ_{T(2,q)}(e^{2πix}) = 2⌊1/2 − q|x|⌋ for q > 0, with x centered in
/// [−1/2, 1/2]; negative q negates. At the jump points q|x| ∈ ℤ + 1/2 the
/// value is the average of the two one-sided limits.
pub fn torus2_signature(q: i64, w: RootOfUnity) -> Result<i64> {
    check_odd(q)?;
    if q < 0 {
        return Ok(-torus2_signature(-q, w)?);
    }
    let red = w.reduced();
    let n = q as u64 * red.r().min(red.m() - red.r());
    let m = red.m();
    // q|x| = n/m
    if (2 * n) % m == 0 && ((2 * n) / m) % 2 == 1 && !w.is_minus_one() {
        let k = ((2 * n) / m - 1) / 2;
        return Ok(-2 * k as i64 - 1);
    }
    let t = BigRational::new(BigInt::from(1), BigInt::from(2)) - BigRational::new(n.into(), m.into());
    Ok(2 * t.floor().to_integer().to_i64().expect("small"))
}

pub fn torus2_arf(q: i64) -> Result<u8> {
    check_odd(q)?;
    arf_from_seifert(&torus2_seifert(q)?)
}

/// σ_{T(2, s·j + c)}(ω) = slope·j + intercept, valid for every integer j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineTorusTerm {
    pub slope: i64,
    pub intercept: i64,
}

impl AffineTorusTerm {
    pub fn at(&self, j: i64) -> i64 {
        self.slope * j + self.intercept
    }
}

/// Symbolic torus term for q = s·j + c. Needs s|x| ∈ ℤ (so the floor shifts
/// by an integer) and c|x| + 1/2 ∉ ℤ (so no member of the family sits on a
/// jump point). Returns `None` otherwise.
pub fn torus2_signature_affine(s: i64, c: i64, w: RootOfUnity) -> Result<Option<AffineTorusTerm>> {
    if s % 2 != 0 {
        return Err(Error::Precondition(format!("slope {s} would make some q even")));
    }
    check_odd(c)?;
    let ax = w.abs_centered();
    let sx = &ax * BigRational::from_integer(s.into());
    if !sx.is_integer() {
        return Ok(None);
    }
    let half = BigRational::new(1.into(), 2.into());
    let cx = &ax * BigRational::from_integer(c.into());
    if (&cx + &half).is_integer() {
        return Ok(None);
    }
    let slope = -2 * sx.to_integer().to_i64().expect("small");
    let intercept = 2 * (half - cx).floor().to_integer().to_i64().expect("small");
    Ok(Some(AffineTorusTerm { slope, intercept }))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn w(r: i64, m: i64) -> RootOfUnity {
        RootOfUnity::new(r, m).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(torus2_signature(-3, w(1, 5)).unwrap(), 2);
        assert_eq!(torus2_signature(-3, w(1, 3)).unwrap(), 2);
        assert_eq!(torus2_signature(3, w(1, 2)).unwrap(), -2);
        assert_eq!(torus2_signature(7, w(1, 2)).unwrap(), -6);
        assert!(torus2_signature(4, w(1, 2)).is_err());
    }

    #[test]
    fn jump_average() {
        // T(2,3) at x = 1/6: limits 0 and −2.
        assert_eq!(torus2_signature(3, w(1, 6)).unwrap(), -1);
        assert_eq!(torus2_signature(3, w(5, 6)).unwrap(), -1);
        assert_eq!(torus2_signature(-3, w(1, 6)).unwrap(), 1);
    }

    #[test]
    fn unknot_parameters() {
        for r in 1..12 {
            assert_eq!(torus2_signature(1, w(r, 12)).unwrap(), 0);
            assert_eq!(torus2_signature(-1, w(r, 12)).unwrap(), 0);
        }
    }

    #[test]
    fn affine_term_matches_pointwise() {
        // q = 12j − 14 ± 1 at ζ_3: −8j + 9 ∓ 1
        for (c, expect) in [(-13, 8), (-15, 10)] {
            let t = torus2_signature_affine(12, c, w(1, 3)).unwrap().unwrap();
            assert_eq!(t, AffineTorusTerm { slope: -8, intercept: expect });
            for j in -20..20 {
                assert_eq!(t.at(j), torus2_signature(12 * j + c, w(1, 3)).unwrap());
            }
        }
        assert!(torus2_signature_affine(2, 1, w(1, 3)).unwrap().is_none());
    }
}
