use num_bigint::BigInt;
use num_traits::Zero;

use super::QPoly;

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic index must be positive");
    // Φ_m = (x^m − 1) / ∏_{d | m, d < m} Φ_d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::from(1);
    let mut p = QPoly::from_bigints(&num);
    for d in 1..m {
        if m % d == 0 {
            p = p.div_rem(&QPoly::from_bigints(&cyclotomic(d))).0;
        }
    }
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Whether Φ_m divides the integer polynomial `p` (constant term first).
pub fn cyclotomic_divides(m: u64, p: &[BigInt]) -> bool {
    let p = QPoly::from_bigints(p);
    if p.is_zero() {
        return true;
    }
    p.rem(&QPoly::from_bigints(&cyclotomic(m))).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(10), ints(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn trefoil_alexander_is_phi6() {
        assert!(cyclotomic_divides(6, &ints(&[1, -1, 1])));
        assert!(!cyclotomic_divides(5, &ints(&[1, -1, 1])));
    }
}
