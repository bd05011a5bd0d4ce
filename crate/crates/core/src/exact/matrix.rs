use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_determinant(m: &[Vec<i64>]) -> BigInt {
    bigint_determinant(m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

pub fn bigint_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// (positive, negative, zero) eigenvalue counts of a symmetric rational
/// matrix, by congruence diagonalization.
pub fn rational_inertia(mut a: Vec<Vec<BigRational>>) -> (usize, usize, usize) {
    let n = a.len();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    while !active.is_empty() {
        if let Some(idx) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.swap_remove(idx);
            let piv = a[p][p].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let col: Vec<BigRational> = active.iter().map(|&j| a[j][p].clone() / &piv).collect();
            for (x, &j) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                for &l in &active {
                    if a[p][l].is_zero() {
                        continue;
                    }
                    let d = &col[x] * &a[p][l];
                    a[j][l] -= d;
                }
            }
            continue;
        }
        // Zero diagonal: find an off-diagonal entry and replace e_i by e_i + e_j.
        let mut found = None;
        'outer: for (x, &i) in active.iter().enumerate() {
            for &j in &active[x + 1..] {
                if !a[i][j].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else { break };
        for &l in &active {
            let v = a[j][l].clone();
            a[i][l] += v;
        }
        for &l in &active {
            let v = a[l][j].clone();
            a[l][i] += v;
        }
    }
    (pos, neg, n - pos - neg)
}

pub fn symmetric_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    rational_inertia(
        m.iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(integer_determinant(&[vec![1, 0], vec![0, -1]]), BigInt::from(-1));
        assert_eq!(integer_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(integer_determinant(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]), BigInt::from(4));
        assert_eq!(integer_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
    }

    #[test]
    fn inertia_with_zero_diagonal() {
        assert_eq!(symmetric_inertia(&[vec![0, 1], vec![1, 0]]), (1, 1, 0));
        assert_eq!(symmetric_inertia(&[vec![0, 0], vec![0, 0]]), (0, 0, 2));
        assert_eq!(symmetric_inertia(&[vec![1, 1], vec![1, 1]]), (1, 0, 1));
        assert_eq!(symmetric_inertia(&[vec![-2, 1], vec![1, -2]]), (0, 2, 0));
        assert_eq!(symmetric_inertia(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]), (1, 1, 1));
    }

    #[test]
    fn inertia_is_sylvester_invariant() {
        // P·A·Pᵀ for a unimodular P keeps the inertia of A = diag(3,-1,0).
        let p = [[1i64, 2, 0], [0, 1, 5], [1, 0, 1]];
        let a = [[3i64, 0, 0], [0, -1, 0], [0, 0, 0]];
        let mut m = vec![vec![0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        m[i][j] += p[i][k] * a[k][l] * p[j][l];
                    }
                }
            }
        }
        assert_eq!(symmetric_inertia(&m), (1, 1, 1));
    }
}
