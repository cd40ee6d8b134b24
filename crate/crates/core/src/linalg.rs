//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank over `Q` by fraction-free Gaussian elimination.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs())
        else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                for j in c + 1..cols {
                    a[i][j] = &a[i][j] * &a[r][c] / &prev;
                }
                continue;
            }
            for j in c + 1..cols {
                let v = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Dense integer matrix product.
pub fn multiply(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank over a large prime field, an independent check.
    fn rank_mod_p(matrix: &[Vec<i64>]) -> usize {
        const P: i128 = 1_000_000_007;
        let mut a: Vec<Vec<i128>> = matrix
            .iter()
            .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(P)).collect())
            .collect();
        let cols = a.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, p);
            let inv = {
                let (mut base, mut e, mut acc) = (a[r][c], P - 2, 1i128);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % P;
                    }
                    base = base * base % P;
                    e >>= 1;
                }
                acc
            };
            for i in 0..a.len() {
                if i != r && a[i][c] != 0 {
                    let f = a[i][c] * inv % P;
                    let pivot_row = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x = (*x - f * y).rem_euclid(P);
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_examples() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(rank(&[vec![0, 0, 1], vec![0, 1, 0]]), 2);
    }

    proptest! {
        #[test]
        fn agrees_with_prime_field(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            prop_assert_eq!(rank(&m), rank_mod_p(&m));
        }

        #[test]
        fn rank_of_outer_products(
            u in prop::collection::vec(-4i64..=4, 4),
            v in prop::collection::vec(-4i64..=4, 5),
        ) {
            let m: Vec<Vec<i64>> = u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect();
            let expected = usize::from(u.iter().any(|&x| x != 0) && v.iter().any(|&x| x != 0));
            prop_assert_eq!(rank(&m), expected);
        }
    }
}
