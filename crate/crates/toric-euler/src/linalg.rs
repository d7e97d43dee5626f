//! Exact integer and rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub(crate) fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

pub(crate) fn det_i64(rows: &[&[i64]]) -> BigInt {
    det_bigint(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
}

/// Rank over the rationals by Gaussian elimination.
pub(crate) fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..cols {
                let sub = &factor * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub(crate) fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank_rational(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect(),
    )
}

/// Solve a square system `A x = b` exactly; `None` when `A` is singular.
pub(crate) fn solve_square(a: &[&[i64]], b: &[i64]) -> Option<Vec<BigRational>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    let det = det_i64(a);
    if det.is_zero() {
        return None;
    }
    let mut x = Vec::with_capacity(n);
    for col in 0..n {
        let replaced: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| BigInt::from(if c == col { b[r] } else { a[r][c] }))
                    .collect()
            })
            .collect();
        x.push(BigRational::new(det_bigint(replaced), det.clone()));
    }
    Some(x)
}

/// Integer direction spanning the kernel of a full-rank `(n-1) x n` system,
/// via signed maximal minors; `None` when the rows are dependent.
///
/// For `n = 1` the system is empty and the direction is the unit vector.
pub(crate) fn kernel_direction(rows: &[&[i64]], n: usize) -> Option<Vec<i64>> {
    debug_assert_eq!(rows.len(), n - 1);
    if n == 1 {
        return Some(vec![1]);
    }
    let mut dir = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                (0..n)
                    .filter(|&c| c != skip)
                    .map(|c| BigInt::from(r[c]))
                    .collect()
            })
            .collect();
        let mut d = det_bigint(minor);
        if skip % 2 == 1 {
            d = -d;
        }
        dir.push(i64::try_from(&d).expect("kernel direction exceeds i64"));
    }
    if dir.iter().all(|&v| v == 0) {
        None
    } else {
        Some(dir)
    }
}

/// Absolute values of all `k x k` minors of a rectangular integer matrix.
pub(crate) fn minor_magnitudes(rows: &[Vec<i64>], k: usize) -> Vec<BigInt> {
    let nr = rows.len();
    let nc = if nr == 0 { 0 } else { rows[0].len() };
    if k == 0 {
        return vec![BigInt::one()];
    }
    if k > nr || k > nc {
        return Vec::new();
    }
    let mut out = Vec::new();
    let row_sets = k_subsets(nr, k);
    let col_sets = k_subsets(nc, k);
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| BigInt::from(rows[r][c])).collect())
                .collect();
            out.push(det_bigint(sub).abs());
        }
    }
    out
}

/// All k-element subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
