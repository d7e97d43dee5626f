//! The divisor class group as the cokernel of the ray matrix, presented by
//! an exact integer Smith normal form.
//!
//! All arithmetic here is arbitrary precision: Smith normal form
//! intermediates can outgrow machine words even on small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::Fan;

/// Unimodular factorization `left * a * right = diagonal` with the
/// diagonal entries nonnegative and each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: Vec<Vec<BigInt>>,
    pub left_inverse: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
    pub diagonal: Vec<Vec<BigInt>>,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let limit = self.diagonal.len().min(
            self.diagonal
                .first()
                .map(|row| row.len())
                .unwrap_or(0),
        );
        (0..limit)
            .map(|k| self.diagonal[k][k].clone())
            .filter(|v| !v.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smallest nonzero entry (by absolute value) of the trailing submatrix.
fn min_nonzero(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Compute the Smith normal form of an integer matrix by elementary row
/// and column operations, tracking the row transform, its inverse, and the
/// column transform.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SmithDecomposition {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut d: Vec<Vec<BigInt>> = a.to_vec();
    let mut left = identity(rows);
    let mut left_inv = identity(rows);
    let mut right = identity(cols);

    // elementary row operations, mirrored on `left` and inverted on
    // `left_inv` (as column operations)
    let swap_rows = |d: &mut Vec<Vec<BigInt>>,
                     left: &mut Vec<Vec<BigInt>>,
                     left_inv: &mut Vec<Vec<BigInt>>,
                     i: usize,
                     j: usize| {
        d.swap(i, j);
        left.swap(i, j);
        for row in left_inv.iter_mut() {
            row.swap(i, j);
        }
    };
    let add_row = |d: &mut Vec<Vec<BigInt>>,
                   left: &mut Vec<Vec<BigInt>>,
                   left_inv: &mut Vec<Vec<BigInt>>,
                   i: usize,
                   j: usize,
                   c: &BigInt| {
        // row_i += c * row_j
        for col in 0..cols {
            let delta = c * &d[j][col];
            d[i][col] += delta;
        }
        for col in 0..rows {
            let delta = c * &left[j][col];
            left[i][col] += delta;
        }
        for row in left_inv.iter_mut() {
            let delta = c * &row[i];
            row[j] -= delta;
        }
    };
    let negate_row = |d: &mut Vec<Vec<BigInt>>,
                      left: &mut Vec<Vec<BigInt>>,
                      left_inv: &mut Vec<Vec<BigInt>>,
                      i: usize| {
        for v in d[i].iter_mut() {
            *v = -v.clone();
        }
        for v in left[i].iter_mut() {
            *v = -v.clone();
        }
        for row in left_inv.iter_mut() {
            row[i] = -row[i].clone();
        }
    };
    let swap_cols = |d: &mut Vec<Vec<BigInt>>, right: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in d.iter_mut() {
            row.swap(i, j);
        }
        for row in right.iter_mut() {
            row.swap(i, j);
        }
    };
    let add_col = |d: &mut Vec<Vec<BigInt>>,
                   right: &mut Vec<Vec<BigInt>>,
                   i: usize,
                   j: usize,
                   c: &BigInt| {
        // col_i += c * col_j
        for row in d.iter_mut() {
            let delta = c * &row[j];
            row[i] += delta;
        }
        for row in right.iter_mut() {
            let delta = c * &row[j];
            row[i] += delta;
        }
    };

    'outer: for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_nonzero(&d, k) else {
                break 'outer;
            };
            if pi != k {
                swap_rows(&mut d, &mut left, &mut left_inv, k, pi);
            }
            if pj != k {
                swap_cols(&mut d, &mut right, k, pj);
            }

            let mut dirty = false;
            for i in k + 1..rows {
                if d[i][k].is_zero() {
                    continue;
                }
                let q = d[i][k].div_floor(&d[k][k]);
                if !q.is_zero() {
                    add_row(&mut d, &mut left, &mut left_inv, i, k, &(-q));
                }
                if !d[i][k].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if d[k][j].is_zero() {
                    continue;
                }
                let q = d[k][j].div_floor(&d[k][k]);
                if !q.is_zero() {
                    add_col(&mut d, &mut right, j, k, &(-q));
                }
                if !d[k][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // divisibility sweep: fold in any row whose entries the pivot
            // does not divide, then reduce again
            let offender = (k + 1..rows).find(|&i| {
                (k + 1..cols).any(|j| !d[i][j].mod_floor(&d[k][k]).is_zero())
            });
            if let Some(i) = offender {
                add_row(&mut d, &mut left, &mut left_inv, k, i, &BigInt::one());
                continue;
            }

            if d[k][k].is_negative() {
                negate_row(&mut d, &mut left, &mut left_inv, k);
            }
            break;
        }
    }

    SmithDecomposition {
        left,
        left_inverse: left_inv,
        right,
        diagonal: d,
    }
}

/// An element of the class group in Smith coordinates: residues modulo the
/// nontrivial invariant factors, then a free integer part.
///
/// Residues are kept in canonical range, so derived equality is equality
/// of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

impl DivisorClass {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

/// The class group of a fan, presented by the Smith normal form of the
/// ray matrix.
#[derive(Debug, Clone)]
pub struct ClassGroupPresentation {
    ray_matrix: Vec<Vec<BigInt>>,
    snf: SmithDecomposition,
    invariant_factors: Vec<BigInt>,
    rank: usize,
    d: usize,
}

impl ClassGroupPresentation {
    pub fn new(fan: &Fan) -> Self {
        let ray_matrix: Vec<Vec<BigInt>> = fan
            .rays()
            .iter()
            .map(|ray| ray.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_matrix(ray_matrix)
    }

    /// Presentation of the cokernel of a `d x n` integer matrix acting on
    /// column vectors.
    pub fn from_matrix(ray_matrix: Vec<Vec<BigInt>>) -> Self {
        let d = ray_matrix.len();
        let snf = smith_normal_form(&ray_matrix);
        let invariant_factors = snf.invariant_factors();
        let rank = invariant_factors.len();
        Self {
            ray_matrix,
            snf,
            invariant_factors,
            rank,
            d,
        }
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.snf
    }

    pub fn ray_matrix(&self) -> &[Vec<BigInt>] {
        &self.ray_matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of the free part of the class group.
    pub fn free_rank(&self) -> usize {
        self.d - self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// The invariant factors greater than one, i.e. the orders of the
    /// torsion summands.
    pub fn torsion_moduli(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|v| **v > BigInt::one())
            .cloned()
            .collect()
    }

    /// The class of a divisor coefficient vector.
    pub fn class_of(&self, coeffs: &[i64]) -> Result<DivisorClass> {
        let big: Vec<BigInt> = coeffs.iter().map(|&v| BigInt::from(v)).collect();
        self.class_of_big(&big)
    }

    pub fn class_of_big(&self, coeffs: &[BigInt]) -> Result<DivisorClass> {
        if coeffs.len() != self.d {
            return Err(Error::VectorLength {
                expected: self.d,
                got: coeffs.len(),
            });
        }
        let y: Vec<BigInt> = self
            .snf
            .left
            .iter()
            .map(|row| row.iter().zip(coeffs).map(|(a, b)| a * b).sum())
            .collect();
        let mut torsion = Vec::new();
        for k in 0..self.rank {
            let modulus = &self.invariant_factors[k];
            if *modulus > BigInt::one() {
                torsion.push(y[k].mod_floor(modulus));
            }
        }
        let free = y[self.rank..].to_vec();
        Ok(DivisorClass { torsion, free })
    }

    /// The zero class.
    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            torsion: vec![BigInt::zero(); self.torsion_moduli().len()],
            free: vec![BigInt::zero(); self.free_rank()],
        }
    }

    /// Sum of two classes, with residues reduced back to canonical range.
    pub fn add(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        let moduli = self.torsion_moduli();
        let torsion = moduli
            .iter()
            .zip(a.torsion.iter().zip(&b.torsion))
            .map(|(m, (x, y))| (x + y).mod_floor(m))
            .collect();
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        DivisorClass { torsion, free }
    }

    /// Integer multiple of a class.
    pub fn scale(&self, a: &DivisorClass, factor: i64) -> DivisorClass {
        let factor = BigInt::from(factor);
        let moduli = self.torsion_moduli();
        let torsion = moduli
            .iter()
            .zip(&a.torsion)
            .map(|(m, x)| (x * &factor).mod_floor(m))
            .collect();
        let free = a.free.iter().map(|x| x * &factor).collect();
        DivisorClass { torsion, free }
    }

    /// A divisor coefficient vector mapping to the given class.
    pub fn representative(&self, class: &DivisorClass) -> Vec<BigInt> {
        let mut y = vec![BigInt::zero(); self.d];
        let mut torsion_iter = class.torsion.iter();
        for k in 0..self.rank {
            if self.invariant_factors[k] > BigInt::one() {
                y[k] = torsion_iter
                    .next()
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
            }
        }
        for (offset, v) in class.free.iter().enumerate() {
            y[self.rank + offset] = v.clone();
        }
        self.snf
            .left_inverse
            .iter()
            .map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Apply the ray matrix to a lattice vector, yielding the coefficient
    /// vector of a principal divisor.
    pub fn principal_divisor(&self, m: &[i64]) -> Vec<BigInt> {
        self.ray_matrix
            .iter()
            .map(|row| row.iter().zip(m).map(|(a, &b)| a * BigInt::from(b)).sum())
            .collect()
    }
}
