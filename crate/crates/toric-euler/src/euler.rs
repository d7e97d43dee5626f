//! The Euler characteristic of a divisor sheaf, computed as a signed sum
//! over squarefree weights of Stanley-Reisner Hilbert values times graded
//! dimensions, together with the exponent bound that makes the sum exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::{Fan, WeilDivisor};
use crate::graded::dim_s;
use crate::ideals::FineWeight;
use crate::linalg::minor_magnitudes;
use crate::subsets::full_mask;

/// The data of the exponent bound: extreme minor sizes of the ray matrix
/// and the resulting minimal exponent.
///
/// With `n` the lattice dimension and `amax` the largest divisor
/// coefficient magnitude, the bound is
/// `l_min = max(1, ceil(n^2 * amax * max_entry * max_subminor / min_minor))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentBound {
    /// Largest absolute entry of the ray matrix.
    pub max_entry: i64,
    /// Largest absolute `(n-1) x (n-1)` minor.
    pub max_subminor: i64,
    /// Smallest absolute value of a nonzero `n x n` minor.
    pub min_minor: i64,
    /// The resulting exponent, clamped to at least 1.
    pub l_min: i64,
}

/// Compute the exponent bound for a divisor on a fan. Fails when the ray
/// matrix has no nonzero maximal minor.
pub fn exponent_bound(fan: &Fan, divisor: &WeilDivisor) -> Result<ExponentBound> {
    divisor.check_len(fan)?;
    let n = fan.dim();
    let rays = fan.rays().to_vec();

    let max_entry = rays
        .iter()
        .flat_map(|row| row.iter().map(|v| v.abs()))
        .max()
        .unwrap_or(0);
    let max_subminor = minor_magnitudes(&rays, n - 1)
        .into_iter()
        .max()
        .map(|v| big_to_i64(&v))
        .unwrap_or(1);
    let min_minor = minor_magnitudes(&rays, n)
        .into_iter()
        .filter(|v| !v.is_zero())
        .min()
        .map(|v| big_to_i64(&v))
        .ok_or(Error::DegenerateRays)?;

    let amax = divisor.coeffs().iter().map(|v| v.abs()).max().unwrap_or(0);
    let numerator =
        BigInt::from(n as i64 * n as i64) * BigInt::from(amax) * BigInt::from(max_entry)
            * BigInt::from(max_subminor);
    let l_min = numerator
        .div_ceil(&BigInt::from(min_minor))
        .max(BigInt::one());

    Ok(ExponentBound {
        max_entry,
        max_subminor,
        min_minor,
        l_min: big_to_i64(&l_min),
    })
}

fn big_to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).expect("bound exceeds i64")
}

/// One weight's line in the Euler characteristic sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiTraceRow {
    pub weight: FineWeight,
    /// 1 when the complement of the weight is supported on a face.
    pub face_indicator: bool,
    /// The divisor coefficient vector `l * m + a` realizing the shifted
    /// class degree.
    pub degree: Vec<i64>,
    /// Graded dimension at that degree.
    pub dim: u64,
    /// `(-1)^(|m| - d + n)`.
    pub sign: i64,
    /// `sign * face_indicator * dim`.
    pub contribution: i64,
}

/// The full per-weight breakdown of the Euler characteristic sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiTrace {
    pub l: i64,
    pub rows: Vec<ChiTraceRow>,
    pub total: i64,
}

fn resolve_exponent(fan: &Fan, divisor: &WeilDivisor, l: Option<i64>) -> Result<i64> {
    match l {
        Some(v) if v >= 1 => Ok(v),
        Some(v) => Err(Error::BadExponent(v)),
        None => Ok(exponent_bound(fan, divisor)?.l_min),
    }
}

fn weight_sign(weight: usize, d: usize, n: usize) -> i64 {
    if (weight as i64 - d as i64 + n as i64).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The Euler characteristic of the divisor sheaf: the signed sum over
/// nonzero weights `m` in `{0,1}^d` of the Stanley-Reisner Hilbert value
/// at `1 - m` times the graded dimension at `l*m + a`. When `l` is
/// omitted it defaults to the exponent bound, above which the sum is
/// independent of `l`.
pub fn chi(fan: &Fan, divisor: &WeilDivisor, l: Option<i64>) -> Result<i64> {
    divisor.check_len(fan)?;
    let l = resolve_exponent(fan, divisor, l)?;
    let d = fan.ray_count();
    let n = fan.dim();
    let complex = fan.face_complex();
    let full = full_mask(d);
    let a = divisor.coeffs();

    let mut total = 0i64;
    for mask in 1..=full {
        // the face indicator kills most weights; skip the lattice count
        let co = full & !mask;
        if !complex.contains_mask(co) {
            continue;
        }
        let degree: Vec<i64> = (0..d)
            .map(|r| l * ((mask >> r & 1) as i64) + a[r])
            .collect();
        let count = dim_s(fan, &WeilDivisor::new(degree))? as i64;
        total += weight_sign(mask.count_ones() as usize, d, n) * count;
    }
    Ok(total)
}

/// Like [`chi`], but returning the whole table: one row per nonzero
/// weight, including those whose face indicator is zero.
pub fn chi_trace(fan: &Fan, divisor: &WeilDivisor, l: Option<i64>) -> Result<ChiTrace> {
    divisor.check_len(fan)?;
    let l = resolve_exponent(fan, divisor, l)?;
    let d = fan.ray_count();
    let n = fan.dim();
    let complex = fan.face_complex();
    let full = full_mask(d);
    let a = divisor.coeffs();

    let mut rows = Vec::with_capacity(full as usize);
    let mut total = 0i64;
    for mask in 1..=full {
        let weight = FineWeight::from_mask(mask, d);
        let face_indicator = complex.contains_mask(full & !mask);
        let degree: Vec<i64> = (0..d)
            .map(|r| l * ((mask >> r & 1) as i64) + a[r])
            .collect();
        let dim = dim_s(fan, &WeilDivisor::new(degree.clone()))?;
        let sign = weight_sign(weight.weight(), d, n);
        let contribution = if face_indicator { sign * dim as i64 } else { 0 };
        total += contribution;
        rows.push(ChiTraceRow {
            weight,
            face_indicator,
            degree,
            dim,
            sign,
            contribution,
        });
    }
    Ok(ChiTrace { l, rows, total })
}
