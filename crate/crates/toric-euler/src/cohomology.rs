//! Degree-by-degree cohomology of a divisor sheaf, independent of the
//! Euler characteristic formula: each lattice point contributes the
//! reduced cohomology of the subcomplex of the face complex induced on
//! the rays whose inequality it violates.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fan::{Fan, WeilDivisor};
use crate::graded::dim_s;
use crate::homology::BettiVector;
use crate::linalg::{k_subsets, solve_square};
use crate::subsets::{indices_from_mask, Mask};

/// All cohomology dimensions of a divisor sheaf, with the lattice points
/// that produced them when tracing was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyVector {
    /// `h[i]` is the dimension of the degree-`i` cohomology, `0..=n`.
    pub h: Vec<u64>,
    /// Lattice points with a nonzero contribution; populated only by the
    /// tracing entry point.
    pub contributions: Option<Vec<DegreeContribution>>,
}

impl CohomologyVector {
    /// `sum (-1)^i h[i]`, which must equal the Euler characteristic.
    pub fn alternating_sum(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// One lattice point's contribution to the cohomology dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeContribution {
    pub point: Vec<i64>,
    /// Rays whose inequality the point violates (0-based).
    pub support: Vec<usize>,
    /// Pairs `(i, rank)` added to `h[i]`.
    pub ranks: Vec<(usize, u64)>,
}

/// Default enumeration margin around the box of arrangement vertices.
pub const DEFAULT_MARGIN: i64 = 1;

/// Cohomology dimensions `h^0..h^n` with the default margin and no trace.
pub fn cohomology_dims(fan: &Fan, divisor: &WeilDivisor) -> Result<CohomologyVector> {
    cohomology_dims_with(fan, divisor, DEFAULT_MARGIN, false)
}

/// Cohomology dimensions with an explicit enumeration margin, optionally
/// recording per-point contributions.
///
/// The enumeration region is the integer bounding box of all vertices of
/// the hyperplane arrangement `{ <m, v_rho> = -a_rho }`, expanded by
/// `margin`. The induced subcomplex attached to a point depends only on
/// which side of each hyperplane it lies, and points outside every
/// bounded chamber contribute nothing for a complete fan; the margin is a
/// guard band, and enlarging it must not change any value.
pub fn cohomology_dims_with(
    fan: &Fan,
    divisor: &WeilDivisor,
    margin: i64,
    trace: bool,
) -> Result<CohomologyVector> {
    divisor.check_len(fan)?;
    let n = fan.dim();
    let a = divisor.coeffs();
    let rays = fan.rays();

    let (lo, hi) = arrangement_box(fan, a, margin)?;
    let face_complex = fan.boundary_complex();

    let mut h = vec![0u64; n + 1];
    let mut contributions = Vec::new();
    let mut betti_cache: HashMap<Mask, BettiVector> = HashMap::new();

    let mut point = lo.clone();
    loop {
        let mut violated: Mask = 0;
        for (r, ray) in rays.iter().enumerate() {
            let dot: i64 = ray.iter().zip(&point).map(|(&c, &x)| c * x).sum();
            if dot + a[r] < 0 {
                violated |= 1 << r;
            }
        }
        let betti = betti_cache
            .entry(violated)
            .or_insert_with(|| face_complex.induced_mask(violated).reduced_betti());
        let mut added = Vec::new();
        for (i, slot) in h.iter_mut().enumerate() {
            let rank = betti.rank(i as isize - 1);
            if rank > 0 {
                *slot += rank;
                added.push((i, rank));
            }
        }
        if trace && !added.is_empty() {
            contributions.push(DegreeContribution {
                point: point.clone(),
                support: indices_from_mask(violated),
                ranks: added,
            });
        }

        // advance the odometer over the box
        let mut idx = 0;
        loop {
            if idx == n {
                return Ok(CohomologyVector {
                    h,
                    contributions: trace.then_some(contributions),
                });
            }
            point[idx] += 1;
            if point[idx] <= hi[idx] {
                break;
            }
            point[idx] = lo[idx];
            idx += 1;
        }
    }
}

/// Integer bounding box of the arrangement vertices, expanded by `margin`.
fn arrangement_box(fan: &Fan, a: &[i64], margin: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let n = fan.dim();
    let rows: Vec<&[i64]> = fan.rays().iter().map(|r| r.as_slice()).collect();
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    let mut found = false;
    for subset in k_subsets(rows.len(), n) {
        let sub: Vec<&[i64]> = subset.iter().map(|&i| rows[i]).collect();
        let rhs: Vec<i64> = subset.iter().map(|&i| -a[i]).collect();
        let Some(vertex) = solve_square(&sub, &rhs) else {
            continue;
        };
        found = true;
        for (i, coord) in vertex.iter().enumerate() {
            let floor = i64::try_from(&coord.floor().to_integer()).expect("box exceeds i64");
            let ceil = i64::try_from(&coord.ceil().to_integer()).expect("box exceeds i64");
            lo[i] = lo[i].min(floor);
            hi[i] = hi[i].max(ceil);
        }
    }
    if !found {
        return Err(Error::DegenerateRays);
    }
    for i in 0..n {
        lo[i] -= margin;
        hi[i] += margin;
    }
    Ok((lo, hi))
}

/// Global sections: the graded dimension of the divisor's class.
pub fn h0(fan: &Fan, divisor: &WeilDivisor) -> Result<u64> {
    dim_s(fan, divisor)
}
