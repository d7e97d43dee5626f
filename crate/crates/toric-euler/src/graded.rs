//! Graded dimensions of the Cox ring: the number of monomials in a given
//! divisor class, counted as lattice points of the divisor polyhedron.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fan::{Fan, WeilDivisor};
use crate::linalg::{k_subsets, kernel_direction, rank_i64, solve_square};

/// The rational polyhedron `{ m : <m, v_rho> >= -a_rho }` for a divisor
/// with coefficients `a`, together with its vertices and the integer
/// bounding box enclosing them.
#[derive(Debug, Clone)]
pub struct DivisorPolyhedron {
    /// Rows are the ray generators.
    normals: Vec<Vec<i64>>,
    /// Right-hand sides: row `rho` demands `<m, v_rho> >= rhs[rho]`.
    rhs: Vec<i64>,
    vertices: Vec<Vec<BigRational>>,
    /// Componentwise integer bounds covering all vertices; `None` when the
    /// polyhedron is empty.
    bounds: Option<(Vec<i64>, Vec<i64>)>,
}

impl DivisorPolyhedron {
    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn bounds(&self) -> Option<(&[i64], &[i64])> {
        self.bounds.as_ref().map(|(lo, hi)| (&lo[..], &hi[..]))
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Whether a rational point satisfies every inequality.
fn satisfies(normals: &[Vec<i64>], rhs: &[i64], point: &[BigRational]) -> bool {
    normals.iter().zip(rhs).all(|(row, &r)| {
        let dot: BigRational = row
            .iter()
            .zip(point)
            .map(|(&c, x)| x * rational(c))
            .sum();
        dot >= rational(r)
    })
}

/// Candidate vertices: solutions of every invertible `n x n` row
/// subsystem taken with equality.
fn subsystem_solutions(normals: &[Vec<i64>], rhs: &[i64], n: usize) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for subset in k_subsets(normals.len(), n) {
        let rows: Vec<&[i64]> = subset.iter().map(|&i| normals[i].as_slice()).collect();
        let b: Vec<i64> = subset.iter().map(|&i| rhs[i]).collect();
        if let Some(solution) = solve_square(&rows, &b) {
            if !out.contains(&solution) {
                out.push(solution);
            }
        }
    }
    out
}

/// Detect a nonzero recession direction of `{ u : A u >= 0 }`. For a fan
/// whose cones cover the ambient space the recession cone is trivial, so a
/// direction here means the input is not a complete fan.
///
/// A rank-deficient ray matrix puts its whole kernel in the recession
/// cone. Otherwise the cone is pointed, and it is nonzero exactly when
/// some extreme ray exists; every extreme ray is active on `n - 1`
/// independent rows, so scanning kernel directions of those subsystems
/// decides the question.
fn is_unbounded(normals: &[Vec<i64>], n: usize) -> bool {
    if rank_i64(normals) < n {
        return true;
    }
    let admissible = |u: &[i64]| {
        normals.iter().all(|row| {
            row.iter()
                .zip(u)
                .map(|(&c, &x)| c as i128 * x as i128)
                .sum::<i128>()
                >= 0
        })
    };
    for subset in k_subsets(normals.len(), n - 1) {
        let rows: Vec<&[i64]> = subset.iter().map(|&i| normals[i].as_slice()).collect();
        let Some(dir) = kernel_direction(&rows, n) else {
            continue;
        };
        let neg: Vec<i64> = dir.iter().map(|&v| -v).collect();
        if admissible(&dir) || admissible(&neg) {
            return true;
        }
    }
    false
}

/// The divisor polyhedron of `a`: inequalities `<m, v_rho> >= -a_rho`,
/// with vertices from all invertible square subsystems. An unbounded
/// feasible region is reported as an error, since it signals a fan that
/// does not cover the ambient space.
pub fn divisor_polytope(fan: &Fan, divisor: &WeilDivisor) -> Result<DivisorPolyhedron> {
    divisor.check_len(fan)?;
    let n = fan.dim();
    let normals: Vec<Vec<i64>> = fan.rays().to_vec();
    let rhs: Vec<i64> = divisor.coeffs().iter().map(|&a| -a).collect();

    if is_unbounded(&normals, n) {
        return Err(Error::UnboundedPolyhedron);
    }

    let vertices: Vec<Vec<BigRational>> = subsystem_solutions(&normals, &rhs, n)
        .into_iter()
        .filter(|v| satisfies(&normals, &rhs, v))
        .collect();

    let bounds = if vertices.is_empty() {
        None
    } else {
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for vertex in &vertices {
            for (i, coord) in vertex.iter().enumerate() {
                let floor = big_to_i64(&coord.floor().to_integer());
                let ceil = big_to_i64(&coord.ceil().to_integer());
                lo[i] = lo[i].min(ceil);
                hi[i] = hi[i].max(floor);
            }
        }
        Some((lo, hi))
    };

    Ok(DivisorPolyhedron {
        normals,
        rhs,
        vertices,
        bounds,
    })
}

fn big_to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).expect("coordinate exceeds i64")
}

/// Exact number of lattice points in the polyhedron: walk the integer
/// bounding box coordinate by coordinate and close each branch with the
/// integer interval the remaining inequalities allow for the final
/// coordinate.
pub fn count_lattice_points(polyhedron: &DivisorPolyhedron) -> u64 {
    let Some((lo, hi)) = &polyhedron.bounds else {
        return 0;
    };
    let n = lo.len();
    let partial: Vec<i64> = vec![0; polyhedron.normals.len()];
    count_from(polyhedron, lo, hi, 0, &partial, n)
}

fn count_from(
    p: &DivisorPolyhedron,
    lo: &[i64],
    hi: &[i64],
    depth: usize,
    partial: &[i64],
    n: usize,
) -> u64 {
    if depth == n - 1 {
        // remaining freedom is the last coordinate: intersect the integer
        // intervals each inequality allows
        let mut low = lo[depth];
        let mut high = hi[depth];
        for (row, (&r, &acc)) in p.normals.iter().zip(p.rhs.iter().zip(partial)) {
            let c = row[depth];
            let needed = r - acc;
            if c == 0 {
                if needed > 0 {
                    return 0;
                }
            } else if c > 0 {
                low = low.max(Integer::div_ceil(&needed, &c));
            } else {
                high = high.min(Integer::div_floor(&needed, &c));
            }
        }
        return if low > high { 0 } else { (high - low + 1) as u64 };
    }

    let mut total = 0;
    for value in lo[depth]..=hi[depth] {
        let advanced: Vec<i64> = p
            .normals
            .iter()
            .zip(partial)
            .map(|(row, &acc)| acc + row[depth] * value)
            .collect();
        total += count_from(p, lo, hi, depth + 1, &advanced, n);
    }
    total
}

/// The dimension of the graded piece of the Cox ring attached to the
/// divisor: its lattice point count. Depends only on the divisor class.
pub fn dim_s(fan: &Fan, divisor: &WeilDivisor) -> Result<u64> {
    Ok(count_lattice_points(&divisor_polytope(fan, divisor)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classgroup::ClassGroupPresentation;
    use crate::fan::Fan;
    use crate::library;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn div(coeffs: &[i64]) -> WeilDivisor {
        WeilDivisor::new(coeffs.to_vec())
    }

    #[test]
    fn dilated_triangle_vertices() {
        let fan = library::projective_plane();
        for k in 1..=4 {
            let p = divisor_polytope(&fan, &div(&[k, 0, 0])).unwrap();
            assert_eq!(p.vertices().len(), 3);
        }
    }

    #[test]
    fn zero_divisor_polytope_is_the_origin() {
        for (name, fan) in library::all() {
            let d = fan.ray_count();
            let p = divisor_polytope(&fan, &div(&vec![0; d])).unwrap();
            assert_eq!(p.vertices().len(), 1, "{name}");
            assert!(p.vertices()[0].iter().all(|c| c.is_zero()), "{name}");
            assert_eq!(count_lattice_points(&p), 1, "{name}");
        }
    }

    #[test]
    fn shifted_degree_dimensions_on_hirzebruch2() {
        let fan = library::hirzebruch(2);
        assert_eq!(dim_s(&fan, &div(&[0, 4, 3, -1])).unwrap(), 2);
        assert_eq!(dim_s(&fan, &div(&[4, 4, 3, -1])).unwrap(), 12);
        assert_eq!(dim_s(&fan, &div(&[4, 4, 7, -1])).unwrap(), 28);
    }

    #[test]
    fn empty_polytope_on_hirzebruch2() {
        let fan = library::hirzebruch(2);
        let p = divisor_polytope(&fan, &div(&[0, 0, 3, -5])).unwrap();
        assert!(p.is_empty());
        assert_eq!(dim_s(&fan, &div(&[0, 0, 3, -5])).unwrap(), 0);
    }

    #[test]
    fn dim_of_dilated_triangles() {
        let fan = library::projective_plane();
        assert_eq!(dim_s(&fan, &div(&[3, 0, 0])).unwrap(), 10);
        assert_eq!(dim_s(&fan, &div(&[0, 0, 0])).unwrap(), 1);
        for k in 0..=5 {
            let expected = ((k + 1) * (k + 2) / 2) as u64;
            assert_eq!(dim_s(&fan, &div(&[k, 0, 0])).unwrap(), expected);
        }
        assert_eq!(dim_s(&fan, &div(&[-1, 0, 0])).unwrap(), 0);
    }

    #[test]
    fn unbounded_region_is_an_error() {
        // combinatorially fine, geometrically overlapping: ray 3 points the
        // wrong way, so the "polytope" grows without bound
        let fan = Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 2], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        assert_eq!(
            divisor_polytope(&fan, &div(&[1, 1, 1, 1])).unwrap_err(),
            Error::UnboundedPolyhedron
        );
    }

    #[test]
    fn divisor_length_is_checked() {
        let fan = library::projective_plane();
        assert_eq!(
            dim_s(&fan, &div(&[1, 2])).unwrap_err(),
            Error::DivisorLength { expected: 3, got: 2 }
        );
    }

    #[test]
    fn class_invariance_of_dim() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC1A0);
        for (name, fan) in library::all() {
            let pres = ClassGroupPresentation::new(&fan);
            for _ in 0..10 {
                let a: Vec<i64> = (0..fan.ray_count()).map(|_| rng.gen_range(-4..=4)).collect();
                let m: Vec<i64> = (0..fan.dim()).map(|_| rng.gen_range(-2..=2)).collect();
                let shifted: Vec<i64> = pres
                    .principal_divisor(&m)
                    .iter()
                    .zip(&a)
                    .map(|(p, &x)| i64::try_from(p).unwrap() + x)
                    .collect();
                assert_eq!(
                    dim_s(&fan, &div(&a)).unwrap(),
                    dim_s(&fan, &div(&shifted)).unwrap(),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn dim_is_monotone_in_the_divisor() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0A0B);
        for (_, fan) in library::all() {
            for _ in 0..10 {
                let a: Vec<i64> = (0..fan.ray_count()).map(|_| rng.gen_range(-4..=4)).collect();
                let bigger: Vec<i64> = a.iter().map(|&x| x + rng.gen_range(0..=2)).collect();
                assert!(
                    dim_s(&fan, &div(&a)).unwrap() <= dim_s(&fan, &div(&bigger)).unwrap()
                );
            }
        }
    }

    /// Independent oracle for surfaces: count exponent vectors of
    /// monomials in the class of `a` directly, by checking membership of
    /// `e - a` in the lattice image of the ray matrix with plain integer
    /// Cramer arithmetic on a fixed invertible 2x2 subsystem.
    fn monomial_fiber_count_2d(fan: &Fan, a: &[i64], cap: i64) -> u64 {
        assert_eq!(fan.dim(), 2);
        let d = fan.ray_count();
        let rays = fan.rays();
        let (r0, r1) = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && rays[i][0] * rays[j][1] - rays[i][1] * rays[j][0] != 0)
            .expect("full-rank ray matrix");
        let det = rays[r0][0] * rays[r1][1] - rays[r0][1] * rays[r1][0];

        let mut count = 0;
        let mut e = vec![0i64; d];
        loop {
            let b0 = e[r0] - a[r0];
            let b1 = e[r1] - a[r1];
            let num0 = b0 * rays[r1][1] - rays[r0][1] * b1;
            let num1 = rays[r0][0] * b1 - b0 * rays[r1][0];
            if num0 % det == 0 && num1 % det == 0 {
                let m = [num0 / det, num1 / det];
                let consistent = (0..d)
                    .all(|r| rays[r][0] * m[0] + rays[r][1] * m[1] == e[r] - a[r]);
                if consistent {
                    count += 1;
                }
            }
            // advance the exponent odometer
            let mut idx = 0;
            loop {
                if idx == d {
                    return count;
                }
                e[idx] += 1;
                if e[idx] <= cap {
                    break;
                }
                e[idx] = 0;
                idx += 1;
            }
        }
    }

    #[test]
    fn dim_matches_direct_monomial_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xF1BE);
        for (name, fan) in library::all() {
            if fan.dim() != 2 {
                continue;
            }
            for _ in 0..3 {
                let a: Vec<i64> = (0..fan.ray_count()).map(|_| rng.gen_range(-3..=3)).collect();
                assert_eq!(
                    dim_s(&fan, &div(&a)).unwrap(),
                    monomial_fiber_count_2d(&fan, &a, 20),
                    "{name} a={a:?}"
                );
            }
        }
    }
}
