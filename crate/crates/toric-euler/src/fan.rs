//! Complete simplicial rational fans, Weil divisors, and the face complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homology::Complex;
use crate::linalg::det_i64;
use crate::subsets::{indices_from_mask, mask_from_indices, Mask, MAX_GROUND};

/// A simplicial fan given by its primitive ray generators and its maximal
/// cones, each cone an index set into the ray list.
///
/// Construction checks shapes only (coordinate counts, cone sizes, index
/// ranges); the geometric invariants are checked by [`Fan::validate`], and
/// every computation in this crate expects a fan whose validation report
/// is clean. Rays keep their input order, and all indices elsewhere in the
/// crate refer to that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Build a fan from `dim`-dimensional rays and 0-based maximal cones.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if rays.len() > MAX_GROUND {
            return Err(Error::TooManyRays {
                got: rays.len(),
                max: MAX_GROUND,
            });
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::RayLength {
                    ray: i + 1,
                    expected: dim,
                    got: ray.len(),
                });
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.into_iter().enumerate() {
            if cone.len() != dim {
                return Err(Error::ConeSize {
                    cone: c + 1,
                    expected: dim,
                    got: cone.len(),
                });
            }
            let mut sorted = cone;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::ConeRepeatedIndex { cone: c + 1 });
            }
            if let Some(&bad) = sorted.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::ConeIndexRange {
                    cone: c + 1,
                    index: bad + 1,
                    count: rays.len(),
                });
            }
            cones.push(sorted);
        }
        Ok(Self {
            dim,
            rays,
            max_cones: cones,
        })
    }

    /// Lattice dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rays `d`.
    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Ray generators, one row per ray.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray(&self, index: usize) -> &[i64] {
        &self.rays[index]
    }

    /// Maximal cones as sorted 0-based index lists.
    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub(crate) fn cone_masks(&self) -> Vec<Mask> {
        self.max_cones.iter().map(|c| mask_from_indices(c)).collect()
    }

    /// The face complex: the rays of each maximal cone span a simplex, and
    /// the fan's combinatorics is the union of those simplices.
    pub(crate) fn boundary_complex(&self) -> Complex {
        Complex::from_facet_masks(self.ray_count(), &self.cone_masks())
    }

    /// Check the invariants of a complete simplicial fan:
    /// primitive pairwise-distinct rays, linearly independent cone
    /// generators, every ridge in exactly two maximal cones, and the face
    /// complex a rational homology sphere.
    ///
    /// The last two checks are an exactly computable stand-in for
    /// completeness; they do not prove that the cones cover the ambient
    /// space, but every computation here needs only what they guarantee.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for (i, ray) in self.rays.iter().enumerate() {
            let gcd = ray.iter().fold(0i64, |g, &v| num_integer::gcd(g, v.abs()));
            if gcd != 1 {
                violations.push(Violation::NonPrimitiveRay { ray: i });
            }
        }

        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    violations.push(Violation::DuplicateRay { first: i, second: j });
                }
            }
        }

        for (c, cone) in self.max_cones.iter().enumerate() {
            let rows: Vec<&[i64]> = cone.iter().map(|&i| self.rays[i].as_slice()).collect();
            if det_i64(&rows).is_zero() {
                violations.push(Violation::DependentCone { cone: c });
            }
        }

        // ridge condition: each (n-1)-subset of a maximal cone must occur
        // in exactly two maximal cones
        let mut ridge_counts: BTreeMap<Mask, usize> = BTreeMap::new();
        for cone in self.cone_masks() {
            for v in indices_from_mask(cone) {
                *ridge_counts.entry(cone & !(1 << v)).or_insert(0) += 1;
            }
        }
        if self.dim == 1 {
            // the single ridge of a 1-dimensional cone is the empty set
            ridge_counts.clear();
            ridge_counts.insert(0, self.max_cones.len());
        }
        for (ridge, count) in ridge_counts {
            if count != 2 {
                violations.push(Violation::RidgeCount {
                    ridge: indices_from_mask(ridge),
                    count,
                });
            }
        }

        let betti = self.boundary_complex().reduced_betti();
        let sphere = (-1..self.dim as isize - 1).all(|i| betti.rank(i) == 0)
            && betti.rank(self.dim as isize - 1) == 1;
        if !sphere {
            violations.push(Violation::NotASphere {
                betti: betti.positive_ranks(),
            });
        }

        ValidationReport { violations }
    }

    /// All faces of the fan's maximal cones, deduplicated, including the
    /// empty face.
    pub fn face_complex(&self) -> FaceComplex {
        let mut faces = BTreeSet::new();
        for cone in self.cone_masks() {
            let mut sub = cone;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & cone;
            }
        }
        FaceComplex {
            vertex_count: self.ray_count(),
            faces,
        }
    }
}

/// One violated fan invariant; indices are 0-based, displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPrimitiveRay { ray: usize },
    DuplicateRay { first: usize, second: usize },
    DependentCone { cone: usize },
    RidgeCount { ridge: Vec<usize>, count: usize },
    NotASphere { betti: Vec<u64> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPrimitiveRay { ray } => {
                write!(f, "ray {} is not primitive", ray + 1)
            }
            Violation::DuplicateRay { first, second } => {
                write!(f, "rays {} and {} coincide", first + 1, second + 1)
            }
            Violation::DependentCone { cone } => {
                write!(f, "maximal cone {} has linearly dependent rays", cone + 1)
            }
            Violation::RidgeCount { ridge, count } => {
                let pretty: Vec<String> = ridge.iter().map(|i| (i + 1).to_string()).collect();
                write!(
                    f,
                    "ridge {{{}}} lies in {} maximal cones, expected 2",
                    pretty.join(","),
                    count
                )
            }
            Violation::NotASphere { betti } => {
                let pretty: Vec<String> = betti.iter().map(|r| r.to_string()).collect();
                write!(
                    f,
                    "face complex is not a homology sphere (reduced ranks {})",
                    pretty.join(",")
                )
            }
        }
    }
}

/// Outcome of [`Fan::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An integer combination of the rays' prime divisors, one coefficient
/// per ray in ray order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilDivisor {
    coeffs: Vec<i64>,
}

impl WeilDivisor {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub(crate) fn check_len(&self, fan: &Fan) -> Result<()> {
        if self.coeffs.len() != fan.ray_count() {
            return Err(Error::DivisorLength {
                expected: fan.ray_count(),
                got: self.coeffs.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for WeilDivisor {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

/// The set of all faces of a fan's maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceComplex {
    vertex_count: usize,
    faces: BTreeSet<Mask>,
}

impl FaceComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces as sorted index lists, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut masks: Vec<Mask> = self.faces.iter().copied().collect();
        crate::subsets::sort_by_size_then_lex(&mut masks);
        masks.into_iter().map(indices_from_mask).collect()
    }

    /// Whether the given 0-based index set is a face.
    pub fn is_face(&self, subset: &[usize]) -> Result<bool> {
        for &v in subset {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    count: self.vertex_count,
                });
            }
        }
        Ok(self.contains_mask(mask_from_indices(subset)))
    }

    pub(crate) fn contains_mask(&self, mask: Mask) -> bool {
        self.faces.contains(&mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn hirzebruch2_validates() {
        let fan = library::hirzebruch(2);
        assert!(fan.validate().is_valid());
    }

    #[test]
    fn non_primitive_ray_is_rejected() {
        let fan = Fan::new(
            2,
            vec![vec![2, 0], vec![0, 1], vec![-1, 2], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        let report = fan.validate();
        assert!(report
            .violations
            .contains(&Violation::NonPrimitiveRay { ray: 0 }));
    }

    #[test]
    fn zero_ray_is_not_primitive() {
        let fan = Fan::new(1, vec![vec![0], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        assert!(fan
            .validate()
            .violations
            .contains(&Violation::NonPrimitiveRay { ray: 0 }));
    }

    #[test]
    fn ridge_condition_catches_miswired_cone() {
        // replace cone {2,3} by {2,4}: ridge {4} then sits in three cones
        let fan = Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 2], vec![0, -1]],
            vec![vec![0, 1], vec![1, 3], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        let report = fan.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::RidgeCount { ridge, count: 3 } if ridge == &vec![3]
        )));
    }

    #[test]
    fn dependent_cone_is_rejected() {
        let fan = Fan::new(
            2,
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
            vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        assert!(fan
            .validate()
            .violations
            .contains(&Violation::DependentCone { cone: 0 }));
    }

    #[test]
    fn sphere_check_rejects_doubled_circle() {
        // two disjoint combinatorial circles: every ridge is fine, but the
        // face complex has first homology of rank two
        let rays = vec![
            vec![1, 0],
            vec![0, 1],
            vec![-1, -1],
            vec![2, 1],
            vec![1, 2],
            vec![-3, -4],
        ];
        let cones = vec![
            vec![0, 1],
            vec![1, 2],
            vec![2, 0],
            vec![3, 4],
            vec![4, 5],
            vec![5, 3],
        ];
        let fan = Fan::new(2, rays, cones).unwrap();
        let report = fan.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NotASphere { .. })));
    }

    #[test]
    fn shape_errors_at_construction() {
        assert_eq!(
            Fan::new(2, vec![vec![1]], vec![]),
            Err(Error::RayLength {
                ray: 1,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0]]),
            Err(Error::ConeSize {
                cone: 1,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 5]]),
            Err(Error::ConeIndexRange {
                cone: 1,
                index: 6,
                count: 2
            })
        );
        assert_eq!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1]]),
            Err(Error::ConeRepeatedIndex { cone: 1 })
        );
    }

    #[test]
    fn face_complex_of_hirzebruch2() {
        let faces = library::hirzebruch(2).face_complex().faces();
        assert_eq!(
            faces,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![3],
                vec![0, 1],
                vec![0, 3],
                vec![1, 2],
                vec![2, 3],
            ]
        );
    }

    #[test]
    fn face_complex_of_projective_plane_has_seven_faces() {
        let complex = library::projective_plane().face_complex();
        assert_eq!(complex.face_count(), 7);
        assert!(complex.is_face(&[]).unwrap());
        assert!(complex.is_face(&[0, 1]).unwrap());
        assert!(!complex.is_face(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn single_cone_closure_is_the_power_set() {
        // not a complete fan; face enumeration is purely combinatorial
        let fan = Fan::new(
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        assert_eq!(fan.face_complex().face_count(), 8);
    }

    #[test]
    fn is_face_on_hirzebruch2() {
        let complex = library::hirzebruch(2).face_complex();
        assert!(!complex.is_face(&[0, 2]).unwrap());
        assert!(complex.is_face(&[]).unwrap());
        assert!(complex.is_face(&[2, 3]).unwrap());
        assert_eq!(
            complex.is_face(&[7]),
            Err(Error::VertexOutOfRange { index: 7, count: 4 })
        );
    }

    #[test]
    fn face_complex_is_subset_closed() {
        for (_, fan) in library::all() {
            let complex = fan.face_complex();
            for face in complex.faces() {
                let mask = mask_from_indices(&face);
                let mut sub = mask;
                loop {
                    assert!(complex.contains_mask(sub));
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & mask;
                }
            }
        }
    }

    #[test]
    fn ridge_incidences_are_consistent() {
        for (_, fan) in library::all() {
            if fan.dim() == 1 {
                continue;
            }
            let mut counts: BTreeMap<Mask, usize> = BTreeMap::new();
            let mut incidences = 0usize;
            for cone in fan.cone_masks() {
                for v in indices_from_mask(cone) {
                    *counts.entry(cone & !(1 << v)).or_insert(0) += 1;
                    incidences += 1;
                }
            }
            assert_eq!(counts.len() * 2, incidences);
        }
    }
}
