//! Reduced simplicial homology ranks over the rationals.
//!
//! Complexes are stored by their facets. Two degenerate complexes are
//! distinguished: the *empty* complex, whose only face is the empty set,
//! and the *void* complex, which has no faces at all. The empty complex
//! has reduced homology of rank one in degree -1; the void complex has
//! no homology in any degree.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::rank_rational;
use crate::subsets::{indices_from_mask, mask_from_indices, maximal_masks, Mask, MAX_GROUND};

/// A finite simplicial complex on the ground set `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    vertex_count: usize,
    /// Inclusion-maximal faces; empty for the void complex, `[0]` for the
    /// complex whose only face is the empty set.
    facets: Vec<Mask>,
}

impl Complex {
    /// The complex with no faces at all.
    pub fn void(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            facets: Vec::new(),
        }
    }

    /// The complex whose only face is the empty set.
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            facets: vec![0],
        }
    }

    /// Build a complex from generating faces; redundant (non-maximal)
    /// generators are dropped. An empty generator list yields the void
    /// complex.
    pub fn from_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if vertex_count > MAX_GROUND {
            return Err(Error::TooManyRays {
                got: vertex_count,
                max: MAX_GROUND,
            });
        }
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            for &v in face {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        count: vertex_count,
                    });
                }
            }
            masks.push(mask_from_indices(face));
        }
        Ok(Self::from_facet_masks(vertex_count, &masks))
    }

    pub(crate) fn from_facet_masks(vertex_count: usize, masks: &[Mask]) -> Self {
        let mut facets = maximal_masks(masks);
        facets.sort_unstable();
        Self {
            vertex_count,
            facets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facets as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| indices_from_mask(m)).collect()
    }

    /// Largest face dimension, with the empty face counting as dimension -1.
    /// Returns `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|m| m.count_ones() as isize - 1)
            .max()
    }

    /// The subcomplex of all faces contained in `vertex_subset`.
    pub fn induced_subcomplex(&self, vertex_subset: &[usize]) -> Result<Complex> {
        for &v in vertex_subset {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    count: self.vertex_count,
                });
            }
        }
        Ok(self.induced_mask(mask_from_indices(vertex_subset)))
    }

    pub(crate) fn induced_mask(&self, vertex_mask: Mask) -> Complex {
        let restricted: Vec<Mask> = self.facets.iter().map(|&f| f & vertex_mask).collect();
        Self::from_facet_masks(self.vertex_count, &restricted)
    }

    /// All faces grouped by vertex count, each group sorted.
    fn faces_by_size(&self) -> Vec<Vec<Mask>> {
        let mut all: BTreeSet<Mask> = BTreeSet::new();
        for &facet in &self.facets {
            // enumerate submasks, including 0 and the facet itself
            let mut sub = facet;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let max_size = all.iter().map(|m| m.count_ones() as usize).max();
        let Some(max_size) = max_size else {
            return Vec::new();
        };
        let mut groups = vec![Vec::new(); max_size + 1];
        for m in all {
            groups[m.count_ones() as usize].push(m);
        }
        groups
    }

    /// Signed count of all faces, the empty face contributing in degree -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(size, faces)| {
                let sign = if size % 2 == 0 { -1 } else { 1 };
                sign * faces.len() as i64
            })
            .sum()
    }

    /// Ranks of reduced homology over the rationals, computed from exact
    /// ranks of the boundary matrices of the augmented chain complex.
    pub fn reduced_betti(&self) -> BettiVector {
        let groups = self.faces_by_size();
        if groups.is_empty() {
            return BettiVector { ranks: Vec::new() };
        }
        // boundary_ranks[s] = rank of the map from s-vertex faces down
        let mut boundary_ranks = vec![0usize; groups.len() + 1];
        for s in 1..groups.len() {
            boundary_ranks[s] = boundary_rank(&groups[s - 1], &groups[s]);
        }
        let mut ranks = Vec::with_capacity(groups.len());
        for s in 0..groups.len() {
            let cells = groups[s].len();
            ranks.push((cells - boundary_ranks[s] - boundary_ranks[s + 1]) as u64);
        }
        BettiVector { ranks }
    }
}

/// Rank of the simplicial boundary matrix from `cols` (s-vertex faces) to
/// `rows` ((s-1)-vertex faces).
fn boundary_rank(rows: &[Mask], cols: &[Mask]) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let row_pos: std::collections::HashMap<Mask, usize> =
        rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut matrix = vec![vec![zero; cols.len()]; rows.len()];
    for (j, &face) in cols.iter().enumerate() {
        for (position, v) in indices_from_mask(face).into_iter().enumerate() {
            let sub = face & !(1 << v);
            let i = row_pos[&sub];
            let sign: i64 = if position % 2 == 0 { 1 } else { -1 };
            matrix[i][j] = BigRational::from_integer(BigInt::from(sign));
        }
    }
    rank_rational(matrix)
}

/// Ranks of reduced homology, indexed from degree -1 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    ranks: Vec<u64>,
}

impl BettiVector {
    /// Rank of reduced homology in the given degree (degrees start at -1).
    pub fn rank(&self, degree: isize) -> u64 {
        let idx = degree + 1;
        if idx < 0 {
            return 0;
        }
        self.ranks.get(idx as usize).copied().unwrap_or(0)
    }

    /// Ranks as a vector starting at degree -1.
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// Ranks in degrees 0 and up.
    pub fn positive_ranks(&self) -> Vec<u64> {
        self.ranks.iter().skip(1).copied().collect()
    }

    /// Sum of `(-1)^i rank(i)` over all degrees, starting at -1.
    pub fn alternating_sum(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(idx, &r)| {
                // idx 0 is degree -1
                let sign = if idx % 2 == 0 { -1 } else { 1 };
                sign * r as i64
            })
            .sum()
    }
}
