//! Squarefree monomial ideals attached to a fan: the Stanley-Reisner and
//! irrelevant ideals, Alexander duality, fine-graded Hilbert values, and
//! multigraded Tor via Hochster's formula.

use std::fmt;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::homology::Complex;
use crate::subsets::{
    full_mask, indices_from_mask, is_submask, mask_from_indices, minimal_masks,
    sort_by_size_then_lex, Mask, MAX_GROUND,
};

/// A squarefree monomial ideal, stored as the antichain of supports of its
/// minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    num_vars: usize,
    gens: Vec<Mask>,
}

impl SquarefreeIdeal {
    /// Build an ideal from generator supports (0-based variable indices);
    /// non-minimal generators are dropped and the rest put in canonical
    /// order (size, then lexicographic).
    pub fn new(num_vars: usize, gens: &[Vec<usize>]) -> Result<Self> {
        if num_vars > MAX_GROUND {
            return Err(Error::TooManyRays {
                got: num_vars,
                max: MAX_GROUND,
            });
        }
        let mut masks = Vec::with_capacity(gens.len());
        for gen in gens {
            for &v in gen {
                if v >= num_vars {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        count: num_vars,
                    });
                }
            }
            masks.push(mask_from_indices(gen));
        }
        Ok(Self::from_masks(num_vars, &masks))
    }

    pub(crate) fn from_masks(num_vars: usize, masks: &[Mask]) -> Self {
        let mut gens = minimal_masks(masks);
        sort_by_size_then_lex(&mut gens);
        Self { num_vars, gens }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Minimal generator supports as sorted index lists, in canonical order.
    pub fn generators(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|&m| indices_from_mask(m)).collect()
    }

    /// Whether the squarefree monomial with the given support lies in the
    /// ideal.
    pub(crate) fn contains_mask(&self, mask: Mask) -> bool {
        self.gens.iter().any(|&g| is_submask(g, mask))
    }

    /// The Alexander dual: the ideal generated by the minimal transversals
    /// (minimal hitting sets) of this ideal's generator supports. Applying
    /// it twice returns the original ideal.
    pub fn alexander_dual(&self) -> Result<SquarefreeIdeal> {
        if self.num_vars == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut found = Vec::new();
        branch_transversals(&self.gens, 0, 0, &mut found);
        Ok(Self::from_masks(self.num_vars, &found))
    }

    /// The simplicial complex whose faces are the squarefree monomials
    /// outside the ideal.
    pub fn stanley_reisner_complex(&self) -> Complex {
        let full = full_mask(self.num_vars);
        let mut facets = Vec::new();
        for mask in 0..=full {
            if self.contains_mask(mask) {
                continue;
            }
            let is_facet = (0..self.num_vars)
                .all(|v| mask >> v & 1 == 1 || self.contains_mask(mask | (1 << v)));
            if is_facet {
                facets.push(mask);
            }
        }
        Complex::from_facet_masks(self.num_vars, &facets)
    }
}

/// Enumerate transversals by branching over the vertices of each
/// generator in turn; supersets of other candidates are pruned afterwards
/// by the antichain reduction in `from_masks`.
fn branch_transversals(gens: &[Mask], idx: usize, current: Mask, out: &mut Vec<Mask>) {
    if idx == gens.len() {
        out.push(current);
        return;
    }
    if current & gens[idx] != 0 {
        branch_transversals(gens, idx + 1, current, out);
        return;
    }
    for v in indices_from_mask(gens[idx]) {
        branch_transversals(gens, idx + 1, current | (1 << v), out);
    }
}

/// A weight in `{0,1}^d`, the squarefree degrees of the fine grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FineWeight {
    mask: Mask,
    len: usize,
}

impl FineWeight {
    /// Build from a coordinate vector whose entries must be 0 or 1.
    pub fn new(coords: &[i64]) -> Result<Self> {
        let mut mask = 0;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << i,
                other => {
                    return Err(Error::WeightEntry {
                        position: i,
                        value: other,
                    })
                }
            }
        }
        Ok(Self {
            mask,
            len: coords.len(),
        })
    }

    pub fn from_support(support: &[usize], len: usize) -> Result<Self> {
        for &v in support {
            if v >= len {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    count: len,
                });
            }
        }
        Ok(Self {
            mask: mask_from_indices(support),
            len,
        })
    }

    pub(crate) fn from_mask(mask: Mask, len: usize) -> Self {
        Self { mask, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinate sum `|m|`.
    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        indices_from_mask(self.mask)
    }

    pub(crate) fn support_mask(&self) -> Mask {
        self.mask
    }

    /// The weight `1 - m`.
    pub fn complement(&self) -> FineWeight {
        Self {
            mask: full_mask(self.len) & !self.mask,
            len: self.len,
        }
    }

    pub fn coords(&self) -> Vec<i64> {
        (0..self.len)
            .map(|i| (self.mask >> i & 1) as i64)
            .collect()
    }
}

impl fmt::Display for FineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The Stanley-Reisner ideal of the fan: generators are the minimal
/// nonfaces of the face complex.
pub fn stanley_reisner(fan: &Fan) -> SquarefreeIdeal {
    let complex = fan.face_complex();
    let d = fan.ray_count();
    let full = full_mask(d);
    let mut gens = Vec::new();
    for mask in 1..=full {
        if complex.contains_mask(mask) {
            continue;
        }
        let minimal = indices_from_mask(mask)
            .into_iter()
            .all(|v| complex.contains_mask(mask & !(1 << v)));
        if minimal {
            gens.push(mask);
        }
    }
    SquarefreeIdeal::from_masks(d, &gens)
}

/// The irrelevant ideal of the fan: generated by the monomials supported
/// on the complements of the maximal cones.
pub fn irrelevant_ideal(fan: &Fan) -> SquarefreeIdeal {
    let full = full_mask(fan.ray_count());
    let gens: Vec<Mask> = fan.cone_masks().iter().map(|&c| full & !c).collect();
    SquarefreeIdeal::from_masks(fan.ray_count(), &gens)
}

/// The fine-graded Hilbert value of the Stanley-Reisner quotient at a
/// squarefree degree: 1 when the support of the weight is a face of the
/// fan, 0 otherwise.
pub fn sr_dim(fan: &Fan, weight: &FineWeight) -> u64 {
    assert_eq!(
        weight.len(),
        fan.ray_count(),
        "weight length must match the ray count"
    );
    u64::from(fan.face_complex().contains_mask(weight.support_mask()))
}

/// Multigraded Betti number `dim Tor_i(S/I, K)` at a squarefree degree,
/// computed through Hochster's formula as the reduced cohomology rank of
/// an induced subcomplex of the ideal's Stanley-Reisner complex.
///
/// This uses the quotient convention: for the ideal itself,
/// `Tor_i(I, K) = Tor_{i+1}(S/I, K)`, so callers working with the ideal
/// as a module shift the homological index by one.
pub fn tor_dim(ideal: &SquarefreeIdeal, i: usize, weight: &FineWeight) -> u64 {
    assert_eq!(
        weight.len(),
        ideal.num_vars(),
        "weight length must match the variable count"
    );
    let degree = weight.weight() as isize - i as isize - 1;
    if degree < -1 {
        return 0;
    }
    let complex = ideal.stanley_reisner_complex();
    let restricted = complex.induced_mask(weight.support_mask());
    restricted.reduced_betti().rank(degree)
}

/// Generators and linear forms presenting the rational Chow ring: the
/// Stanley-Reisner generators together with one linear form per lattice
/// coordinate, whose coefficient on the variable of ray `rho` is that
/// ray's coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowPresentation {
    pub sr_generators: Vec<Vec<usize>>,
    pub linear_forms: Vec<Vec<i64>>,
}

pub fn chow_presentation(fan: &Fan) -> ChowPresentation {
    let linear_forms = (0..fan.dim())
        .map(|i| fan.rays().iter().map(|ray| ray[i]).collect())
        .collect();
    ChowPresentation {
        sr_generators: stanley_reisner(fan).generators(),
        linear_forms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(coords: &[i64]) -> FineWeight {
        FineWeight::new(coords).unwrap()
    }

    #[test]
    fn stanley_reisner_of_hirzebruch2() {
        let ideal = stanley_reisner(&library::hirzebruch(2));
        assert_eq!(ideal.generators(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn stanley_reisner_of_projective_plane() {
        let ideal = stanley_reisner(&library::projective_plane());
        assert_eq!(ideal.generators(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn stanley_reisner_of_p1xp1_is_antipodal_pairs() {
        let ideal = stanley_reisner(&library::p1_x_p1());
        assert_eq!(ideal.generators(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn irrelevant_ideal_of_hirzebruch2() {
        let ideal = irrelevant_ideal(&library::hirzebruch(2));
        assert_eq!(
            ideal.generators(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn irrelevant_ideal_of_projective_spaces() {
        let p2 = irrelevant_ideal(&library::projective_plane());
        assert_eq!(p2.generators(), vec![vec![0], vec![1], vec![2]]);
        let p3 = irrelevant_ideal(&library::projective_3space());
        assert_eq!(
            p3.generators(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn alexander_dual_golden_cases() {
        let two_pairs = SquarefreeIdeal::new(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(
            two_pairs.alexander_dual().unwrap().generators(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );

        let principal = SquarefreeIdeal::new(1, &[vec![0]]).unwrap();
        assert_eq!(
            principal.alexander_dual().unwrap().generators(),
            vec![vec![0]]
        );

        let triple = SquarefreeIdeal::new(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(
            triple.alexander_dual().unwrap().generators(),
            vec![vec![0], vec![1], vec![2]]
        );

        let empty = SquarefreeIdeal::new(0, &[]).unwrap();
        assert_eq!(empty.alexander_dual(), Err(Error::EmptyAmbient));
    }

    #[test]
    fn alexander_dual_involution_on_random_antichains() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1);
        for _ in 0..80 {
            let d = rng.gen_range(1..=8);
            let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=5))
                .map(|_| {
                    let size = rng.gen_range(1..=d);
                    let mut g: Vec<usize> = (0..size).map(|_| rng.gen_range(0..d)).collect();
                    g.sort_unstable();
                    g.dedup();
                    g
                })
                .collect();
            let ideal = SquarefreeIdeal::new(d, &gens).unwrap();
            let double = ideal.alexander_dual().unwrap().alexander_dual().unwrap();
            assert_eq!(double, ideal);
        }
    }

    #[test]
    fn dual_of_stanley_reisner_is_irrelevant_on_library() {
        for (name, fan) in library::all() {
            let sr = stanley_reisner(&fan);
            let irr = irrelevant_ideal(&fan);
            assert_eq!(sr.alexander_dual().unwrap(), irr, "{name}");
            assert_eq!(irr.alexander_dual().unwrap(), sr, "{name}");
        }
    }

    #[test]
    fn sr_dim_on_hirzebruch2() {
        let fan = library::hirzebruch(2);
        assert_eq!(sr_dim(&fan, &w(&[1, 0, 1, 0])), 0);
        assert_eq!(sr_dim(&fan, &w(&[0, 0, 1, 0])), 1);
        assert_eq!(sr_dim(&fan, &w(&[0, 0, 0, 0])), 1);
    }

    #[test]
    fn sr_dim_agrees_with_face_membership() {
        for (_, fan) in library::all() {
            let complex = fan.face_complex();
            let d = fan.ray_count();
            for mask in 0..1u64 << d {
                let weight = FineWeight::from_mask(mask, d);
                assert_eq!(
                    sr_dim(&fan, &weight),
                    u64::from(complex.contains_mask(mask))
                );
            }
        }
    }

    #[test]
    fn tor_dims_of_hirzebruch2_stanley_reisner() {
        let ideal = stanley_reisner(&library::hirzebruch(2));
        assert_eq!(tor_dim(&ideal, 2, &w(&[1, 1, 1, 1])), 1);
        assert_eq!(tor_dim(&ideal, 1, &w(&[1, 0, 1, 0])), 1);
        assert_eq!(tor_dim(&ideal, 1, &w(&[0, 1, 0, 1])), 1);
        assert_eq!(tor_dim(&ideal, 0, &w(&[0, 0, 0, 0])), 1);
        assert_eq!(tor_dim(&ideal, 1, &w(&[1, 1, 0, 0])), 0);
        assert_eq!(tor_dim(&ideal, 3, &w(&[1, 1, 1, 1])), 0);
    }

    #[test]
    fn tor_at_index_zero_vanishes_except_at_zero() {
        for (_, fan) in library::all() {
            let ideal = stanley_reisner(&fan);
            let d = fan.ray_count();
            for mask in 0..1u64 << d {
                let expected = u64::from(mask == 0);
                assert_eq!(tor_dim(&ideal, 0, &FineWeight::from_mask(mask, d)), expected);
            }
        }
    }

    #[test]
    fn top_tor_of_stanley_reisner_is_one_on_library() {
        for (name, fan) in library::all() {
            let ideal = stanley_reisner(&fan);
            let d = fan.ray_count();
            let n = fan.dim();
            let ones = FineWeight::from_mask(full_mask(d), d);
            assert_eq!(tor_dim(&ideal, d - n, &ones), 1, "{name}");
        }
    }

    #[test]
    fn chow_presentations() {
        let h2 = chow_presentation(&library::hirzebruch(2));
        assert_eq!(h2.sr_generators, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(h2.linear_forms, vec![vec![1, 0, -1, 0], vec![0, 1, 2, -1]]);

        let p2 = chow_presentation(&library::projective_plane());
        assert_eq!(p2.sr_generators, vec![vec![0, 1, 2]]);
        assert_eq!(p2.linear_forms, vec![vec![1, 0, -1], vec![0, 1, -1]]);

        let p1 = crate::fan::Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap();
        let pres = chow_presentation(&p1);
        assert_eq!(pres.sr_generators, vec![vec![0, 1]]);
        assert_eq!(pres.linear_forms, vec![vec![1, -1]]);
    }

    #[test]
    fn fine_weight_basics() {
        let weight = w(&[1, 0, 1, 1]);
        assert_eq!(weight.weight(), 3);
        assert_eq!(weight.support(), vec![0, 2, 3]);
        assert_eq!(weight.complement().coords(), vec![0, 1, 0, 0]);
        assert_eq!(weight.to_string(), "(1,0,1,1)");
        assert_eq!(
            FineWeight::new(&[0, 2]),
            Err(Error::WeightEntry {
                position: 1,
                value: 2
            })
        );
    }
}
