//! Bitmask subsets of a small index ground set.
//!
//! Index sets over at most [`MAX_GROUND`] elements are stored as `u64`
//! masks with bit `i` standing for index `i`.

/// Largest supported ground set; keeps every power-set scan desk-sized.
pub(crate) const MAX_GROUND: usize = 20;

pub(crate) type Mask = u64;

pub(crate) fn mask_from_indices(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub(crate) fn indices_from_mask(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize).filter(|i| mask >> i & 1 == 1).collect()
}

pub(crate) fn is_submask(sub: Mask, of: Mask) -> bool {
    sub & !of == 0
}

pub(crate) fn full_mask(len: usize) -> Mask {
    if len == 0 {
        0
    } else {
        Mask::MAX >> (Mask::BITS as usize - len)
    }
}

/// Keep the inclusion-minimal masks, deduplicated.
pub(crate) fn minimal_masks(masks: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = Vec::new();
    for &m in masks {
        if masks.iter().any(|&o| o != m && is_submask(o, m)) {
            continue;
        }
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Keep the inclusion-maximal masks, deduplicated.
pub(crate) fn maximal_masks(masks: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = Vec::new();
    for &m in masks {
        if masks.iter().any(|&o| o != m && is_submask(m, o)) {
            continue;
        }
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Sort by cardinality, then lexicographically on the sorted index list.
pub(crate) fn sort_by_size_then_lex(masks: &mut [Mask]) {
    masks.sort_by_key(|&m| (m.count_ones(), indices_from_mask(m)));
}
