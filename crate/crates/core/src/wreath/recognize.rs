use crate::scheme::{AssociationScheme, IntersectionTensor};

use super::params::WreathParams;

/// Largest number of class orderings tried within valency ties.
const MAX_ORDERINGS: usize = 40_320;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    /// The scheme is `K_{n_1} wr ... wr K_{n_d}`; `class_order[c]` is the
    /// original class that plays the role of class `c`.
    Wreath { params: WreathParams, class_order: Vec<usize> },
    /// No class ordering satisfies `A_i A_j = k_i A_j` for all `i < j`.
    /// The witness is a violating pair `(i, j)` of original classes under
    /// the valency-sorted ordering.
    NotWreath { witness: Option<(usize, usize)> },
}

impl Recognition {
    pub fn params(&self) -> Option<&WreathParams> {
        match self {
            Recognition::Wreath { params, .. } => Some(params),
            Recognition::NotWreath { .. } => None,
        }
    }
}

/// First pair `i < j` (new labels) with `A_i A_j != k_i A_j`, read off the
/// intersection numbers: the condition is `p_ij^h = k_i [h = j]` for all `h`.
fn violation(p: &IntersectionTensor) -> Option<(usize, usize)> {
    let d = p.classes();
    for i in 1..=d {
        let ki = p.valency(i);
        for j in i + 1..=d {
            if (0..=d).any(|h| p.get(i, j, h) != if h == j { ki } else { 0 }) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Advances `order` to the next ordering that permutes classes only within
/// each tie group; `false` once every combination has been visited.
fn next_within_groups(order: &mut [usize], groups: &[(usize, usize)]) -> bool {
    for &(start, end) in groups.iter().rev() {
        if next_permutation(&mut order[start..end]) {
            return true;
        }
    }
    false
}

/// Lexicographic successor; on the last permutation resets to sorted and returns `false`.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        xs.sort_unstable();
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("successor exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Decides whether `s` is an iterated wreath product of complete schemes and
/// recovers the factors `n_i = k_i / (k_0 + ... + k_{i-1}) + 1`.
pub fn recognize(s: &AssociationScheme) -> Recognition {
    let d = s.classes();
    if d == 0 {
        return Recognition::NotWreath { witness: None };
    }
    let tensor = s.intersection_tensor();
    let mut order: Vec<usize> = (0..=d).collect();
    order[1..].sort_by_key(|&c| (tensor.valency(c), c));

    let mut groups = Vec::new();
    let mut start = 1;
    for c in 2..=d + 1 {
        if c == d + 1 || tensor.valency(order[c]) != tensor.valency(order[start]) {
            if c - start > 1 {
                groups.push((start, c));
            }
            start = c;
        }
    }

    let mut first_witness = None;
    for _ in 0..MAX_ORDERINGS {
        match violation(&tensor.relabel(&order)) {
            None => {
                let ks: Vec<u64> = order.iter().map(|&c| tensor.valency(c)).collect();
                if let Some(params) = WreathParams::from_valencies(&ks) {
                    return Recognition::Wreath { params, class_order: order };
                }
            }
            Some((i, j)) => {
                first_witness.get_or_insert((order[i], order[j]));
            }
        }
        if !next_within_groups(&mut order, &groups) {
            break;
        }
    }
    Recognition::NotWreath { witness: first_witness }
}
