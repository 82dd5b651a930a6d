use std::collections::HashMap;

use super::AssociationScheme;

/// Two point triples of the same relation type whose triple intersection
/// counts differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    /// `(i, j, h)`: the count is `|R_i(y) ∩ R_j(z) ∩ R_h(w)|`.
    pub counted: (usize, usize, usize),
    /// `(l, m, n)` with `(y, z) in R_l`, `(y, w) in R_m`, `(z, w) in R_n`.
    pub relation_type: (usize, usize, usize),
    pub first: (usize, usize, usize),
    pub first_count: usize,
    pub second: (usize, usize, usize),
    pub second_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleRegularityReport {
    pub is_triply_regular: bool,
    /// Present exactly when the scheme is not triply regular.
    pub witness: Option<TripleWitness>,
}

/// For every triple `(y, z, w)`, histograms `u -> (rel(y,u), rel(z,u), rel(w,u))`
/// and compares it with the first triple seen of the same relation type.
pub(super) fn triple_regularity(s: &AssociationScheme) -> TripleRegularityReport {
    let v = s.order();
    let n = s.classes() + 1;
    let mut seen: HashMap<(usize, usize, usize), ((usize, usize, usize), Vec<usize>)> =
        HashMap::new();
    let mut counts = vec![0usize; n * n * n];
    for y in 0..v {
        for z in 0..v {
            for w in 0..v {
                counts.iter_mut().for_each(|c| *c = 0);
                for u in 0..v {
                    counts[(s.relation(y, u) * n + s.relation(z, u)) * n + s.relation(w, u)] += 1;
                }
                let key = (s.relation(y, z), s.relation(y, w), s.relation(z, w));
                match seen.get(&key) {
                    None => {
                        seen.insert(key, ((y, z, w), counts.clone()));
                    }
                    Some((first, reference)) => {
                        if let Some(idx) = (0..counts.len()).find(|&k| counts[k] != reference[k]) {
                            let witness = TripleWitness {
                                counted: (idx / (n * n), (idx / n) % n, idx % n),
                                relation_type: key,
                                first: *first,
                                first_count: reference[idx],
                                second: (y, z, w),
                                second_count: counts[idx],
                            };
                            return TripleRegularityReport {
                                is_triply_regular: false,
                                witness: Some(witness),
                            };
                        }
                    }
                }
            }
        }
    }
    TripleRegularityReport { is_triply_regular: true, witness: None }
}
