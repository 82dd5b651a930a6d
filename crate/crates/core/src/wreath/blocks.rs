use crate::linalg::{ExactMatrix, Rational};
use crate::terwilliger::TerwilligerAlgebra;

use super::check::{ensure, Check, CheckName};
use super::primary::g_basis;

/// Points of `X` reordered by subconstituent `R_0(x), R_1(x), ..., R_d(x)`,
/// stable within each subconstituent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockForm {
    /// `order[p]` is the original point placed at position `p`.
    pub order: Vec<usize>,
    /// `sizes[i] = k_i`.
    pub sizes: Vec<usize>,
    pub offsets: Vec<usize>,
    pub checks: Vec<Check>,
}

impl BlockForm {
    /// `P M P^T` for the reordering `P`.
    pub fn reorder(&self, m: &ExactMatrix) -> ExactMatrix {
        m.select(&self.order, &self.order)
    }

    /// The `(i, h)` block of the reordered `m`.
    pub fn block(&self, m: &ExactMatrix, i: usize, h: usize) -> ExactMatrix {
        let r = &self.order[self.offsets[i]..self.offsets[i] + self.sizes[i]];
        let c = &self.order[self.offsets[h]..self.offsets[h] + self.sizes[h]];
        m.select(r, c)
    }
}

/// Computes the subconstituent ordering and checks the block shapes of the
/// `A_j` and the `G_ij`.
pub fn block_form(t: &TerwilligerAlgebra) -> BlockForm {
    let s = t.scheme();
    let x = t.base_point();
    let d = t.classes();
    let mut order: Vec<usize> = (0..t.order()).collect();
    order.sort_by_key(|&y| s.relation(x, y));
    let sizes: Vec<usize> = (0..=d).map(|i| s.subconstituent(x, i).len()).collect();
    let offsets: Vec<usize> =
        sizes.iter().scan(0, |acc, &k| { let o = *acc; *acc += k; Some(o) }).collect();
    let mut form = BlockForm { order, sizes, offsets, checks: Vec::new() };
    let ks: Vec<u64> = (0..=d).map(|i| t.k(i)).collect();

    let adjacency = Check::run(CheckName::BlockAdjacency, || {
        for j in 0..=d {
            let a = t.a(j);
            for i in 0..=d {
                for h in 0..=d {
                    let b = form.block(a, i, h);
                    let (ki, kh) = (form.sizes[i], form.sizes[h]);
                    if i != h {
                        let expected = if i.max(h) == j {
                            ExactMatrix::ones(ki, kh)
                        } else {
                            ExactMatrix::zeros(ki, kh)
                        };
                        ensure!(b == expected, "A_{j}: block ({i}, {h})");
                    } else if i < j {
                        ensure!(b.is_zero(), "A_{j}: diagonal block ({i}, {i}) is nonzero");
                    } else {
                        let prefix: u64 = ks[..j].iter().sum();
                        let row = if i == j { ks[j] - prefix.min(ks[j]) } else { ks[j] };
                        for y in 0..ki {
                            ensure!(b.row_sum(y) == Rational::from(row), "A_{j}: block ({i}, {i}) row {y} sum");
                        }
                    }
                }
            }
        }
        Ok(())
    });

    let pb = g_basis(t);
    let primary = Check::run(CheckName::BlockPrimary, || {
        for i in 0..=d {
            for j in 0..=d {
                let g = &pb.g[i][j];
                for r in 0..=d {
                    for c in 0..=d {
                        let b = form.block(g, r, c);
                        let expected = if (r, c) == (i, j) {
                            ExactMatrix::ones(form.sizes[i], form.sizes[j]).scale(&Rational::new(1, ks[j] as i64))
                        } else {
                            ExactMatrix::zeros(form.sizes[r], form.sizes[c])
                        };
                        ensure!(b == expected, "G_{i}{j}: block ({r}, {c})");
                    }
                }
            }
        }
        Ok(())
    });
    form.checks = vec![adjacency, primary];
    form
}
