use crate::linalg::{ExactMatrix, Rational};
use crate::terwilliger::TerwilligerAlgebra;

use super::check::{ensure, Check, CheckName};

/// `sum_{j<=h} E_i* A_j E_i*`.
pub(crate) fn diagonal_partial_sum(t: &TerwilligerAlgebra, i: usize, h: usize) -> ExactMatrix {
    (1..=h).fold(t.triple(i, 0, i), |acc, j| &acc + &t.triple(i, j, i))
}

/// Checks the identities between triple products on a wreath product of
/// complete schemes, over every index tuple.
pub fn verify_subconstituents(t: &TerwilligerAlgebra) -> Vec<Check> {
    let d = t.classes();
    let n = d + 1;
    let s = t.scheme();
    let ks: Vec<Rational> = (0..n).map(|i| Rational::from(t.k(i))).collect();
    let big_k = |h: usize| ks[..=h].iter().cloned().sum::<Rational>();
    let triples: Vec<Vec<Vec<ExactMatrix>>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|h| t.triple(i, j, h)).collect()).collect())
        .collect();
    let tp = |i: usize, j: usize, h: usize| &triples[i][j][h];
    let mut checks = Vec::new();

    checks.push(Check::run(CheckName::TripleProductZeros, || {
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    let zero = tp(i, j, h).is_zero();
                    let p = s.intersection_number(i, j, h);
                    ensure!(zero == (p == 0), "E_{i}* A_{j} E_{h}* zero = {zero} but p = {p}");
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::NonzeroPattern, || {
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    if i != j {
                        ensure!(!tp(i, j, h).is_zero() == (h == i.max(j)), "({i}, {j}, {h}): nonzero iff h = max");
                    }
                    if i < j {
                        ensure!(!tp(i, h, j).is_zero() == (h == j), "({i}, {h}, {j}): nonzero iff middle = {j}");
                    }
                    if h > i {
                        ensure!(tp(i, i, h).is_zero(), "E_{i}* A_{i} E_{h}* != 0");
                    }
                    if h < j {
                        ensure!(!tp(i, h, j).is_zero() == (i == j), "({i}, {h}, {j}): nonzero iff i = j");
                    }
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::SubconstituentIdentities, || {
        let j_all = t.j();
        for i in 0..n {
            for j in i + 1..n {
                ensure!(*tp(i, j, j) == t.e(i) * t.a(j), "E_{i}* A_{j} E_{j}* != E_{i}* A_{j}");
                ensure!(*tp(j, j, i) == t.a(j) * t.e(i), "E_{j}* A_{j} E_{i}* != A_{j} E_{i}*");
                ensure!(*tp(j, i, j) == t.a(i) * t.e(j), "E_{j}* A_{i} E_{j}* != A_{i} E_{j}*");
                ensure!(*tp(i, j, j) == &(t.e(i) * &j_all) * t.e(j), "E_{i}* A_{j} E_{j}* != E_{i}* J E_{j}*");
            }
            let diag = (1..=i).fold(tp(i, 0, i).clone(), |acc, g| &acc + tp(i, g, i));
            ensure!(diag == &(t.e(i) * &j_all) * t.e(i), "E_{i}* J E_{i}* differs");
            let lower = (1..=i).fold(t.e(0).clone(), |acc, g| &acc + t.e(g));
            let ai_ei = t.a(i) * t.e(i);
            ensure!(ai_ei == &lower * &ai_ei, "A_{i} E_{i}* is not absorbed on the left");
            let ei_ai = t.e(i) * t.a(i);
            ensure!(ei_ai == &ei_ai * &lower, "E_{i}* A_{i} is not absorbed on the right");
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::SubconstituentProducts, || {
        for i in 0..n {
            for g in 0..=i {
                for h in 0..=i {
                    if g == i && h == i {
                        continue;
                    }
                    let lhs = tp(i, g, i) * tp(i, h, i);
                    let rhs = &(t.e(i) * &(t.a(g) * t.a(h))) * t.e(i);
                    ensure!(lhs == rhs, "(E_{i}* A_{g} E_{i}*)(E_{i}* A_{h} E_{i}*)");
                }
            }
        }
        Ok(())
    }));

    let sums: Vec<Vec<ExactMatrix>> =
        (0..n).map(|i| (0..i).map(|h| diagonal_partial_sum(t, i, h)).collect()).collect();

    checks.push(Check::run(CheckName::PartialSumIdempotent, || {
        for (i, row) in sums.iter().enumerate() {
            for (h, sh) in row.iter().enumerate() {
                ensure!(sh * sh == sh.scale(&big_k(h)), "partial sum ({i}, {h}) squared");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::PartialSumAction, || {
        for (i, row) in sums.iter().enumerate() {
            for (h, sh) in row.iter().enumerate() {
                let kh = big_k(h);
                for g in 0..n {
                    let (left, right) = if g <= h {
                        (sh.scale(&ks[g]), sh.scale(&ks[g]))
                    } else if g < i {
                        (tp(i, g, i).scale(&kh), tp(i, g, i).scale(&kh))
                    } else if g == i {
                        ((t.a(i) * t.e(i)).scale(&kh), (t.e(i) * t.a(i)).scale(&kh))
                    } else {
                        (tp(g, g, i).scale(&kh), tp(i, g, g).scale(&kh))
                    };
                    ensure!(t.a(g) * sh == left, "A_{g} times partial sum ({i}, {h})");
                    ensure!(sh * t.a(g) == right, "partial sum ({i}, {h}) times A_{g}");
                }
            }
        }
        Ok(())
    }));

    checks
}
