use crate::linalg::{span_basis, ExactMatrix, Rational, SpanBasis};
use crate::terwilliger::TerwilligerAlgebra;

use super::check::{ensure, Check, CheckName};

/// The matrix units `G_ij` and their span, the primary ideal `U`.
#[derive(Debug, Clone)]
pub struct PrimaryBasis {
    /// `g[i][j] = G_ij`.
    pub g: Vec<Vec<ExactMatrix>>,
    pub span: SpanBasis,
}

impl PrimaryBasis {
    /// All `G_ij` in row-major index order.
    pub fn matrices(&self) -> impl Iterator<Item = &ExactMatrix> {
        self.g.iter().flatten()
    }
}

/// `G_ij = k_j^{-1} E_i* A_j E_j*` for `i < j`, `k_j^{-1} E_i* A_i E_j*` for
/// `i > j` and `k_i^{-1} E_i* J E_i*` on the diagonal.
pub fn g_basis(t: &TerwilligerAlgebra) -> PrimaryBasis {
    let d = t.classes();
    let j = t.j();
    let g: Vec<Vec<ExactMatrix>> = (0..=d)
        .map(|a| {
            (0..=d)
                .map(|b| {
                    let inv = Rational::new(1, t.k(b) as i64);
                    let m = if a < b {
                        t.triple(a, b, b)
                    } else if a > b {
                        t.triple(a, a, b)
                    } else {
                        &(t.e(a) * &j) * t.e(a)
                    };
                    m.scale(&inv)
                })
                .collect()
        })
        .collect();
    let all: Vec<ExactMatrix> = g.iter().flatten().cloned().collect();
    let span = span_basis(&all).expect("square matrices of one shape");
    PrimaryBasis { g, span }
}

/// Checks that `U` is a full matrix algebra and an ideal of `T(x)` with
/// commutative quotient, and the explicit actions of `A_h` and `E_h*` on `G_ij`.
pub fn verify_primary_ideal(t: &TerwilligerAlgebra, pb: &PrimaryBasis) -> Vec<Check> {
    let d = t.classes();
    let n = d + 1;
    let v = t.order();
    let g = &pb.g;
    let ks: Vec<Rational> = (0..=d).map(|i| Rational::from(t.k(i))).collect();
    let zero = ExactMatrix::zeros(v, v);
    let mut checks = Vec::new();

    checks.push(Check::run(CheckName::PrimaryDimension, || {
        ensure!(pb.span.dim() == n * n, "dim U = {}, expected {}", pb.span.dim(), n * n);
        for (i, row) in g.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                ensure!(t.in_algebra(m), "G_{i}{j} is not in T(x)");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::MatrixUnits, || {
        for i in 0..n {
            for j in 0..n {
                for a in 0..n {
                    for h in 0..n {
                        let expected = if j == a { &g[i][h] } else { &zero };
                        ensure!(&(&g[i][j] * &g[a][h]) == expected, "G_{i}{j} G_{a}{h}");
                    }
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::PrimaryUnit, || {
        let unit = (1..n).fold(g[0][0].clone(), |acc, i| &acc + &g[i][i]);
        for (i, row) in g.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                ensure!(&(&unit * m) == m && &(m * &unit) == m, "identity of U fails on G_{i}{j}");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::PrimaryAbsorption, || {
        for h in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if h < i {
                        let lhs = t.a(h) * &g[i][j];
                        ensure!(lhs == &t.triple(i, h, i) * &g[i][j], "A_{h} G_{i}{j}");
                    }
                    if h < j {
                        let lhs = &g[i][j] * t.a(h);
                        ensure!(lhs == &g[i][j] * &t.triple(j, h, j), "G_{i}{j} A_{h}");
                    }
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::PrimaryAction, || {
        for h in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let left = if h < i {
                        g[i][j].scale(&ks[h])
                    } else if h == i {
                        let below: Rational = ks[..i].iter().cloned().sum();
                        let mut m = g[i][j].scale(&(&ks[i] - &below));
                        for r in 0..i {
                            m = &m + &g[r][j].scale(&ks[i]);
                        }
                        m
                    } else {
                        g[h][j].scale(&ks[i])
                    };
                    ensure!(t.a(h) * &g[i][j] == left, "A_{h} G_{i}{j}");
                    let right = if h < j {
                        g[i][j].scale(&ks[h])
                    } else if h == j {
                        let below: Rational = ks[..j].iter().cloned().sum();
                        let mut m = g[i][j].scale(&(&ks[j] - &below));
                        for r in 0..j {
                            m = &m + &g[i][r].scale(&ks[r]);
                        }
                        m
                    } else {
                        g[i][h].scale(&ks[h])
                    };
                    ensure!(&g[i][j] * t.a(h) == right, "G_{i}{j} A_{h}");
                    let el = if h == i { &g[i][j] } else { &zero };
                    ensure!(&(t.e(h) * &g[i][j]) == el, "E_{h}* G_{i}{j}");
                    let er = if h == j { &g[i][j] } else { &zero };
                    ensure!(&(&g[i][j] * t.e(h)) == er, "G_{i}{j} E_{h}*");
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::PrimaryIdeal, || match t.is_ideal(&pb.span) {
        Ok(true) => Ok(()),
        Ok(false) => Err("U is not closed under multiplication by T(x)".into()),
        Err(e) => Err(e.to_string()),
    }));

    checks.push(Check::run(CheckName::QuotientCommutative, || match t.quotient_is_commutative(&pb.span) {
        Ok(true) => Ok(()),
        Ok(false) => Err("T(x)/U is not commutative".into()),
        Err(e) => Err(e.to_string()),
    }));

    checks
}
