use std::collections::BTreeMap;

use crate::linalg::{span_basis_of_shape, ExactMatrix, Rational};
use crate::terwilliger::TerwilligerAlgebra;

use super::check::{ensure, Check, CheckName};
use super::subconstituents::diagonal_partial_sum;
use super::primary::{g_basis, PrimaryBasis};

/// The matrices `F_ih` for `1 <= i <= d`, `0 <= h <= i - 1`.
#[derive(Debug, Clone)]
pub struct CentralIdempotentSet {
    pub f: BTreeMap<(usize, usize), ExactMatrix>,
    pub nonzero_count: usize,
}

impl CentralIdempotentSet {
    /// The nonzero `F_ih` with their indices, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &ExactMatrix)> {
        self.f.iter().filter(|(_, m)| !m.is_zero())
    }
}

/// With `S_h = sum_{j<=h} E_i* A_j E_i*` and `K_h = k_0 + ... + k_h`:
/// `F_ih = S_h / K_h - S_{h+1} / K_{h+1}` for `h < i - 1` and
/// `F_{i,i-1} = S_{i-1} / K_{i-1} - G_ii`.
pub fn f_idempotents(t: &TerwilligerAlgebra) -> CentralIdempotentSet {
    let d = t.classes();
    let big_k: Vec<u64> = (0..=d).scan(0, |acc, i| { *acc += t.k(i); Some(*acc) }).collect();
    let pb = g_basis(t);
    let mut f = BTreeMap::new();
    for i in 1..=d {
        let normalized: Vec<ExactMatrix> = (0..i)
            .map(|h| diagonal_partial_sum(t, i, h).scale(&Rational::new(1, big_k[h] as i64)))
            .collect();
        for h in 0..i {
            let next = if h + 1 < i { &normalized[h + 1] } else { &pb.g[i][i] };
            f.insert((i, h), &normalized[h] - next);
        }
    }
    let nonzero_count = f.values().filter(|m| !m.is_zero()).count();
    CentralIdempotentSet { f, nonzero_count }
}

/// Checks that the nonzero `F_ih` are orthogonal central idempotents
/// complementing the primary ideal in `T(x)`.
pub fn verify_f(t: &TerwilligerAlgebra, fs: &CentralIdempotentSet, pb: &PrimaryBasis) -> Vec<Check> {
    let d = t.classes();
    let v = t.order();
    let ks: Vec<u64> = (0..=d).map(|i| t.k(i)).collect();
    let nonzero: Vec<(&(usize, usize), &ExactMatrix)> = fs.nonzero().collect();
    let mut checks = Vec::new();

    checks.push(Check::run(CheckName::CentralCount, || {
        let mut below = 0u64;
        let mut twos = 0;
        for i in 1..=d {
            below += ks[i - 1];
            ensure!(ks[i] % below == 0, "k_{i} is not divisible by k_0 + ... + k_{}", i - 1);
            let n_i = ks[i] / below + 1;
            if n_i == 2 {
                twos += 1;
            }
            for h in 0..i {
                let zero = fs.f[&(i, h)].is_zero();
                let expected = h + 1 == i && n_i == 2;
                ensure!(zero == expected, "F_{i}{h} zero = {zero} with n_{i} = {n_i}");
            }
        }
        let expected = d * (d + 1) / 2 - twos;
        ensure!(fs.nonzero_count == expected, "{} nonzero, expected {expected}", fs.nonzero_count);
        ensure!(nonzero.len() == fs.nonzero_count, "nonzero_count is stale");
        Ok(())
    }));

    checks.push(Check::run(CheckName::CentralIdempotent, || {
        for ((i, h), m) in &nonzero {
            ensure!(*m * *m == **m, "F_{i}{h}^2 != F_{i}{h}");
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::CentralCommutes, || {
        for ((i, h), m) in &nonzero {
            ensure!(t.in_algebra(m), "F_{i}{h} is not in T(x)");
            for (c, gen) in t.generators().into_iter().enumerate() {
                let name = if c <= d { format!("A_{c}") } else { format!("E_{}*", c - d - 1) };
                ensure!(*m * gen == gen * *m, "F_{i}{h} does not commute with {name}");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::CentralAnnihilatesPrimary, || {
        for ((i, h), m) in &nonzero {
            for (a, row) in pb.g.iter().enumerate() {
                for (b, g) in row.iter().enumerate() {
                    ensure!((*m * g).is_zero() && (g * *m).is_zero(), "F_{i}{h} and G_{a}{b}");
                }
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::CentralOrthogonal, || {
        for (p, ((i, h), m)) in nonzero.iter().enumerate() {
            for ((a, b), other) in &nonzero[p + 1..] {
                ensure!((*m * *other).is_zero() && (*other * *m).is_zero(), "F_{i}{h} F_{a}{b} != 0");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::CentralAction, || {
        for ((i, h), m) in &nonzero {
            let (i, h) = (*i, *h);
            let kh: u64 = ks[..=h].iter().sum();
            for g in 0..=d {
                let expected = if g <= h {
                    m.scale(&Rational::from(ks[g]))
                } else if g == h + 1 {
                    m.scale(&-Rational::from(kh))
                } else {
                    ExactMatrix::zeros(v, v)
                };
                ensure!(t.a(g) * *m == expected, "A_{g} F_{i}{h}");
                ensure!(*m * t.a(g) == expected, "F_{i}{h} A_{g}");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::Decomposition, || {
        let fm: Vec<ExactMatrix> = nonzero.iter().map(|(_, m)| (*m).clone()).collect();
        let fspan = span_basis_of_shape(v, v, &fm).map_err(|e| e.to_string())?;
        ensure!(fspan.dim() == fm.len(), "the nonzero F_ih are linearly dependent");
        let sum = pb.span.join(&fspan).map_err(|e| e.to_string())?;
        ensure!(sum.dim() == pb.span.dim() + fspan.dim(), "U and span F intersect");
        ensure!(sum.dim() == t.dim(), "dim U + {} = {} != dim T(x) = {}", fm.len(), sum.dim(), t.dim());
        ensure!(sum.is_subspace_of(t.basis()).unwrap_or(false), "U + span F is not inside T(x)");
        Ok(())
    }));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::{build, WreathParams};

    fn t(f: &[usize], x: usize) -> TerwilligerAlgebra {
        TerwilligerAlgebra::new(&build(&WreathParams::new(f.to_vec()).unwrap()), x).unwrap()
    }

    #[test]
    fn f10_for_3_3() {
        let alg = t(&[3, 3], 0);
        let fs = f_idempotents(&alg);
        assert_eq!(fs.nonzero_count, 3);
        let e1 = alg.e(1);
        let expected = e1 - &(&(e1 * &alg.j()) * e1).scale(&Rational::new(1, 2));
        let f10 = &fs.f[&(1, 0)];
        assert_eq!(*f10, expected);
        assert_eq!(f10.trace(), Rational::one());
        assert_eq!(alg.a(1) * f10, -f10);
        assert!((alg.a(2) * f10).is_zero());
    }

    #[test]
    fn vanishing_for_2_2() {
        let fs = f_idempotents(&t(&[2, 2], 0));
        assert!(fs.f[&(1, 0)].is_zero());
        assert!(fs.f[&(2, 1)].is_zero());
        assert!(!fs.f[&(2, 0)].is_zero());
        assert_eq!(fs.nonzero_count, 1);
    }

    #[test]
    fn checks_pass() {
        for f in [&[2usize][..], &[3], &[2, 3], &[3, 3], &[2, 2, 2]] {
            let alg = t(f, 1);
            let pb = g_basis(&alg);
            let fs = f_idempotents(&alg);
            let checks = verify_f(&alg, &fs, &pb);
            assert!(checks.iter().all(|c| c.passed), "{f:?}: {checks:?}");
        }
        let alg = t(&[2, 3], 0);
        assert_eq!(f_idempotents(&alg).nonzero_count + 9, alg.dim());
    }
}
