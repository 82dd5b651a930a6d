use crate::linalg::{ExactMatrix, Rational};
use crate::scheme::{complete_scheme, wreath, AssociationScheme};

use super::check::{ensure, Check, CheckName};
use super::params::{build, trivial_scheme, WreathParams};

/// `sum_i c_i A_i`.
pub(crate) fn combination(s: &AssociationScheme, coeffs: &[Rational]) -> ExactMatrix {
    let v = s.order();
    let mut out = ExactMatrix::zeros(v, v);
    for (a, c) in s.adjacency_matrices().iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &a.scale(c);
        }
    }
    out
}

/// `A_0 + ... + A_h`.
pub(crate) fn partial_sum(s: &AssociationScheme, h: usize) -> ExactMatrix {
    let coeffs: Vec<Rational> =
        (0..=s.classes()).map(|i| if i <= h { Rational::one() } else { Rational::zero() }).collect();
    combination(s, &coeffs)
}

/// Checks the Bose-Mesner identities of `K_{n_1} wr ... wr K_{n_d}` on `s`,
/// which must carry the class order produced by [`build`].
pub fn verify_bose(s: &AssociationScheme, params: &WreathParams) -> Vec<Check> {
    let d = params.classes();
    let ks: Vec<Rational> = params.valencies().iter().map(|&k| Rational::from(k)).collect();
    let big_k = |h: usize| ks[..=h].iter().sum::<Rational>();
    let shape_ok = s.classes() == d && s.order() == params.order();

    let mut checks = vec![Check::run(CheckName::BoseValencies, || {
        ensure!(shape_ok, "scheme has {} classes on {} points", s.classes(), s.order());
        let found = s.valencies();
        ensure!(found == params.valencies(), "valencies {:?}, expected {:?}", found, params.valencies());
        Ok(())
    })];
    if !shape_ok {
        return checks;
    }

    checks.push(Check::run(CheckName::BoseProducts, || {
        for i in 0..=d {
            for j in i + 1..=d {
                ensure!(s.adjacency(i) * s.adjacency(j) == s.adjacency(j).scale(&ks[i]), "A_{i} A_{j} != k_{i} A_{j}");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::BoseSquares, || {
        for i in 1..=d {
            let n = Rational::from(params.factors()[i - 1]);
            let mut coeffs = vec![Rational::zero(); d + 1];
            for c in coeffs.iter_mut().take(i) {
                *c = ks[i].clone();
            }
            coeffs[i] = &ks[i] * &(&(&n - &Rational::from(2)) / &(&n - &Rational::one()));
            ensure!(s.adjacency(i) * s.adjacency(i) == combination(s, &coeffs), "A_{i}^2 differs");
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::BoseClosedSubsets, || {
        for i in 0..=d {
            let delta: Vec<usize> = (0..=i).collect();
            ensure!(s.is_closed_subset(&delta).unwrap_or(false), "{{0..{i}}} is not closed");
        }
        Ok(())
    }));

    let sums: Vec<ExactMatrix> = (0..=d).map(|h| partial_sum(s, h)).collect();
    checks.push(Check::run(CheckName::PartialSumSquare, || {
        for (h, sh) in sums.iter().enumerate() {
            ensure!(sh * sh == sh.scale(&big_k(h)), "partial sum {h} squared");
        }
        Ok(())
    }));
    checks.push(Check::run(CheckName::PartialSumAbsorb, || {
        for (h, sh) in sums.iter().enumerate() {
            for g in 0..=h {
                ensure!(s.adjacency(g) * sh == sh.scale(&ks[g]), "A_{g} times partial sum {h}");
            }
        }
        Ok(())
    }));

    checks.push(Check::run(CheckName::WreathDecomposition, || {
        let n = params.factors()[d - 1];
        let y = params.without_last().map(|p| build(&p)).unwrap_or_else(trivial_scheme);
        let kn = complete_scheme(n).map_err(|e| e.to_string())?;
        ensure!(*s == wreath(&y, &kn), "X differs from Y wr K_{n}");
        for i in 1..d {
            ensure!(s.adjacency(i) * s.adjacency(d) == s.adjacency(d).scale(&ks[i]), "A_{i} A_d != k_{i} A_d");
        }
        let mut coeffs = vec![Rational::from(n as i64 - 1); d + 1];
        coeffs[d] = Rational::from(n as i64 - 2);
        let expected = combination(s, &coeffs).scale(&big_k(d - 1));
        ensure!(s.adjacency(d) * s.adjacency(d) == expected, "A_d^2 differs");
        let lower: Vec<usize> = (0..d).collect();
        let sub = s.subscheme(&lower, 0).map_err(|e| e.to_string())?;
        ensure!(sub.intersection_tensor() == y.intersection_tensor(), "subscheme on {{0..d-1}} is not Y");
        // R(Y wr K_n) = I_n (x) R(Y) + (R(K_n) + (d-1)(J_n - I_n)) (x) J_v
        let off = &ExactMatrix::ones(n, n) - &ExactMatrix::identity(n);
        let outer = &kn.relation_matrix() + &off.scale(&Rational::from(d - 1));
        let r = &ExactMatrix::identity(n).kronecker(&y.relation_matrix())
            + &outer.kronecker(&ExactMatrix::ones(y.order(), y.order()));
        ensure!(s.relation_matrix() == r, "relation matrix identity fails");
        Ok(())
    }));

    checks
}
