//! Acceptance criteria for the wreath-product Terwilliger algebra library.
//!
//! Run with `cargo test -p wreath-algebra --test acceptance`. Every criterion
//! is an exact identity; there is no tolerance anywhere.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use wreath_algebra::linalg::{span_basis_of_shape, ExactMatrix, Rational};
use wreath_algebra::scheme::{cycle_scheme, from_relation_table, AssociationScheme};
use wreath_algebra::terwilliger::TerwilligerAlgebra;
use wreath_algebra::wreath::{
    block_form, build, f_idempotents, g_basis, recognize, verify_bose, verify_f, verify_subconstituents,
    verify_primary_ideal, Check, CheckName, Recognition, WreathParams,
};

const ZOO: &[&[usize]] = &[
    &[2],
    &[3],
    &[5],
    &[2, 2],
    &[2, 3],
    &[3, 2],
    &[3, 3],
    &[2, 2, 2],
    &[2, 3, 2],
    &[4, 4],
    &[2, 2, 2, 2],
];

type Outcome = Result<(), String>;

macro_rules! require {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Case {
    params: WreathParams,
    scheme: AssociationScheme,
}

fn zoo() -> Vec<Case> {
    ZOO.iter()
        .map(|f| {
            let params = WreathParams::new(f.to_vec()).unwrap();
            let scheme = build(&params);
            Case { params, scheme }
        })
        .collect()
}

fn base_points(v: usize) -> Vec<usize> {
    if v <= 12 { (0..v).collect() } else { vec![0, v - 1] }
}

/// Terwilliger algebras of the zoo at the criterion-1 base points, built once.
struct Algebras {
    by_case: Vec<Vec<TerwilligerAlgebra>>,
    closure_time: Duration,
}

fn algebras(cases: &[Case]) -> Algebras {
    let start = Instant::now();
    let by_case = cases
        .iter()
        .map(|c| {
            base_points(c.scheme.order())
                .into_iter()
                .map(|x| TerwilligerAlgebra::new(&c.scheme, x).unwrap())
                .collect()
        })
        .collect();
    Algebras { by_case, closure_time: start.elapsed() }
}

fn failed(checks: &[Check]) -> Option<String> {
    checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

fn only(checks: Vec<Check>, names: &[CheckName]) -> Vec<Check> {
    checks.into_iter().filter(|c| names.contains(&c.name)).collect()
}

fn criterion_1(cases: &[Case], algs: &Algebras) -> Outcome {
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        let d = c.params.classes();
        let b = c.params.factors().iter().filter(|&&n| n == 2).count();
        let expected = (d + 1) * (d + 1) + d * (d + 1) / 2 - b;
        for t in ts {
            require!(
                t.dim() == expected,
                "{}: dim T({}) = {}, expected {expected}",
                c.params,
                t.base_point(),
                t.dim()
            );
        }
    }
    require!(algs.closure_time < Duration::from_secs(60), "closure took {:?}", algs.closure_time);
    Ok(())
}

/// `G_ij` straight from the definition, with `E_i* M E_j*` as matrix products.
fn g_from_definition(t: &TerwilligerAlgebra, i: usize, j: usize) -> ExactMatrix {
    let k = |c: usize| Rational::new(1, t.k(c) as i64);
    let sandwich = |m: &ExactMatrix| &(t.e(i) * m) * t.e(j);
    if i < j {
        sandwich(t.a(j)).scale(&k(j))
    } else if i > j {
        sandwich(t.a(i)).scale(&k(j))
    } else {
        sandwich(&t.j()).scale(&k(i))
    }
}

fn criterion_2(cases: &[Case], algs: &Algebras) -> Outcome {
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        let t = &ts[0];
        let n = c.params.classes() + 1;
        let v = c.scheme.order();
        let pb = g_basis(t);
        for i in 0..n {
            for j in 0..n {
                require!(pb.g[i][j] == g_from_definition(t, i, j), "{}: G_{i}{j} differs from definition", c.params);
            }
        }
        for i in 0..n {
            for j in 0..n {
                for g in 0..n {
                    for h in 0..n {
                        let product = &pb.g[i][j] * &pb.g[g][h];
                        let expected = if j == g { pb.g[i][h].clone() } else { ExactMatrix::zeros(v, v) };
                        require!(product == expected, "{}: G_{i}{j} G_{g}{h}", c.params);
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_3(cases: &[Case], algs: &Algebras) -> Outcome {
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        let t = &ts[0];
        let d = c.params.classes();
        let b = c.params.factors().iter().filter(|&&n| n == 2).count();
        let fs = f_idempotents(t);
        require!(fs.nonzero_count == d * (d + 1) / 2 - b, "{}: {} nonzero F", c.params, fs.nonzero_count);
        for (&(i, h), f) in &fs.f {
            let vanishes = h + 1 == i && c.params.factors()[i - 1] == 2;
            require!(f.is_zero() == vanishes, "{}: F_{i}{h} zero = {}", c.params, f.is_zero());
            if !f.is_zero() {
                require!(&(f * f) == f, "{}: F_{i}{h} is not idempotent", c.params);
            }
        }
        let pb = g_basis(t);
        let checks = only(
            verify_f(t, &fs, &pb),
            &[
                CheckName::CentralIdempotent,
                CheckName::CentralCommutes,
                CheckName::CentralAnnihilatesPrimary,
                CheckName::CentralOrthogonal,
                CheckName::CentralAction,
            ],
        );
        require!(checks.len() == 5, "missing central checks");
        if let Some(w) = failed(&checks) {
            return Err(format!("{}: {w}", c.params));
        }
    }
    Ok(())
}

fn criterion_4(cases: &[Case], algs: &Algebras) -> Outcome {
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        let t = &ts[0];
        let pb = g_basis(t);
        let fs = f_idempotents(t);
        let nonzero: Vec<ExactMatrix> = fs.nonzero().map(|(_, m)| m.clone()).collect();
        let v = c.scheme.order();
        let fspan = span_basis_of_shape(v, v, &nonzero).unwrap();
        let joined = pb.span.join(&fspan).unwrap();
        require!(pb.span.dim() + nonzero.len() == t.dim(), "{}: dimensions do not add up", c.params);
        require!(joined.dim() == pb.span.dim() + fspan.dim(), "{}: U meets span F", c.params);
        require!(joined == *t.basis(), "{}: U + span F != T(x)", c.params);
        let center = t.center().dim();
        require!(center == 1 + nonzero.len(), "{}: center has dim {center}", c.params);
    }
    Ok(())
}

fn criterion_5(cases: &[Case]) -> Outcome {
    for c in cases {
        if let Some(w) = failed(&verify_bose(&c.scheme, &c.params)) {
            return Err(format!("{}: {w}", c.params));
        }
    }
    let s = build(&WreathParams::new(vec![2, 3]).unwrap());
    let a2 = s.adjacency(2);
    let expected = &(&s.adjacency(0).scale(&4.into()) + &s.adjacency(1).scale(&4.into())) + &a2.scale(&2.into());
    require!(a2 * a2 == expected, "[2,3]: (A_2)^2 != 4A_0 + 4A_1 + 2A_2");
    let s = build(&WreathParams::new(vec![3, 3]).unwrap());
    require!(s.adjacency(1) * s.adjacency(2) == s.adjacency(2).scale(&2.into()), "[3,3]: A_1 A_2 != 2 A_2");
    Ok(())
}

fn criterion_6(cases: &[Case], algs: &Algebras) -> Outcome {
    let names = [
        CheckName::BlockAdjacency,
        CheckName::BlockPrimary,
        CheckName::PrimaryAbsorption,
        CheckName::PrimaryAction,
    ];
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        if c.scheme.order() > 24 {
            continue;
        }
        for t in ts {
            let mut checks = verify_subconstituents(t);
            require!(checks.len() == 6, "missing subconstituent checks");
            checks.extend(block_form(t).checks);
            checks.extend(only(verify_primary_ideal(t, &g_basis(t)), &names));
            require!(checks.len() == 10, "missing block or action checks");
            if let Some(w) = failed(&checks) {
                return Err(format!("{} at x = {}: {w}", c.params, t.base_point()));
            }
        }
    }
    Ok(())
}

fn shrikhande() -> AssociationScheme {
    let pts: Vec<(usize, usize)> = (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
    let conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let table: Vec<Vec<usize>> = pts
        .iter()
        .map(|&(a, b)| {
            pts.iter()
                .map(|&(c, d)| {
                    let diff = ((c + 4 - a) % 4, (d + 4 - b) % 4);
                    if diff == (0, 0) { 0 } else if conn.contains(&diff) { 1 } else { 2 }
                })
                .collect()
        })
        .collect();
    from_relation_table(&table).unwrap()
}

fn criterion_7(cases: &[Case], algs: &Algebras) -> Outcome {
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        require!(c.scheme.triple_regularity().is_triply_regular, "{} is not triply regular", c.params);
        for t in ts {
            require!(t.triple_product_span() == *t.basis(), "{}: triple products miss T({})", c.params, t.base_point());
        }
    }

    let start = Instant::now();
    let big = build(&WreathParams::new(vec![3, 4, 3]).unwrap());
    require!(big.order() == 36, "order {}", big.order());
    require!(big.triple_regularity().is_triply_regular, "[3,4,3] is not triply regular");
    let t = TerwilligerAlgebra::new(&big, 0).unwrap();
    require!(t.triple_product_span() == *t.basis(), "[3,4,3]: triple products miss T(0)");
    let elapsed = start.elapsed();
    require!(elapsed < Duration::from_secs(120), "v = 36 took {elapsed:?}");

    // The converse direction: a scheme that is not triply regular has a base
    // point whose triple products miss part of T(x).
    let s = shrikhande();
    require!(!s.triple_regularity().is_triply_regular, "Shrikhande scheme reported triply regular");
    let t = TerwilligerAlgebra::new(&s, 0).unwrap();
    let span = t.triple_product_span();
    require!(span.dim() < t.dim(), "Shrikhande: triple products span all {} dimensions", t.dim());
    Ok(())
}

fn criterion_8(cases: &[Case]) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for c in cases {
        let direct = recognize(&c.scheme);
        require!(direct.params() == Some(&c.params), "{}: recognized as {direct:?}", c.params);
        for _ in 0..5 {
            let mut sigma: Vec<usize> = (0..c.scheme.order()).collect();
            sigma.shuffle(&mut rng);
            let permuted = c.scheme.permute_vertices(&sigma).unwrap();
            let r = recognize(&permuted);
            require!(r.params() == Some(&c.params), "{} under {sigma:?}: {r:?}", c.params);
        }
    }

    let c6 = cycle_scheme(6).unwrap();
    let Recognition::NotWreath { witness: Some((i, j)) } = recognize(&c6) else {
        return Err("C_6 was not rejected with a witness".into());
    };
    let k = Rational::from(c6.valency(i).unwrap());
    require!(c6.adjacency(i) * c6.adjacency(j) != c6.adjacency(j).scale(&k), "C_6 witness ({i}, {j}) is not a violation");
    Ok(())
}

/// `p_ij^h` by counting `z` with `(y, z) in R_i` and `(z, w) in R_j` for one
/// pair `(y, w) in R_h`, checking every other pair agrees.
fn counted_tensor(s: &AssociationScheme) -> Result<BTreeMap<(usize, usize, usize), u64>, String> {
    let v = s.order();
    let mut p = BTreeMap::new();
    for y in 0..v {
        for w in 0..v {
            let h = s.relation(y, w);
            let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for z in 0..v {
                *counts.entry((s.relation(y, z), s.relation(z, w))).or_default() += 1;
            }
            for i in 0..=s.classes() {
                for j in 0..=s.classes() {
                    let n = counts.get(&(i, j)).copied().unwrap_or(0);
                    if let Some(&prev) = p.get(&(i, j, h)) {
                        require!(prev == n, "p_{i}{j}^{h} is not constant");
                    }
                    p.insert((i, j, h), n);
                }
            }
        }
    }
    Ok(p)
}

fn criterion_9(cases: &[Case], algs: &Algebras) -> Outcome {
    let mut schemes: Vec<(String, &AssociationScheme)> =
        cases.iter().map(|c| (c.params.to_string(), &c.scheme)).collect();
    let extra = [cycle_scheme(6).unwrap(), cycle_scheme(7).unwrap(), shrikhande()];
    schemes.extend(extra.iter().enumerate().map(|(n, s)| (format!("extra {n}"), s)));
    for (name, s) in schemes {
        for ((i, j, h), p) in counted_tensor(s)? {
            require!(s.intersection_number(i, j, h) == p, "{name}: p_{i}{j}^{h}");
        }
    }
    for (c, ts) in cases.iter().zip(&algs.by_case) {
        for t in ts {
            require!(t.dim() == c.params.terwilliger_dim(), "{}: closure and formula disagree", c.params);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cases = zoo();
    let algs = algebras(&cases);
    type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("dimension formula", Box::new(|| criterion_1(&cases, &algs))),
        ("matrix-unit relations", Box::new(|| criterion_2(&cases, &algs))),
        ("central idempotents", Box::new(|| criterion_3(&cases, &algs))),
        ("decomposition", Box::new(|| criterion_4(&cases, &algs))),
        ("Bose-Mesner identities", Box::new(|| criterion_5(&cases))),
        ("subconstituent identities", Box::new(|| criterion_6(&cases, &algs))),
        ("triple regularity", Box::new(|| criterion_7(&cases, &algs))),
        ("recognition", Box::new(|| criterion_8(&cases))),
        ("oracle cross-checks", Box::new(|| criterion_9(&cases, &algs))),
    ];

    let mut all = true;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS criterion {} ({name}) [{ms} ms]", n + 1),
            Err(why) => {
                all = false;
                println!("FAIL criterion {} ({name}) [{ms} ms]: {why}", n + 1);
            }
        }
    }
    println!("closure for the zoo: {} ms", algs.closure_time.as_millis());
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
