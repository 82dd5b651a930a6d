use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use wreath_algebra::scheme::{complete_scheme, wreath};
use wreath_algebra::terwilliger::TerwilligerAlgebra;
use wreath_algebra::wreath::{build, recognize, structure_report, WreathParams};

fn small_params() -> impl Strategy<Value = WreathParams> {
    prop::collection::vec(2usize..=4, 1..=3)
        .prop_filter("order at most 24", |f| f.iter().product::<usize>() <= 24)
        .prop_map(|f| WreathParams::new(f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wreath_is_associative(a in 2usize..=3, b in 2usize..=3, c in 2usize..=3) {
        let (ka, kb, kc) = (complete_scheme(a).unwrap(), complete_scheme(b).unwrap(), complete_scheme(c).unwrap());
        prop_assert_eq!(wreath(&wreath(&ka, &kb), &kc), wreath(&ka, &wreath(&kb, &kc)));
    }

    #[test]
    fn permutation_keeps_intersection_numbers(params in small_params(), seed in any::<u64>()) {
        let s = build(&params);
        let v = s.order();
        let mut sigma: Vec<usize> = (0..v).collect();
        sigma.shuffle(&mut StdRng::seed_from_u64(seed));
        let p = s.permute_vertices(&sigma).unwrap();
        prop_assert_eq!(p.intersection_tensor(), s.intersection_tensor());
        let r = recognize(&p);
        prop_assert_eq!(r.params(), Some(&params));
    }

    #[test]
    fn dimension_is_base_point_invariant(params in small_params(), x in any::<prop::sample::Index>()) {
        let s = build(&params);
        let t = TerwilligerAlgebra::new(&s, x.index(s.order())).unwrap();
        prop_assert_eq!(t.dim(), params.terwilliger_dim());
    }
}

#[test]
fn every_check_passes_on_mixed_factors() {
    for f in [vec![4, 2], vec![2, 4, 2], vec![5, 3]] {
        let params = WreathParams::new(f).unwrap();
        let v = params.order();
        for x in [0, v / 2, v - 1] {
            let r = structure_report(&params, x).unwrap();
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{params} at {x}: {bad:?}");
        }
    }
}
