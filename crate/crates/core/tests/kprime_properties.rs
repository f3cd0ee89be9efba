use std::collections::BTreeSet;

use loopcover::{canonical_order, check_linear_quotients, kprime_cover_ideal, KPrimeSpec};
use proptest::prelude::*;

fn spec_strategy(max_n: usize) -> impl Strategy<Value = KPrimeSpec> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let interior = proptest::sample::subsequence((1..n).collect::<Vec<_>>(), 1..n);
            let loops = proptest::collection::btree_set(1..=n, 0..=n);
            (Just(n), interior, loops)
        })
        .prop_map(|(n, mut alphas, loops)| {
            alphas.push(n);
            KPrimeSpec::new(alphas, loops).unwrap()
        })
}

/// Principal exactly when no center is unlooped, or a single one is and all
/// the leaves hanging from it are looped.
fn expect_principal(spec: &KPrimeSpec) -> bool {
    let unlooped: Vec<usize> = spec
        .centers()
        .iter()
        .copied()
        .filter(|c| !spec.loops().contains(c))
        .collect();
    match unlooped.as_slice() {
        [] => true,
        [c] => spec
            .blocks()
            .find(|b| b.contains(c))
            .unwrap()
            .all(|v| v == *c || spec.loops().contains(&v)),
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn canonical_order_steps_are_single_centers(spec in spec_strategy(16)) {
        let ideal = kprime_cover_ideal(&spec);
        prop_assume!(!ideal.is_principal());
        let cert = check_linear_quotients(&ideal, &canonical_order(&ideal).unwrap()).unwrap();
        prop_assert!(cert.linear);
        prop_assert_eq!(cert.q, 1);
        let centers: BTreeSet<usize> = spec.centers().iter().copied().collect();
        for step in cert.step_variables() {
            prop_assert_eq!(step.len(), 1);
            prop_assert!(centers.contains(&step[0]));
        }
    }

    #[test]
    fn principal_characterization(spec in spec_strategy(16)) {
        let ideal = kprime_cover_ideal(&spec);
        prop_assert_eq!(ideal.is_principal(), expect_principal(&spec));
        prop_assert!(ideal.len() <= spec.m() + 1);
    }
}

#[test]
fn many_looped_centers_need_not_be_principal() {
    let spec = KPrimeSpec::new(vec![2, 4], [4]).unwrap();
    let ideal = kprime_cover_ideal(&spec);
    assert_eq!(ideal.compact(), "(X1X4, X2X4)");
    assert!(!expect_principal(&spec));
}
