use itertools::Itertools;
use proptest::prelude::*;

use super::*;
use crate::colorings::{
    constant_exact, constant_finite, min_minus_one, parity_of_min, parity_of_sum, second_mod_min, ExactColoring,
    FiniteColoring, FnExact, FnFinite, FnRegressive,
};
use crate::largesets::{enumerate_exactly_large, FinSet};

fn mix(seed: u64, t: &[u64]) -> u64 {
    let mut h = seed ^ 0x2545_f491_4f6c_dd1d;
    for &x in t {
        h = (h ^ x).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 31;
    }
    h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 29)
}

fn pentagon() -> impl FiniteColoring {
    FnFinite::new(2, |t: &[u64]| matches!((t[1] + 5 - t[0] % 5) % 5, 1 | 4) as u64)
}

/// Pair coloring from a 15-bit mask over the pairs of {0..5}.
fn graph6(mask: u32) -> impl FiniteColoring {
    FnFinite::new(2, move |t: &[u64]| {
        let idx = (0..6u64).combinations(2).position(|p| p[0] == t[0] && p[1] == t[1]).unwrap();
        (mask >> idx & 1) as u64
    })
}

/// Second implementation: walk all k-subsets as bitmasks.
fn bitmask_homogeneous<C: FiniteColoring>(c: &C, u: &[u64], k: usize) -> Option<Vec<u64>> {
    let n = u.len();
    let mut best: Option<Vec<u64>> = None;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set: Vec<u64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| u[i]).collect();
        let colors: Vec<u64> = set.iter().copied().combinations(c.dimension()).map(|t| c.color(&t)).collect();
        if colors.iter().all_equal() && best.as_ref().is_none_or(|b| set < *b) {
            best = Some(set);
        }
    }
    best
}

#[test]
fn brute_examples() {
    let w = brute_homogeneous(&constant_finite(2, 0), &FinSet::interval(1, 6), 3);
    let w = w.witness().unwrap();
    assert_eq!(w.set.as_slice(), &[1, 2, 3]);
    assert_eq!(w.color, ColorData::Single(0));
    assert!(w.verified);

    match brute_homogeneous(&pentagon(), &FinSet::interval(0, 4), 3) {
        SearchOutcome::Exhausted { subsets, .. } => assert_eq!(subsets, 10),
        other => panic!("pentagon has no monochromatic triangle: {other:?}"),
    }
}

#[test]
fn ramsey_three_three_is_six() {
    let six = FinSet::interval(0, 5);
    for mask in 0u32..1 << 15 {
        assert!(brute_homogeneous(&graph6(mask), &six, 3).witness().is_some(), "mask {mask:#x}");
    }
    assert!(brute_homogeneous(&pentagon(), &FinSet::interval(0, 4), 3).witness().is_none());
}

#[test]
fn brute_agrees_with_bitmask_search() {
    for seed in 0..60u64 {
        let dim = 1 + (seed % 3) as usize;
        let c = FnFinite::new(dim, move |t: &[u64]| mix(seed, t) & 1);
        let size = 6 + (seed % 5) as usize;
        let u: Vec<u64> = (0..size as u64).map(|i| 2 * i + seed % 3).collect();
        for k in dim..=size.min(dim + 4) {
            let fast = brute_homogeneous(&c, &FinSet::new(u.clone()).unwrap(), k);
            let slow = bitmask_homogeneous(&c, &u, k);
            assert_eq!(fast.witness().map(|w| w.set.as_slice().to_vec()), slow, "seed {seed} k {k}");
        }
    }
}

#[test]
fn verifier_examples() {
    let pm = parity_of_min();
    let r = verify_exact_homogeneous(&FinSet::from_unsorted([5, 6]), &pm);
    assert!(r.passed);
    assert_eq!(r.checked, 0);
    let r = verify_exact_homogeneous(&FinSet::interval(1, 9), &constant_exact(1));
    assert!(r.passed && r.checked > 0);

    // one flipped color
    let planted = FnExact::new(|s: &[u64]| (s == [2, 4, 7]) as u64);
    let r = verify_exact_homogeneous(&FinSet::interval(2, 8), &planted);
    assert!(!r.passed);
    let ce = r.counterexample.unwrap();
    assert_eq!(ce.first.as_slice(), &[2, 3, 4]);
    assert_eq!(ce.second.as_slice(), &[2, 4, 7]);
    assert_eq!((ce.first_color, ce.second_color), (0, 1));

    let r = verify_min_homogeneous(&FinSet::interval(2, 8), &planted);
    assert!(!r.passed);
    assert_eq!(r.counterexample.unwrap().second.as_slice(), &[2, 4, 7]);
    assert!(verify_min_homogeneous(&FinSet::interval(2, 8), &parity_of_min()).passed);
    assert!(!verify_exact_homogeneous(&FinSet::interval(2, 8), &parity_of_min()).passed);
}

#[test]
fn er_children_examples() {
    let b = SearchBudget::default();
    let u = FinSet::interval(3, 20);
    let constant = constant_finite(2, 0);
    assert_eq!(er_children(&[], &constant, &u, &b).children, vec![3]);
    assert_eq!(er_children(&[3, 4], &constant, &u, &b).children, vec![5]);
    let p = leftmost_path(&constant, &u, 18, &b);
    assert_eq!(p.path, u);
    assert!(p.stable);

    let parity = FnFinite::new(2, |t: &[u64]| t[1] % 2);
    assert_eq!(er_children(&[3], &parity, &u, &b).children, vec![4, 5]);
    assert_eq!(er_children(&[3, 5], &parity, &u, &b).children, vec![7]);
}

#[test]
fn leftmost_path_examples() {
    let b = SearchBudget::default();
    let p = leftmost_path(&constant_finite(2, 0), &FinSet::interval(0, 20), 5, &b);
    assert_eq!(p.path.as_slice(), &[0, 1, 2, 3, 4]);
    assert!(p.stable);

    // color flips once at 5: the branch through 1 dies at 4, the one through 5 survives
    let flip = FnFinite::new(2, |t: &[u64]| (t[1] >= 5) as u64);
    let u = FinSet::interval(0, 9);
    assert_eq!(er_children(&[0], &flip, &u, &b).children, vec![1, 5]);
    let p = leftmost_path(&flip, &u, 5, &b);
    assert_eq!(p.path.as_slice(), &[0, 1, 2, 3, 4]);
    let p = leftmost_path(&flip, &u, 6, &b);
    assert_eq!(p.path.as_slice(), &[0, 5, 6, 7, 8, 9]);
    assert!(p.stable);

    let p = leftmost_path(&flip, &FinSet::interval(0, 2), 10, &b);
    assert_eq!(p.path.len(), 3);
    assert!(!p.stable);
}

fn check_last_element_independence<C: FiniteColoring>(c: &C, path: &[u64]) {
    let a = c.dimension() - 1;
    for t in path.iter().copied().combinations(a) {
        let later: Vec<u64> = path.iter().copied().filter(|&x| x > t[a - 1]).collect();
        let colors: Vec<u64> = later
            .iter()
            .map(|&j| {
                let mut full = t.clone();
                full.push(j);
                c.color(&full)
            })
            .collect();
        assert!(colors.iter().all_equal(), "tuple {t:?} on path {path:?}");
    }
}

#[test]
fn children_are_least_of_their_class() {
    let b = SearchBudget::default();
    for seed in 0..20 {
        let c = FnFinite::new(3, move |t: &[u64]| mix(seed, t) & 1);
        let u = FinSet::interval(0, 30);
        let p = leftmost_path(&c, &u, 30, &b);
        check_last_element_independence(&c, p.path.as_slice());
        for k in 0..=p.path.len() {
            let node = &p.path.as_slice()[..k];
            let pool = er_pool(node, &c, &u);
            let kids = er_children(node, &c, &u, &b).children;
            for &j in &kids {
                for &i in pool.iter().filter(|&&i| i < j) {
                    // an earlier pool member must differ on some signature entry
                    let differs = node
                        .iter()
                        .copied()
                        .combinations(2)
                        .filter(|t| t.last() == node.last())
                        .any(|t| c.color(&[t[0], t[1], i]) != c.color(&[t[0], t[1], j]));
                    assert!(differs, "seed {seed} node {node:?}: {i} shadows {j}");
                }
            }
        }
    }
}

#[test]
fn extraction_examples() {
    let b = SearchBudget::default();
    let parity = FnFinite::new(1, |t: &[u64]| t[0] % 2);
    let w = f_a_extract(1, &parity, &FinSet::interval(0, 30), 10, &b);
    assert_eq!(w.set.as_slice(), &[0, 2, 4, 6, 8, 10, 12, 14, 16, 18]);
    assert!(w.verified && w.complete);

    let w = f_a_extract(2, &constant_finite(2, 0), &FinSet::interval(0, 30), 5, &b);
    assert_eq!(w.set.as_slice(), &[0, 1, 2, 3, 4]);
    let p = leftmost_path(&constant_finite(2, 0), &FinSet::interval(0, 30), 5, &b);
    assert_eq!(w.set, p.path);

    let w = f_a_extract(2, &pentagon(), &FinSet::interval(0, 40), 4, &b);
    assert!(w.verified && w.complete, "{w:?}");
    assert!(verify_finite_homogeneous(&w.set, &pentagon()).passed);
}

#[test]
fn extraction_is_sound_on_random_colorings() {
    let b = SearchBudget::default();
    for seed in 0..30 {
        for a in 1..=3usize {
            let c = FnFinite::new(a, move |t: &[u64]| mix(seed * 7 + a as u64, t) & 1);
            let w = f_a_extract(a, &c, &FinSet::interval(0, 59), 6, &b);
            assert!(verify_finite_homogeneous(&w.set, &c).passed, "seed {seed} a {a}");
            assert!(w.verified);
        }
    }
}

#[test]
fn chain_examples() {
    let b = SearchBudget::default();
    let u = FinSet::interval(2, 40);

    let pm = parity_of_min();
    let chain = iterate_rtomega(&pm, &FinSet::interval(2, 30), &b);
    assert!(chain.witness.verified);
    // elements heading an exactly large subset of the chain share a parity
    let set = chain.witness.set.as_slice();
    let headed: Vec<u64> =
        set.iter().enumerate().filter(|(i, &x)| (set.len() - i - 1) as u64 >= x).map(|(_, &x)| x % 2).collect();
    assert!(headed.len() >= 3 && headed.iter().all_equal(), "{set:?}");
    assert!(chain.witness.set.len() >= 5);

    let constant = constant_exact(0);
    let small = FinSet::interval(2, 26);
    let chain = iterate_rtomega(&constant, &small, &b);
    assert_eq!(chain.chain, small.as_slice().to_vec());
    assert_eq!(chain.witness.set, small);

    let ps = parity_of_sum();
    let chain = iterate_rtomega(&ps, &u, &b);
    assert!(chain.witness.verified);
    assert!(verify_exact_homogeneous(&chain.witness.set, &ps).passed);
    check_chain_monotone(&chain);
}

fn check_chain_monotone(chain: &ChainWitness) {
    for w in chain.stages.windows(2) {
        assert!(w[1].ground.is_subset(&w[0].kept));
        assert_eq!(Some(w[1].element), FinSet::min(&w[0].kept));
        assert!(w[0].kept.is_subset(&w[0].ground));
    }
}

#[test]
fn min_homogeneous_examples() {
    let mm = min_minus_one();
    let w = min_homog_search(&mm, &FinSet::interval(2, 16), 5);
    assert_eq!(w.witness().unwrap().set.as_slice(), &[2, 3, 4, 5, 6]);

    let sm = second_mod_min();
    let w = min_homog_search(&sm, &FinSet::interval(2, 16), 5);
    let w = w.witness().expect("witness exists");
    assert!(w.verified);
    assert!(verify_min_homogeneous(&w.set, &sm).passed);

    // {2,3,4}, {2,3,5}, {2,4,5} disagree and {2,3,4,5} is the only 4-subset
    let adversarial = FnRegressive(|s: &[u64]| (s == [2, 3, 4]) as u64);
    match min_homog_search(&adversarial, &FinSet::interval(2, 5), 4) {
        SearchOutcome::Exhausted { subsets, .. } => assert_eq!(subsets, 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn five_point_sets_above_four_are_vacuous() {
    // {5,...,9} has no exactly large subset, so every coloring of {2..9}
    // has a size-5 min-homogeneous set
    let any = FnRegressive(|s: &[u64]| mix(1, s) % s[0].max(1));
    assert_eq!(enumerate_exactly_large(&FinSet::interval(5, 9)).count(), 0);
    let w = min_homog_search(&any, &FinSet::interval(2, 9), 5);
    assert!(w.witness().is_some());
}

#[test]
fn min_search_agrees_with_exhaustive_filter() {
    for seed in 0..25u64 {
        let c = FnRegressive(move |s: &[u64]| if s[0] == 0 { 0 } else { mix(seed, s) % 2 });
        let u = FinSet::interval(1, 8);
        for k in 2..=6 {
            let expected = u
                .iter()
                .copied()
                .combinations(k)
                .find(|h| verify_min_homogeneous(&FinSet::new(h.clone()).unwrap(), &c).passed);
            let got = min_homog_search(&c, &u, k);
            assert_eq!(got.witness().map(|w| w.set.as_slice().to_vec()), expected, "seed {seed} k {k}");
        }
    }
}

#[test]
fn witness_json_round_trip() {
    let w = min_homog_search(&second_mod_min(), &FinSet::interval(2, 12), 4);
    let w = w.witness().unwrap().clone();
    let text = serde_json::to_string(&w).unwrap();
    let back: Witness = serde_json::from_str(&text).unwrap();
    assert_eq!(back, w);
    let chain = iterate_rtomega(&parity_of_min(), &FinSet::interval(2, 12), &SearchBudget::default());
    let text = serde_json::to_string(&chain).unwrap();
    assert_eq!(serde_json::from_str::<ChainWitness>(&text).unwrap(), chain);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verified_min_witnesses_reverify(seed in any::<u64>(), k in 2usize..6) {
        let c = FnRegressive(move |s: &[u64]| if s[0] == 0 { 0 } else { mix(seed, s) % s[0] });
        if let Some(w) = min_homog_search(&c, &FinSet::interval(1, 12), k).witness() {
            prop_assert!(w.verified);
            prop_assert!(verify_min_homogeneous(&w.set, &c).passed);
        }
    }

    #[test]
    fn chains_are_homogeneous(seed in any::<u64>()) {
        let c = FnExact::new(move |s: &[u64]| mix(seed, s) & 1);
        let chain = iterate_rtomega(&c, &FinSet::interval(2, 16), &SearchBudget::default());
        prop_assert!(chain.witness.verified);
        prop_assert!(verify_exact_homogeneous(&chain.witness.set, &c).passed);
        let colors: Vec<u64> = enumerate_exactly_large(&chain.witness.set).map(|s| c.color(s.as_slice())).collect();
        prop_assert!(colors.iter().all_equal());
    }
}
