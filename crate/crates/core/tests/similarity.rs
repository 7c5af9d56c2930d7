mod common;

use std::sync::Arc;

use polarity_core::similarity::{self, SimFn};
use polarity_core::{SimilarityConfig, SimilarityEngine};
use proptest::prelude::*;
use proptest::sample::select;

fn adjective() -> impl Strategy<Value = String> {
    select(common::adjective_lemmas())
}

/// Adjectives with at least one synonym-graph edge, so that pairs drawn
/// from them exercise non-trivial paths.
fn connected_adjective() -> impl Strategy<Value = String> {
    static CONNECTED: std::sync::OnceLock<Vec<String>> = std::sync::OnceLock::new();
    let pool = CONNECTED.get_or_init(|| {
        let oracle = common::PathOracle::new(&common::store(), &SimilarityConfig::default());
        common::adjective_lemmas()
            .iter()
            .filter(|l| oracle.neighbor_count(l) > 0)
            .cloned()
            .collect()
    });
    select(pool.as_slice())
}

fn engine_with_depth(depth: u32) -> SimilarityEngine {
    let config = SimilarityConfig { max_depth: depth, ..SimilarityConfig::default() };
    SimilarityEngine::new(common::store(), config).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn range_identity_symmetry(a in adjective(), b in adjective()) {
        let e = common::engine();
        for f in SimFn::ALL {
            let ab = e.similarity(f, &a, &b).value();
            let ba = e.similarity(f, &b, &a).value();
            prop_assert!((0.0..=1.0).contains(&ab), "{f} {a} {b} = {ab}");
            prop_assert_eq!(ab, ba);
            prop_assert_eq!(e.similarity(f, &a, &a).value(), 1.0);
        }
    }

    #[test]
    fn deeper_search_never_lowers_syn_sim(a in connected_adjective(), b in connected_adjective()) {
        static ENGINES: std::sync::OnceLock<Vec<SimilarityEngine>> = std::sync::OnceLock::new();
        let engines = ENGINES.get_or_init(|| (1..=4).map(engine_with_depth).collect());
        let scores: Vec<f64> = engines.iter().map(|e| e.syn_sim(&a, &b).value()).collect();
        for pair in scores.windows(2) {
            prop_assert!(pair[0] <= pair[1], "{a} {b} {scores:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn syn_sim_matches_path_enumeration(a in connected_adjective(), b in connected_adjective()) {
        static ORACLE: std::sync::OnceLock<common::PathOracle> = std::sync::OnceLock::new();
        let oracle = ORACLE.get_or_init(|| {
            common::PathOracle::new(&common::store(), &SimilarityConfig::default())
        });
        let expected = oracle.syn_sim(&a, &b);
        let got = common::engine().syn_sim(&a, &b).value();
        prop_assert!((got - expected).abs() < 1e-12, "{a} {b}: {got} vs {expected}");
    }

    #[test]
    fn memoized_engine_equals_uncached_functions(a in connected_adjective(), b in connected_adjective()) {
        let store = common::store();
        let config = SimilarityConfig::default();
        let e = common::engine();
        prop_assert_eq!(e.syn_sim(&a, &b), similarity::syn_sim(&store, &config, &a, &b));
        prop_assert_eq!(e.stem_sim(&a, &b), similarity::stem_sim(&store, &a, &b));
        let cached = e.stems_of(&a);
        let uncached = similarity::stems_of(&store, &a);
        prop_assert_eq!(cached.as_slice(), uncached.as_slice());
        // Second query comes from the pair cache.
        prop_assert_eq!(e.syn_sim(&a, &b), similarity::syn_sim(&store, &config, &a, &b));
    }
}

#[test]
fn reachability_is_sound() {
    // Every lemma with a positive score from "good" is linked to it by a
    // chain of weighted-neighbor edges of at most three steps.
    let e = common::engine();
    let first: Vec<String> = e.weighted_neighbors("good").iter().map(|(l, _)| l.clone()).collect();
    for (lemma, weight) in e.weighted_neighbors("good").iter() {
        assert!(e.syn_sim("good", lemma).value() >= *weight);
    }
    for lemma in common::adjective_lemmas().iter().step_by(97) {
        let score = e.syn_sim("good", lemma).value();
        if score == 0.0 || lemma == "good" {
            continue;
        }
        let linked = first.iter().any(|n| {
            n == lemma
                || e.weighted_neighbors(n).iter().any(|(m, _)| {
                    m == lemma || e.weighted_neighbors(m).iter().any(|(k, _)| k == lemma)
                })
        });
        assert!(linked, "good -> {lemma} scored {score} without a path");
    }
}

#[test]
fn exact_fixtures() {
    let e = common::engine();
    assert_eq!(e.syn_sim("amazing", "awesome").value(), 1.0);
    assert_eq!(e.stem_sim("mediocre", "average").value(), 1.0);
    assert_eq!(e.syn_sim("good", "qwertyuiop").value(), 0.0);
    assert_eq!(e.stem_sim("qwertyuiop", "good").value(), 0.0);
}

#[test]
fn shared_store_between_engines() {
    let store = common::store();
    let a = SimilarityEngine::new(Arc::clone(&store), SimilarityConfig::default()).unwrap();
    let b = SimilarityEngine::new(store, SimilarityConfig { max_depth: 1, ..Default::default() }).unwrap();
    assert!(a.syn_sim("good", "nice").value() >= b.syn_sim("good", "nice").value());
    let bad = SimilarityConfig { weight_see_also: 0.95, ..Default::default() };
    assert!(SimilarityEngine::new(common::store(), bad).is_err());
}

#[test]
fn concurrent_queries_agree() {
    let e = common::engine();
    let pairs = [("good", "nice"), ("bad", "poor"), ("ugly", "beautiful"), ("fine", "okay")];
    let expected: Vec<f64> = pairs.iter().map(|(a, b)| e.syn_sim(a, b).value()).collect();
    std::thread::scope(|s| {
        for _ in 0..4 {
            s.spawn(|| {
                for ((a, b), want) in pairs.iter().zip(&expected) {
                    assert_eq!(e.syn_sim(a, b).value(), *want);
                    assert!(e.stem_sim(a, b).value() <= 1.0);
                }
            });
        }
    });
}
