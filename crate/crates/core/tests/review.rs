mod common;

use std::collections::BTreeMap;

use polarity_core::adjective::{AdjectiveClassifier, PolarityLabel, SeedLexicon};
use polarity_core::review::{extract_adjectives, score_review, ReviewVerdict};
use polarity_core::SimFn;
use proptest::prelude::*;

fn classifier(simfn: SimFn) -> &'static AdjectiveClassifier {
    static CLASSIFIERS: std::sync::OnceLock<[AdjectiveClassifier; 2]> = std::sync::OnceLock::new();
    let pair = CLASSIFIERS.get_or_init(|| {
        let training = SeedLexicon::default().split(1).0;
        SimFn::ALL.map(|f| AdjectiveClassifier::train(common::engine(), f, &training).unwrap())
    });
    &pair[SimFn::ALL.iter().position(|&f| f == simfn).unwrap()]
}

fn same_verdict(a: &ReviewVerdict, b: &ReviewVerdict) -> bool {
    a.label == b.label && (a.weighted_score - b.weighted_score).abs() < 1e-12
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn duplicating_the_text_keeps_the_verdict(
        index in 0..common::corpus().len(),
        use_syn in any::<bool>(),
    ) {
        let simfn = if use_syn { SimFn::Syn } else { SimFn::Stem };
        let text = &common::corpus()[index].text;
        let once = score_review(common::engine(), classifier(simfn), text);
        let twice = score_review(common::engine(), classifier(simfn), &format!("{text}\n{text}"));
        prop_assert!(same_verdict(&once, &twice));
        prop_assert_eq!(twice.adjective_token_count, 2 * once.adjective_token_count);
    }

    #[test]
    fn sentence_order_is_irrelevant(
        index in 0..common::corpus().len(),
        shuffle_seed in any::<u64>(),
    ) {
        use rand::{seq::SliceRandom, SeedableRng};
        let text = &common::corpus()[index].text;
        let mut sentences: Vec<&str> = text.split_inclusive(['.', '!', '?']).collect();
        sentences.shuffle(&mut rand::rngs::StdRng::seed_from_u64(shuffle_seed));
        let permuted = sentences.join(" ");
        let a = score_review(common::engine(), classifier(SimFn::Syn), text);
        let b = score_review(common::engine(), classifier(SimFn::Syn), &permuted);
        prop_assert!(same_verdict(&a, &b));
    }
}

#[test]
fn comparatives_are_lemmatized() {
    let store = common::store();
    assert_eq!(extract_adjectives(&store, "better"), BTreeMap::from([("good".to_string(), 1)]));
    let counts = extract_adjectives(&store, "The nicest, NICE and nicer plot.");
    assert_eq!(counts.get("nice"), Some(&3));
}

#[test]
fn empty_review_is_neutral() {
    let v = score_review(common::engine(), classifier(SimFn::Syn), "");
    assert_eq!((v.label, v.weighted_score, v.adjective_token_count), (PolarityLabel::Neutral, 0.0, 0));
    let v = score_review(common::engine(), classifier(SimFn::Syn), "12345 ... !!!");
    assert_eq!(v.label, PolarityLabel::Neutral);
}

#[test]
fn verdict_is_the_weighted_mean_of_profiles() {
    let text = &common::corpus()[0].text;
    let v = score_review(common::engine(), classifier(SimFn::Syn), text);
    let tokens: u32 = v.profiles.iter().map(|p| p.frequency).sum();
    let total: i64 = v.profiles.iter().map(|p| i64::from(p.frequency) * i64::from(p.score)).sum();
    assert_eq!(tokens, v.adjective_token_count);
    assert!((v.weighted_score - total as f64 / f64::from(tokens)).abs() < 1e-12);
}
