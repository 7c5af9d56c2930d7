//! Review-level polarity from the frequency-weighted polarity of its
//! adjectives.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::adjective::{AdjectiveClassifier, PolarityLabel};
use crate::similarity::SimilarityEngine;
use crate::text::tokenize;
use crate::wordnet::{LexicalStore, PartOfSpeech};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjectiveProfile {
    pub lemma: String,
    pub frequency: u32,
    pub label: PolarityLabel,
    pub score: i32,
}

impl AdjectiveProfile {
    pub fn new(lemma: impl Into<String>, frequency: u32, label: PolarityLabel) -> Self {
        AdjectiveProfile {
            lemma: lemma.into(),
            frequency,
            label,
            score: label.score(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReviewVerdict {
    pub weighted_score: f64,
    pub label: PolarityLabel,
    pub profiles: Vec<AdjectiveProfile>,
    pub adjective_token_count: u32,
}

impl ReviewVerdict {
    /// Weighted average of `+1/0/-1` scores with frequencies as weights.
    /// Positive above zero, negative below, neutral at exactly zero.
    pub fn aggregate(profiles: Vec<AdjectiveProfile>) -> Self {
        let tokens: u32 = profiles.iter().map(|p| p.frequency).sum();
        let weighted_score = if tokens == 0 {
            0.0
        } else {
            let total: i64 = profiles
                .iter()
                .map(|p| i64::from(p.frequency) * i64::from(p.score))
                .sum();
            total as f64 / f64::from(tokens)
        };
        let label = if weighted_score > 0.0 {
            PolarityLabel::Positive
        } else if weighted_score < 0.0 {
            PolarityLabel::Negative
        } else {
            PolarityLabel::Neutral
        };
        ReviewVerdict {
            weighted_score,
            label,
            profiles,
            adjective_token_count: tokens,
        }
    }
}

/// Adjective lemmas of `text` with their occurrence counts. A token counts
/// when it has any adjective reading, under its first base form.
pub fn extract_adjectives(store: &LexicalStore, text: &str) -> BTreeMap<String, u32> {
    let mut counts = BTreeMap::new();
    for token in tokenize(text) {
        if let Some(lemma) = store.morphy(&token, PartOfSpeech::Adjective).into_iter().next() {
            *counts.entry(lemma).or_insert(0) += 1;
        }
    }
    counts
}

pub fn score_review(
    engine: &SimilarityEngine,
    classifier: &AdjectiveClassifier,
    text: &str,
) -> ReviewVerdict {
    let profiles = extract_adjectives(engine.store(), text)
        .into_iter()
        .map(|(lemma, frequency)| {
            let label = classifier.classify(engine, &lemma).label;
            AdjectiveProfile::new(lemma, frequency, label)
        })
        .collect();
    ReviewVerdict::aggregate(profiles)
}
