//! Adjective polarity from similarity to the anchor adjectives.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::naive_bayes::{NaiveBayesModel, Prediction, DEFAULT_SMOOTHING};
use crate::similarity::{SimFn, SimilarityEngine};

/// Reference adjectives for positive, neutral and negative polarity.
pub const ANCHORS: [&str; 3] = ["excellent", "mediocre", "poor"];

/// Header of the adjective model text format.
pub const MODEL_HEADER: &str = "polarity-nb v1";

/// Three-way polarity. Ordering is the tie-break order used by every
/// classifier: negative first.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum PolarityLabel {
    Negative,
    Neutral,
    Positive,
}

impl PolarityLabel {
    pub const ALL: [PolarityLabel; 3] = [
        PolarityLabel::Negative,
        PolarityLabel::Neutral,
        PolarityLabel::Positive,
    ];

    pub fn score(self) -> i32 {
        match self {
            PolarityLabel::Positive => 1,
            PolarityLabel::Neutral => 0,
            PolarityLabel::Negative => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PolarityLabel::Positive => "positive",
            PolarityLabel::Neutral => "neutral",
            PolarityLabel::Negative => "negative",
        }
    }
}

impl fmt::Display for PolarityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolarityLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "positive" | "pos" => Ok(PolarityLabel::Positive),
            "neutral" | "nut" => Ok(PolarityLabel::Neutral),
            "negative" | "neg" => Ok(PolarityLabel::Negative),
            other => Err(format!("unknown polarity label `{other}`")),
        }
    }
}

/// Similarities of one adjective to (excellent, mediocre, poor).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnchorFeatureVector {
    pub excellent_sim: f64,
    pub mediocre_sim: f64,
    pub poor_sim: f64,
    /// 1 where the raw similarity is strictly positive.
    pub binarized: [u8; 3],
}

impl AnchorFeatureVector {
    pub fn from_raw(raw: [f64; 3]) -> Self {
        AnchorFeatureVector {
            excellent_sim: raw[0],
            mediocre_sim: raw[1],
            poor_sim: raw[2],
            binarized: raw.map(|s| u8::from(s > 0.0)),
        }
    }

    pub fn raw(&self) -> [f64; 3] {
        [self.excellent_sim, self.mediocre_sim, self.poor_sim]
    }

    pub fn flags(&self) -> [bool; 3] {
        self.binarized.map(|b| b == 1)
    }
}

pub fn anchor_features(engine: &SimilarityEngine, simfn: SimFn, adjective: &str) -> AnchorFeatureVector {
    AnchorFeatureVector::from_raw(ANCHORS.map(|anchor| engine.similarity(simfn, adjective, anchor).value()))
}

pub fn anchor_feature_names() -> Vec<String> {
    ANCHORS.iter().map(|a| a.to_string()).collect()
}

/// Train the three-label adjective model on binarized anchor features.
pub fn train_nb(examples: &[([u8; 3], PolarityLabel)]) -> Result<NaiveBayesModel> {
    let rows: Vec<([bool; 3], PolarityLabel)> = examples
        .iter()
        .map(|(b, l)| (b.map(|v| v != 0), *l))
        .collect();
    NaiveBayesModel::train(&anchor_feature_names(), &PolarityLabel::ALL, &rows, DEFAULT_SMOOTHING)
}

pub fn predict(model: &NaiveBayesModel, binarized: [u8; 3]) -> Prediction {
    model.predict(&binarized.map(|v| v != 0))
}

/// Hand-labeled seed adjectives, ten per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedLexicon {
    entries: Vec<(String, PolarityLabel)>,
}

const POSITIVE_SEEDS: [&str; 10] = [
    "good",
    "nice",
    "awesome",
    "excellent",
    "great",
    "perfect",
    "precious",
    "satisfactory",
    "exceptional",
    "outstanding",
];
const NEUTRAL_SEEDS: [&str; 10] = [
    "mediocre",
    "average",
    "enough",
    "fair",
    "okay",
    "ordinary",
    "fine",
    "suitable",
    "reasonable",
    "neutral",
];
const NEGATIVE_SEEDS: [&str; 10] = [
    "bad",
    "awful",
    "defective",
    "faulty",
    "poor",
    "unsatisfactory",
    "imperfect",
    "weak",
    "bitter",
    "terrible",
];

impl SeedLexicon {
    pub fn new(entries: Vec<(String, PolarityLabel)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (word, _) in &entries {
            if !seen.insert(word.as_str()) {
                return Err(Error::InvalidConfig(format!("duplicate seed adjective `{word}`")));
            }
        }
        for label in PolarityLabel::ALL {
            if !entries.iter().any(|(_, l)| *l == label) {
                return Err(Error::InvalidConfig(format!("no seed adjectives labeled {label}")));
            }
        }
        Ok(SeedLexicon { entries })
    }

    pub fn entries(&self) -> &[(String, PolarityLabel)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Deterministic shuffle for `seed`, split in half: (train, test).
    pub fn split(&self, seed: u64) -> (Vec<(String, PolarityLabel)>, Vec<(String, PolarityLabel)>) {
        let mut shuffled = self.entries.clone();
        shuffled.shuffle(&mut StdRng::seed_from_u64(seed));
        let test = shuffled.split_off(shuffled.len() / 2);
        (shuffled, test)
    }
}

impl Default for SeedLexicon {
    fn default() -> Self {
        let entries = [
            (POSITIVE_SEEDS, PolarityLabel::Positive),
            (NEUTRAL_SEEDS, PolarityLabel::Neutral),
            (NEGATIVE_SEEDS, PolarityLabel::Negative),
        ]
        .iter()
        .flat_map(|(words, label)| words.iter().map(move |w| (w.to_string(), *label)))
        .collect();
        SeedLexicon { entries }
    }
}

/// A trained adjective model together with the similarity function whose
/// features it was trained on.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjectiveClassifier {
    pub simfn: SimFn,
    pub model: NaiveBayesModel,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjectivePrediction {
    pub adjective: String,
    pub features: AnchorFeatureVector,
    pub label: PolarityLabel,
    pub posteriors: Vec<(PolarityLabel, f64)>,
}

impl AdjectiveClassifier {
    pub fn train(
        engine: &SimilarityEngine,
        simfn: SimFn,
        training: &[(String, PolarityLabel)],
    ) -> Result<Self> {
        let examples: Vec<([u8; 3], PolarityLabel)> = training
            .iter()
            .map(|(word, label)| (anchor_features(engine, simfn, word).binarized, *label))
            .collect();
        Ok(AdjectiveClassifier {
            simfn,
            model: train_nb(&examples)?,
        })
    }

    pub fn classify(&self, engine: &SimilarityEngine, adjective: &str) -> AdjectivePrediction {
        let features = anchor_features(engine, self.simfn, adjective);
        let prediction = predict(&self.model, features.binarized);
        AdjectivePrediction {
            adjective: adjective.to_string(),
            features,
            label: prediction.label,
            posteriors: prediction.posteriors,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SplitOutcome {
    pub seed: u64,
    pub accuracy: f64,
    pub classifier: AdjectiveClassifier,
    /// (adjective, gold, predicted) for every held-out entry.
    pub predictions: Vec<(String, PolarityLabel, PolarityLabel)>,
}

/// Train on a seeded half of the lexicon and score the other half.
pub fn evaluate_split(
    engine: &SimilarityEngine,
    lexicon: &SeedLexicon,
    simfn: SimFn,
    seed: u64,
) -> Result<SplitOutcome> {
    let (train, test) = lexicon.split(seed);
    let classifier = AdjectiveClassifier::train(engine, simfn, &train)?;
    let predictions: Vec<_> = test
        .iter()
        .map(|(word, gold)| (word.clone(), *gold, classifier.classify(engine, word).label))
        .collect();
    let correct = predictions.iter().filter(|(_, g, p)| g == p).count();
    Ok(SplitOutcome {
        seed,
        accuracy: correct as f64 / predictions.len() as f64,
        classifier,
        predictions,
    })
}
