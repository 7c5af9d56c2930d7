//! Review polarity identification from the polarity of the adjectives a
//! review contains.
//!
//! Adjectives are compared against three anchor adjectives (`excellent`,
//! `mediocre`, `poor`) with WordNet-based similarity functions, the binarized
//! similarities feed a small naive Bayes classifier trained on a 30-word seed
//! lexicon, and a review's verdict is the frequency-weighted average of its
//! adjectives' polarity scores. A word-presence naive Bayes document
//! classifier is included as a baseline.

pub mod adjective;
pub mod baseline;
pub mod cli;
pub mod error;
pub mod eval;
pub mod naive_bayes;
pub mod review;
pub mod similarity;
pub mod text;
pub mod wordnet;

pub use adjective::{AnchorFeatureVector, PolarityLabel, SeedLexicon};
pub use error::{Error, Result};
pub use naive_bayes::NaiveBayesModel;
pub use review::ReviewVerdict;
pub use similarity::{SimFn, SimilarityConfig, SimilarityEngine, SimilarityScore};
pub use wordnet::{LexicalStore, PartOfSpeech, Synset};
