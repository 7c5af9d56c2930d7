//! Word-presence naive Bayes document classifier.
//!
//! The vocabulary is the `size` most frequent tokens of the training reviews;
//! each review becomes a `has(word)` vector over it, absent words included as
//! evidence.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::adjective::PolarityLabel;
use crate::error::{Error, Result};
use crate::naive_bayes::{InformativeFeature, NaiveBayesModel, Prediction, TableBuilder, DEFAULT_SMOOTHING};

fn featurize(vocabulary: &[String], review: &[String]) -> Vec<bool> {
    let present: HashSet<&str> = review.iter().map(String::as_str).collect();
    vocabulary.iter().map(|w| present.contains(w.as_str())).collect()
}

pub const DEFAULT_VOCAB_SIZE: usize = 2000;

/// Header of the baseline model text format.
pub const MODEL_HEADER: &str = "baseline-nb v1";

/// Tokens ranked by total count (descending, ties lexicographic), truncated
/// to `size`.
pub fn build_vocabulary<T: AsRef<[String]>>(reviews: &[T], size: usize) -> Result<Vec<String>> {
    if size == 0 {
        return Err(Error::InvalidConfig("vocabulary size must be positive".into()));
    }
    if reviews.is_empty() {
        return Err(Error::Training("no reviews to build a vocabulary from".into()));
    }
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for review in reviews {
        for token in review.as_ref() {
            *counts.entry(token.as_str()).or_insert(0) += 1;
        }
    }
    let mut ranked: Vec<(&str, usize)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    Ok(ranked
        .into_iter()
        .take(size)
        .map(|(t, _)| t.to_string())
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct VocabularyModel {
    vocabulary: Vec<String>,
    nb: NaiveBayesModel,
}

const LABELS: [PolarityLabel; 2] = [PolarityLabel::Negative, PolarityLabel::Positive];

impl VocabularyModel {
    pub fn vocabulary(&self) -> &[String] {
        &self.vocabulary
    }

    pub fn naive_bayes(&self) -> &NaiveBayesModel {
        &self.nb
    }

    pub fn most_informative_features(&self, k: usize) -> Vec<InformativeFeature> {
        self.nb.most_informative_features(k)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(MODEL_HEADER);
        out.push('\n');
        for (rank, token) in self.vocabulary.iter().enumerate() {
            let _ = writeln!(out, "vocab\t{}\t{token}", rank + 1);
        }
        self.nb.write_records(&mut out);
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, first)) if first.trim_end() == MODEL_HEADER => {}
            _ => return Err(Error::model(1, format!("expected header `{MODEL_HEADER}`"))),
        }
        let mut vocabulary: Vec<(usize, String)> = Vec::new();
        let mut builder = TableBuilder::default();
        for (line_no, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if let ["vocab", rank, token] = fields.as_slice() {
                let rank = rank
                    .parse()
                    .map_err(|_| Error::model(line_no, format!("bad rank `{rank}`")))?;
                vocabulary.push((rank, token.to_string()));
            } else if !builder.record(line_no, &fields)? {
                return Err(Error::model(line_no, format!("unknown record `{}`", fields[0])));
            }
        }
        vocabulary.sort();
        let vocabulary: Vec<String> = vocabulary.into_iter().map(|(_, t)| t).collect();
        let nb = builder.finish()?;
        if nb.features() != vocabulary.as_slice() {
            return Err(Error::model(0, "vocabulary does not match conditional features"));
        }
        Ok(VocabularyModel { vocabulary, nb })
    }
}

/// Train on tokenized reviews labeled positive or negative.
pub fn train_baseline(
    labeled_reviews: &[(Vec<String>, PolarityLabel)],
    vocab_size: usize,
) -> Result<VocabularyModel> {
    if labeled_reviews
        .iter()
        .any(|(_, l)| *l == PolarityLabel::Neutral)
    {
        return Err(Error::Training("baseline labels must be positive or negative".into()));
    }
    for label in LABELS {
        if !labeled_reviews.iter().any(|(_, l)| *l == label) {
            return Err(Error::Training(format!(
                "class absent from training set: {label}"
            )));
        }
    }
    let tokens: Vec<&[String]> = labeled_reviews.iter().map(|(t, _)| t.as_slice()).collect();
    let vocabulary = build_vocabulary(&tokens, vocab_size)?;
    let rows: Vec<(Vec<bool>, PolarityLabel)> = labeled_reviews
        .iter()
        .map(|(t, l)| (featurize(&vocabulary, t), *l))
        .collect();
    let nb = NaiveBayesModel::train(&vocabulary, &LABELS, &rows, DEFAULT_SMOOTHING)?;
    Ok(VocabularyModel { vocabulary, nb })
}

pub fn predict_baseline(model: &VocabularyModel, review: &[String]) -> Prediction {
    model.nb.predict(&featurize(&model.vocabulary, review))
}
