//! Corpus ingestion, seeded sampling and the review-level evaluation.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::adjective::{AdjectiveClassifier, PolarityLabel, SeedLexicon};
use crate::baseline::{predict_baseline, train_baseline, DEFAULT_VOCAB_SIZE};
use crate::error::{Error, Result};
use crate::review::score_review;
use crate::similarity::{SimFn, SimilarityEngine};
use crate::text::tokenize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledReview {
    /// Path relative to the corpus root, e.g. `pos/cv000_29590.txt`.
    pub id: String,
    pub text: String,
    pub gold: PolarityLabel,
}

const CLASS_DIRS: [(&str, PolarityLabel); 2] =
    [("neg", PolarityLabel::Negative), ("pos", PolarityLabel::Positive)];

/// Read the `neg/` and `pos/` class directories. Reviews come back ordered
/// by label directory, then by file name.
pub fn load_corpus(directory: impl AsRef<Path>) -> Result<Vec<LabeledReview>> {
    let directory = directory.as_ref();
    let mut corpus = Vec::new();
    for (name, gold) in CLASS_DIRS {
        let dir = directory.join(name);
        if !dir.is_dir() {
            return Err(Error::Corpus(format!("missing subdirectory {}", dir.display())));
        }
        let mut files: Vec<_> = fs::read_dir(&dir)
            .map_err(|e| Error::io(&dir, e))?
            .map(|entry| entry.map(|e| e.path()).map_err(|e| Error::io(&dir, e)))
            .collect::<Result<_>>()?;
        files.retain(|p| p.is_file());
        files.sort();
        if files.is_empty() {
            return Err(Error::Corpus(format!("no reviews under {name}")));
        }
        for path in files {
            let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
            let file_name = path.file_name().unwrap_or_default().to_string_lossy();
            corpus.push(LabeledReview {
                id: format!("{name}/{file_name}"),
                text,
                gold,
            });
        }
    }
    Ok(corpus)
}

/// Seeded permutation of the corpus indices.
fn shuffled_indices(len: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..len).collect();
    order.shuffle(&mut StdRng::seed_from_u64(seed));
    order
}

/// Corpus indices for one seed: the test sample (the same reviews
/// `sample_reviews` returns) and the remaining pool, in shuffled order, from
/// which baseline training sets are taken as prefixes.
pub fn seed_partition(len: usize, seed: u64, test_size: usize) -> (Vec<usize>, Vec<usize>) {
    let mut order = shuffled_indices(len, seed);
    let pool = order.split_off(test_size.min(len));
    (order, pool)
}

/// The first `n` reviews of a seeded shuffle.
pub fn sample_reviews(corpus: &[LabeledReview], n: usize, seed: u64) -> Result<Vec<LabeledReview>> {
    if n > corpus.len() {
        return Err(Error::Evaluation(format!(
            "cannot sample {n} reviews from a corpus of {}",
            corpus.len()
        )));
    }
    Ok(shuffled_indices(corpus.len(), seed)
        .into_iter()
        .take(n)
        .map(|i| corpus[i].clone())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub method: String,
    pub n: usize,
    pub accuracy: f64,
    pub false_positive_rate: f64,
    pub false_negative_rate: f64,
    pub seed: u64,
}

/// Accuracy, false-positive and false-negative rates of `predictions`
/// against binary `gold`. A false positive is a gold-negative review not
/// predicted negative; a false negative is a gold-positive review not
/// predicted positive. The three rates therefore sum to one.
pub fn evaluate(
    method: &str,
    seed: u64,
    predictions: &[(String, PolarityLabel)],
    gold: &[(String, PolarityLabel)],
) -> Result<EvalReport> {
    if predictions.is_empty() {
        return Err(Error::Evaluation("no predictions to evaluate".into()));
    }
    if predictions.len() != gold.len() {
        return Err(Error::Evaluation(format!(
            "{} predictions for {} gold labels",
            predictions.len(),
            gold.len()
        )));
    }
    let gold_by_id: HashMap<&str, PolarityLabel> =
        gold.iter().map(|(id, l)| (id.as_str(), *l)).collect();
    if gold_by_id.len() != gold.len() {
        return Err(Error::Evaluation("duplicate id in gold labels".into()));
    }
    let (mut correct, mut fp, mut fneg) = (0usize, 0usize, 0usize);
    let mut seen = std::collections::HashSet::new();
    for (id, predicted) in predictions {
        if !seen.insert(id.as_str()) {
            return Err(Error::Evaluation(format!("duplicate prediction for {id}")));
        }
        let truth = *gold_by_id
            .get(id.as_str())
            .ok_or_else(|| Error::Evaluation(format!("no gold label for {id}")))?;
        match truth {
            PolarityLabel::Neutral => {
                return Err(Error::Evaluation(format!("gold label of {id} is not binary")))
            }
            _ if *predicted == truth => correct += 1,
            PolarityLabel::Negative => fp += 1,
            PolarityLabel::Positive => fneg += 1,
        }
    }
    let n = predictions.len();
    Ok(EvalReport {
        method: method.to_string(),
        n,
        accuracy: correct as f64 / n as f64,
        false_positive_rate: fp as f64 / n as f64,
        false_negative_rate: fneg as f64 / n as f64,
        seed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalConfig {
    pub seeds: Vec<u64>,
    pub test_size: usize,
    /// Baseline training-set sizes, one baseline row per entry.
    pub baseline_sizes: Vec<usize>,
    pub vocab_size: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            seeds: (1..=10).collect(),
            test_size: 100,
            baseline_sizes: vec![25, 50, 100],
            vocab_size: DEFAULT_VOCAB_SIZE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeanRow {
    pub method: String,
    pub seeds: usize,
    pub accuracy: f64,
    pub false_positive_rate: f64,
    pub false_negative_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportBundle {
    /// Seed-major, method order within each seed matching `means`.
    pub reports: Vec<EvalReport>,
    pub means: Vec<MeanRow>,
}

impl ReportBundle {
    pub fn mean(&self, method: &str) -> Option<&MeanRow> {
        self.means.iter().find(|m| m.method == method)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,seed,n,accuracy,fp,fn\n");
        for r in &self.reports {
            let _ = writeln!(
                out,
                "{},{},{},{:.6},{:.6},{:.6}",
                r.method, r.seed, r.n, r.accuracy, r.false_positive_rate, r.false_negative_rate
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let width = self.means.iter().map(|m| m.method.len()).max().unwrap_or(6).max(6);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:>8}  {:>6}  {:>6}  {:>5}", "method", "accuracy", "fp", "fn", "seeds");
        for m in &self.means {
            let _ = writeln!(
                out,
                "{:<width$}  {:>8.4}  {:>6.4}  {:>6.4}  {:>5}",
                m.method, m.accuracy, m.false_positive_rate, m.false_negative_rate, m.seeds
            );
        }
        out
    }
}

pub fn method_names(config: &EvalConfig) -> Vec<String> {
    let mut names = vec!["SynPI".to_string(), "StemPI".to_string()];
    names.extend(config.baseline_sizes.iter().map(|k| format!("baseline-{k}")));
    names
}

fn run_seed(
    corpus: &[LabeledReview],
    engine: &SimilarityEngine,
    lexicon: &SeedLexicon,
    config: &EvalConfig,
    seed: u64,
) -> Result<Vec<EvalReport>> {
    let (test_idx, pool) = seed_partition(corpus.len(), seed, config.test_size);
    let test: Vec<&LabeledReview> = test_idx.iter().map(|&i| &corpus[i]).collect();
    let gold: Vec<(String, PolarityLabel)> = test.iter().map(|r| (r.id.clone(), r.gold)).collect();

    let (train_words, _) = lexicon.split(seed);
    let mut reports = Vec::new();
    for (method, simfn) in [("SynPI", SimFn::Syn), ("StemPI", SimFn::Stem)] {
        let classifier = AdjectiveClassifier::train(engine, simfn, &train_words)?;
        let predictions: Vec<_> = test
            .iter()
            .map(|r| (r.id.clone(), score_review(engine, &classifier, &r.text).label))
            .collect();
        reports.push(evaluate(method, seed, &predictions, &gold)?);
    }

    let test_tokens: Vec<Vec<String>> = test.iter().map(|r| tokenize(&r.text)).collect();
    for &size in &config.baseline_sizes {
        // Training reviews come from outside the test sample.
        let training: Vec<(Vec<String>, PolarityLabel)> = pool
            .iter()
            .take(size)
            .map(|&i| (tokenize(&corpus[i].text), corpus[i].gold))
            .collect();
        let model = train_baseline(&training, config.vocab_size)?;
        let predictions: Vec<_> = test
            .iter()
            .zip(&test_tokens)
            .map(|(r, tokens)| (r.id.clone(), predict_baseline(&model, tokens).label))
            .collect();
        reports.push(evaluate(&format!("baseline-{size}"), seed, &predictions, &gold)?);
    }
    Ok(reports)
}

/// Run every method for every seed and average per method.
pub fn reproduce_tables(
    corpus: &[LabeledReview],
    engine: &SimilarityEngine,
    lexicon: &SeedLexicon,
    config: &EvalConfig,
) -> Result<ReportBundle> {
    if config.seeds.is_empty() {
        return Err(Error::Evaluation("no seeds given".into()));
    }
    let largest = config.baseline_sizes.iter().copied().max().unwrap_or(0);
    if config.test_size == 0 || config.test_size + largest > corpus.len() {
        return Err(Error::Evaluation(format!(
            "corpus of {} reviews cannot hold a test sample of {} plus {largest} training reviews",
            corpus.len(),
            config.test_size
        )));
    }
    let mut reports = Vec::new();
    for &seed in &config.seeds {
        reports.extend(run_seed(corpus, engine, lexicon, config, seed)?);
    }
    let means = method_names(config)
        .into_iter()
        .map(|method| {
            let rows: Vec<&EvalReport> = reports.iter().filter(|r| r.method == method).collect();
            let k = rows.len() as f64;
            MeanRow {
                seeds: rows.len(),
                accuracy: rows.iter().map(|r| r.accuracy).sum::<f64>() / k,
                false_positive_rate: rows.iter().map(|r| r.false_positive_rate).sum::<f64>() / k,
                false_negative_rate: rows.iter().map(|r| r.false_negative_rate).sum::<f64>() / k,
                method,
            }
        })
        .collect();
    Ok(ReportBundle { reports, means })
}
