//! Command-line front end. `run` parses arguments, does the work and maps
//! failures onto exit codes: 0 success, 1 usage error, 2 data or load error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::adjective::{AdjectiveClassifier, SeedLexicon, MODEL_HEADER};
use crate::baseline::DEFAULT_VOCAB_SIZE;
use crate::error::{Error, Result};
use crate::eval::{load_corpus, reproduce_tables, EvalConfig};
use crate::naive_bayes::NaiveBayesModel;
use crate::review::score_review;
use crate::similarity::{SimFn, SimilarityConfig, SimilarityEngine};
use crate::wordnet::LexicalStore;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "polarity", version, about = "Adjective-based review polarity")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Directory holding the WordNet index.*, data.* and *.exc files.
    #[arg(long, global = true, env = "POLARITY_WORDNET_DIR", default_value = "data/wordnet")]
    pub wordnet_dir: PathBuf,
    /// Corpus directory with pos/ and neg/ subdirectories.
    #[arg(long, global = true, default_value = "data/movie_reviews")]
    pub corpus_dir: PathBuf,
    /// Synonym, similar-to and see-also edge weights.
    #[arg(long, global = true, value_delimiter = ',', num_args = 3, default_values_t = [1.0, 0.9, 0.8])]
    pub weights: Vec<f64>,
    #[arg(long, global = true, default_value_t = 3)]
    pub max_depth: u32,
    #[arg(long, global = true, default_value_t = DEFAULT_VOCAB_SIZE)]
    pub vocab_size: usize,
    /// Train the adjective model on this seed's half of the lexicon instead
    /// of the whole lexicon.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Emit one JSON object per result.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Similarity of two adjectives.
    Sim {
        a: String,
        b: String,
        #[arg(long = "fn", default_value = "syn")]
        simfn: SimFn,
    },
    /// Polarity of one adjective.
    ClassifyAdjective {
        word: String,
        #[arg(long = "fn", default_value = "syn")]
        simfn: SimFn,
        /// Adjective model written by `train --out`.
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Polarity of a review read from a file, or standard input for `-`.
    ClassifyReview {
        file: String,
        #[arg(long = "fn", default_value = "syn")]
        simfn: SimFn,
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Train the adjective model and print or save it.
    Train {
        #[arg(long = "fn", default_value = "syn")]
        simfn: SimFn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate SynPI, StemPI and the baselines over seeded samples.
    Eval {
        #[arg(long, value_delimiter = ',', default_values_t = (1..=10).collect::<Vec<u64>>())]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_values_t = [25, 50, 100])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        test_size: usize,
        /// Write the per-seed CSV table here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

impl CliConfig {
    pub fn similarity_config(&self) -> SimilarityConfig {
        SimilarityConfig {
            weight_synonym: self.weights[0],
            weight_similar_to: self.weights[1],
            weight_see_also: self.weights[2],
            max_depth: self.max_depth,
        }
    }
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(_) => Failure::Usage(e.to_string()),
            other => Failure::Data(other),
        }
    }
}

/// Entry point shared by the binary and the tests. Output goes to the given
/// writers so that callers can capture it.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdin(), &mut io::stdout(), &mut io::stderr())
}

fn engine(config: &CliConfig) -> std::result::Result<SimilarityEngine, Failure> {
    let similarity = config.similarity_config();
    similarity.validate()?;
    let store = LexicalStore::load(&config.wordnet_dir)?;
    Ok(SimilarityEngine::new(Arc::new(store), similarity)?)
}

fn classifier(
    config: &CliConfig,
    engine: &SimilarityEngine,
    simfn: SimFn,
    model: Option<&PathBuf>,
) -> Result<AdjectiveClassifier> {
    if let Some(path) = model {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let model = NaiveBayesModel::from_text(&text, MODEL_HEADER)?;
        return Ok(AdjectiveClassifier { simfn, model });
    }
    let lexicon = SeedLexicon::default();
    let training = match config.seed {
        Some(seed) => lexicon.split(seed).0,
        None => lexicon.entries().to_vec(),
    };
    AdjectiveClassifier::train(engine, simfn, &training)
}

fn emit(out: &mut dyn Write, json: bool, value: &impl Serialize, human: &str) -> Result<()> {
    let line = if json {
        serde_json::to_string(value).expect("results serialize")
    } else {
        human.to_string()
    };
    writeln!(out, "{line}").map_err(|e| Error::io("<stdout>", e))
}

#[derive(Serialize)]
struct SimResult<'a> {
    a: &'a str,
    b: &'a str,
    function: &'static str,
    score: f64,
}

#[derive(Serialize)]
struct ReviewResult {
    label: String,
    weighted_score: f64,
    adjective_token_count: u32,
    adjectives: Vec<crate::review::AdjectiveProfile>,
}

#[derive(Serialize)]
struct TrainResult {
    function: &'static str,
    training_size: usize,
    most_informative: Vec<crate::naive_bayes::InformativeFeature>,
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let config = &cli.config;
    if config.vocab_size == 0 {
        return Err(Failure::Usage("--vocab-size must be positive".into()));
    }
    match &cli.command {
        Command::Sim { a, b, simfn } => {
            let engine = engine(config)?;
            let score = engine.similarity(*simfn, a, b).value();
            let result = SimResult { a, b, function: simfn.name(), score };
            emit(out, config.json, &result, &format!("{score:?}"))?;
        }
        Command::ClassifyAdjective { word, simfn, model } => {
            let engine = engine(config)?;
            let classifier = classifier(config, &engine, *simfn, model.as_ref())?;
            let prediction = classifier.classify(&engine, &word.to_lowercase());
            emit(out, config.json, &prediction, prediction.label.name())?;
        }
        Command::ClassifyReview { file, simfn, model } => {
            let mut text = String::new();
            if file == "-" {
                stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Error::io("<stdin>", e))?;
            } else {
                text = fs::read_to_string(file).map_err(|e| Error::io(file, e))?;
            }
            let engine = engine(config)?;
            let classifier = classifier(config, &engine, *simfn, model.as_ref())?;
            let verdict = score_review(&engine, &classifier, &text);
            let human = if verdict.profiles.is_empty() {
                format!("{} (no adjectives)", verdict.label)
            } else {
                format!("{} ({:.4} over {} adjective tokens)", verdict.label, verdict.weighted_score, verdict.adjective_token_count)
            };
            let result = ReviewResult {
                label: verdict.label.to_string(),
                weighted_score: verdict.weighted_score,
                adjective_token_count: verdict.adjective_token_count,
                adjectives: verdict.profiles,
            };
            emit(out, config.json, &result, &human)?;
        }
        Command::Train { simfn, out: path } => {
            let engine = engine(config)?;
            let classifier = classifier(config, &engine, *simfn, None)?;
            let text = classifier.model.to_text(MODEL_HEADER);
            if let Some(path) = path {
                fs::write(path, &text).map_err(|e| Error::io(path, e))?;
            }
            let training_size = match config.seed {
                Some(seed) => SeedLexicon::default().split(seed).0.len(),
                None => SeedLexicon::default().len(),
            };
            let result = TrainResult {
                function: simfn.name(),
                training_size,
                most_informative: classifier.model.most_informative_features(6),
            };
            let human = if path.is_some() {
                let lines: Vec<String> = result
                    .most_informative
                    .iter()
                    .map(|f| {
                        format!(
                            "{} = {}  {} : {} = {:.1} : 1",
                            f.feature, u8::from(f.value), f.best_label, f.other_label, f.ratio
                        )
                    })
                    .collect();
                lines.join("\n")
            } else {
                text.trim_end().to_string()
            };
            emit(out, config.json, &result, &human)?;
        }
        Command::Eval { seeds, sizes, test_size, output } => {
            if seeds.is_empty() || sizes.iter().any(|&s| s == 0) {
                return Err(Failure::Usage("seeds must be non-empty and sizes positive".into()));
            }
            let engine = engine(config)?;
            let corpus = load_corpus(&config.corpus_dir)?;
            let eval_config = EvalConfig {
                seeds: seeds.clone(),
                test_size: *test_size,
                baseline_sizes: sizes.clone(),
                vocab_size: config.vocab_size,
            };
            let bundle = reproduce_tables(&corpus, &engine, &SeedLexicon::default(), &eval_config)?;
            if let Some(path) = output {
                fs::write(path, bundle.to_csv()).map_err(|e| Error::io(path, e))?;
            }
            emit(out, config.json, &bundle, bundle.to_text().trim_end())?;
        }
    }
    Ok(())
}
