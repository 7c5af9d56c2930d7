//! Shared data access and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use polarity_core::adjective::PolarityLabel;
use polarity_core::eval::{load_corpus, LabeledReview};
use polarity_core::{LexicalStore, PartOfSpeech, SimilarityConfig, SimilarityEngine};

/// Root of the fetched data, `POLARITY_DATA_DIR` or `<workspace>/data`.
pub fn data_dir() -> PathBuf {
    std::env::var_os("POLARITY_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

fn require(path: PathBuf) -> PathBuf {
    assert!(
        path.is_dir(),
        "{} not found; run scripts/fetch_data.sh from the repository root \
         (or point POLARITY_DATA_DIR at a directory holding wordnet/ and movie_reviews/)",
        path.display()
    );
    path
}

pub fn wordnet_dir() -> PathBuf {
    require(data_dir().join("wordnet"))
}

pub fn corpus_dir() -> PathBuf {
    require(data_dir().join("movie_reviews"))
}

pub fn store() -> Arc<LexicalStore> {
    static STORE: OnceLock<Arc<LexicalStore>> = OnceLock::new();
    STORE
        .get_or_init(|| Arc::new(LexicalStore::load(wordnet_dir()).expect("WordNet loads")))
        .clone()
}

pub fn engine() -> &'static SimilarityEngine {
    static ENGINE: OnceLock<SimilarityEngine> = OnceLock::new();
    ENGINE.get_or_init(|| {
        SimilarityEngine::new(store(), SimilarityConfig::default()).expect("default config is valid")
    })
}

pub fn corpus() -> &'static [LabeledReview] {
    static CORPUS: OnceLock<Vec<LabeledReview>> = OnceLock::new();
    CORPUS.get_or_init(|| load_corpus(corpus_dir()).expect("corpus loads"))
}

/// Every adjective lemma in the index, sorted.
pub fn adjective_lemmas() -> &'static [String] {
    static LEMMAS: OnceLock<Vec<String>> = OnceLock::new();
    LEMMAS.get_or_init(|| {
        let store = store();
        let mut lemmas: Vec<String> = store
            .index_entries(PartOfSpeech::Adjective)
            .map(|e| e.lemma.clone())
            .collect();
        lemmas.sort();
        lemmas
    })
}

/// Brute-force SynSim: enumerates every walk of up to `max_depth` edges in
/// both directions and keeps the best weight product. Built directly from
/// synset members and raw pointer records rather than the library's
/// neighbor lists.
pub struct PathOracle {
    edges: HashMap<String, Vec<(String, f64)>>,
    max_depth: u32,
}

impl PathOracle {
    pub fn new(store: &LexicalStore, config: &SimilarityConfig) -> Self {
        let mut edges: HashMap<String, Vec<(String, f64)>> = HashMap::new();
        for synset in store.synsets() {
            if synset.pos != PartOfSpeech::Adjective {
                continue;
            }
            let mut targets: Vec<(String, f64)> = synset
                .words
                .iter()
                .map(|w| (w.lemma.clone(), config.weight_synonym))
                .collect();
            for p in &synset.pointers {
                let weight = match p.symbol.as_str() {
                    "&" => config.weight_similar_to,
                    "^" => config.weight_see_also,
                    _ => continue,
                };
                let target = store.resolve(p.target_pos, p.target_offset).expect("pointer resolves");
                targets.extend(target.words.iter().map(|w| (w.lemma.clone(), weight)));
            }
            for w in &synset.words {
                edges
                    .entry(w.lemma.clone())
                    .or_default()
                    .extend(targets.iter().filter(|(t, _)| *t != w.lemma).cloned());
            }
        }
        PathOracle { edges, max_depth: config.max_depth }
    }

    fn best_walk(&self, from: &str, to: &str, depth: u32, product: f64) -> f64 {
        if depth == 0 {
            return 0.0;
        }
        let mut best = 0.0f64;
        for (next, weight) in self.edges.get(from).map(Vec::as_slice).unwrap_or_default() {
            let p = product * weight;
            if next == to {
                best = best.max(p);
            }
            best = best.max(self.best_walk(next, to, depth - 1, p));
        }
        best
    }

    pub fn syn_sim(&self, a: &str, b: &str) -> f64 {
        if a == b {
            return 1.0;
        }
        let forward = self.best_walk(a, b, self.max_depth, 1.0);
        let backward = self.best_walk(b, a, self.max_depth, 1.0);
        forward.max(backward)
    }

    pub fn neighbor_count(&self, lemma: &str) -> usize {
        self.edges.get(lemma).map_or(0, Vec::len)
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &BigRational) -> f64 {
    // Scale to 60 fractional bits; exact enough for 1e-12 comparisons.
    let scaled = (r * BigRational::from_integer(BigInt::from(1u64) << 60)).round();
    let n: i128 = scaled.to_integer().try_into().expect("fits in i128");
    n as f64 / (1u128 << 60) as f64
}

/// Exact naive Bayes posteriors with smoothing 1/2 for every label, in label
/// order, for the feature vector `x`.
pub fn exact_posteriors(
    rows: &[(Vec<bool>, PolarityLabel)],
    labels: &[PolarityLabel],
    x: &[bool],
) -> Vec<BigRational> {
    let half = rational(1, 2);
    let n = rows.len() as i64;
    let k = labels.len() as i64;
    let joint: Vec<BigRational> = labels
        .iter()
        .map(|&label| {
            let members: Vec<&Vec<bool>> =
                rows.iter().filter(|(_, l)| *l == label).map(|(v, _)| v).collect();
            let c = members.len() as i64;
            let mut p = (rational(c, 1) + &half) / (rational(n, 1) + rational(k, 2));
            for (f, &value) in x.iter().enumerate() {
                let matching = members.iter().filter(|v| v[f] == value).count() as i64;
                p *= (rational(matching, 1) + &half) / rational(c + 1, 1);
            }
            p
        })
        .collect();
    let total: BigRational = joint.iter().cloned().fold(rational(0, 1), |a, b| a + b);
    joint.into_iter().map(|j| j / &total).collect()
}
