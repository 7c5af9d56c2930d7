//! Python bindings: lexical store loading, the two adjective similarity
//! functions, adjective classification, review scoring and evaluation.

use std::sync::Arc;

use polarity_core::adjective::{AdjectiveClassifier, AdjectivePrediction, PolarityLabel, SeedLexicon, MODEL_HEADER};
use polarity_core::eval::{load_corpus, reproduce_tables, EvalConfig};
use polarity_core::naive_bayes::NaiveBayesModel;
use polarity_core::review::score_review;
use polarity_core::{Error, PartOfSpeech, SimFn};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(polarity, DataError, PyException, "Malformed or inconsistent input data.");

fn to_py(err: Error) -> PyErr {
    match err {
        Error::InvalidConfig(_) | Error::Training(_) => PyValueError::new_err(err.to_string()),
        Error::Io { .. } | Error::MissingFile(_) => PyOSError::new_err(err.to_string()),
        other => DataError::new_err(other.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = String>>(value: &str) -> PyResult<T> {
    value.parse().map_err(PyValueError::new_err)
}

/// A loaded WordNet database.
#[pyclass(frozen, name = "LexicalStore")]
struct PyLexicalStore {
    inner: Arc<polarity_core::LexicalStore>,
}

#[pymethods]
impl PyLexicalStore {
    #[new]
    fn new(directory: &str) -> PyResult<Self> {
        let inner = polarity_core::LexicalStore::load(directory).map_err(to_py)?;
        Ok(PyLexicalStore { inner: Arc::new(inner) })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Base forms of `word` for the part of speech `pos` (noun, verb, adj, adv).
    fn morphy(&self, word: &str, pos: &str) -> PyResult<Vec<String>> {
        let pos: PartOfSpeech = parse(pos)?;
        Ok(self.inner.morphy(word, pos))
    }

    /// Lemma lists of the synsets of `lemma`, in sense order.
    fn synsets(&self, lemma: &str, pos: &str) -> PyResult<Vec<Vec<String>>> {
        let pos: PartOfSpeech = parse(pos)?;
        Ok(self
            .inner
            .lookup_synsets(lemma, pos)
            .iter()
            .map(|s| s.lemmas().map(String::from).collect())
            .collect())
    }
}

#[pyclass(frozen, name = "SimilarityEngine")]
struct PySimilarityEngine {
    inner: Arc<polarity_core::SimilarityEngine>,
}

#[pymethods]
impl PySimilarityEngine {
    #[new]
    #[pyo3(signature = (store, weights = (1.0, 0.9, 0.8), max_depth = 3))]
    fn new(store: &PyLexicalStore, weights: (f64, f64, f64), max_depth: u32) -> PyResult<Self> {
        let config = polarity_core::SimilarityConfig {
            weight_synonym: weights.0,
            weight_similar_to: weights.1,
            weight_see_also: weights.2,
            max_depth,
        };
        let inner = polarity_core::SimilarityEngine::new(Arc::clone(&store.inner), config).map_err(to_py)?;
        Ok(PySimilarityEngine { inner: Arc::new(inner) })
    }

    fn syn_sim(&self, a: &str, b: &str) -> f64 {
        self.inner.syn_sim(a, b).value()
    }

    fn stem_sim(&self, a: &str, b: &str) -> f64 {
        self.inner.stem_sim(a, b).value()
    }

    /// `function` is "syn" or "stem".
    fn similarity(&self, function: &str, a: &str, b: &str) -> PyResult<f64> {
        Ok(self.inner.similarity(parse(function)?, a, b).value())
    }

    /// Noun and verb stems as `(lemma, pos)` pairs.
    fn stems_of(&self, adjective: &str) -> Vec<(String, String)> {
        self.inner
            .stems_of(adjective)
            .iter()
            .map(|(lemma, pos)| (lemma.clone(), pos.to_string()))
            .collect()
    }

    fn weighted_neighbors(&self, lemma: &str) -> Vec<(String, f64)> {
        self.inner.weighted_neighbors(lemma).as_ref().clone()
    }
}

fn prediction_dict<'py>(py: Python<'py>, p: &AdjectivePrediction) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("adjective", &p.adjective)?;
    d.set_item("label", p.label.name())?;
    d.set_item("raw", p.features.raw().to_vec())?;
    d.set_item("binarized", p.features.binarized.to_vec())?;
    let posteriors = PyDict::new(py);
    for (label, prob) in &p.posteriors {
        posteriors.set_item(label.name(), prob)?;
    }
    d.set_item("posteriors", posteriors)?;
    Ok(d)
}

/// Naive Bayes adjective classifier over binarized anchor similarities.
#[pyclass(frozen, name = "AdjectiveClassifier")]
struct PyAdjectiveClassifier {
    inner: AdjectiveClassifier,
}

#[pymethods]
impl PyAdjectiveClassifier {
    /// Train on `training`, a list of `(adjective, label)` pairs. Without it
    /// the built-in seed lexicon is used: all of it, or the training half of
    /// the split for `seed`.
    #[staticmethod]
    #[pyo3(signature = (engine, function = "syn", training = None, seed = None))]
    fn train(
        engine: &PySimilarityEngine,
        function: &str,
        training: Option<Vec<(String, String)>>,
        seed: Option<u64>,
    ) -> PyResult<Self> {
        let simfn: SimFn = parse(function)?;
        let examples = match (training, seed) {
            (Some(pairs), _) => pairs
                .into_iter()
                .map(|(w, l)| Ok((w, parse::<PolarityLabel>(&l)?)))
                .collect::<PyResult<Vec<_>>>()?,
            (None, Some(seed)) => SeedLexicon::default().split(seed).0,
            (None, None) => SeedLexicon::default().entries().to_vec(),
        };
        let inner = AdjectiveClassifier::train(&engine.inner, simfn, &examples).map_err(to_py)?;
        Ok(PyAdjectiveClassifier { inner })
    }

    /// Rebuild from the text written by `to_text`.
    #[staticmethod]
    #[pyo3(signature = (text, function = "syn"))]
    fn from_text(text: &str, function: &str) -> PyResult<Self> {
        let model = NaiveBayesModel::from_text(text, MODEL_HEADER).map_err(to_py)?;
        Ok(PyAdjectiveClassifier {
            inner: AdjectiveClassifier { simfn: parse(function)?, model },
        })
    }

    fn to_text(&self) -> String {
        self.inner.model.to_text(MODEL_HEADER)
    }

    #[getter]
    fn function(&self) -> &'static str {
        self.inner.simfn.name()
    }

    fn classify<'py>(
        &self,
        py: Python<'py>,
        engine: &PySimilarityEngine,
        adjective: &str,
    ) -> PyResult<Bound<'py, PyDict>> {
        prediction_dict(py, &self.inner.classify(&engine.inner, adjective))
    }

    /// Review verdict: label, weighted score and per-adjective profiles.
    fn score_review<'py>(
        &self,
        py: Python<'py>,
        engine: &PySimilarityEngine,
        text: &str,
    ) -> PyResult<Bound<'py, PyDict>> {
        let verdict = score_review(&engine.inner, &self.inner, text);
        let d = PyDict::new(py);
        d.set_item("label", verdict.label.name())?;
        d.set_item("weighted_score", verdict.weighted_score)?;
        d.set_item("adjective_token_count", verdict.adjective_token_count)?;
        let profiles: Vec<(String, u32, &'static str)> = verdict
            .profiles
            .iter()
            .map(|p| (p.lemma.clone(), p.frequency, p.label.name()))
            .collect();
        d.set_item("adjectives", profiles)?;
        Ok(d)
    }
}

#[pyfunction]
fn tokenize(text: &str) -> Vec<String> {
    polarity_core::text::tokenize(text)
}

/// The built-in seed lexicon as `(adjective, label)` pairs.
#[pyfunction]
fn seed_lexicon() -> Vec<(String, &'static str)> {
    SeedLexicon::default()
        .entries()
        .iter()
        .map(|(w, l)| (w.clone(), l.name()))
        .collect()
}

/// Run the corpus evaluation and return `(csv, summary)`.
#[pyfunction]
#[pyo3(signature = (engine, corpus_dir, seeds = vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10], sizes = vec![25, 50, 100]))]
fn evaluate_corpus(
    py: Python<'_>,
    engine: &PySimilarityEngine,
    corpus_dir: &str,
    seeds: Vec<u64>,
    sizes: Vec<usize>,
) -> PyResult<(String, String)> {
    let engine = Arc::clone(&engine.inner);
    let corpus_dir = corpus_dir.to_string();
    py.detach(move || {
        let corpus = load_corpus(&corpus_dir)?;
        let config = EvalConfig { seeds, baseline_sizes: sizes, ..EvalConfig::default() };
        let bundle = reproduce_tables(&corpus, &engine, &SeedLexicon::default(), &config)?;
        Ok((bundle.to_csv(), bundle.to_text()))
    })
    .map_err(to_py)
}

#[pymodule]
fn polarity(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLexicalStore>()?;
    m.add_class::<PySimilarityEngine>()?;
    m.add_class::<PyAdjectiveClassifier>()?;
    m.add_function(wrap_pyfunction!(tokenize, m)?)?;
    m.add_function(wrap_pyfunction!(seed_lexicon, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_corpus, m)?)?;
    m.add("DataError", m.py().get_type::<DataError>())?;
    m.add("ANCHORS", polarity_core::adjective::ANCHORS.to_vec())?;
    Ok(())
}
