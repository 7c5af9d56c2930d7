use std::path::PathBuf;

use thiserror::Error;

use crate::wordnet::PartOfSpeech;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("missing {0}")]
    MissingFile(String),

    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    #[error(
        "dangling pointer: {source_pos}/{source_offset:08} `{symbol}` -> {target_pos}/{target_offset:08}"
    )]
    DanglingPointer {
        source_offset: u64,
        source_pos: PartOfSpeech,
        symbol: String,
        target_offset: u64,
        target_pos: PartOfSpeech,
    },

    #[error("index entry `{lemma}` ({pos}) references unknown offset {offset:08}")]
    DanglingIndex {
        lemma: String,
        pos: PartOfSpeech,
        offset: u64,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("training failed: {0}")]
    Training(String),

    #[error("model line {line}: {message}")]
    ModelFormat { line: usize, message: String },

    #[error("corpus: {0}")]
    Corpus(String),

    #[error("evaluation: {0}")]
    Evaluation(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn model(line: usize, message: impl Into<String>) -> Self {
        Error::ModelFormat {
            line,
            message: message.into(),
        }
    }
}
