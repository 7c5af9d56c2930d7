//! Parser and in-memory store for the WordNet 3.0 database files
//! (`index.*`, `data.*`, `*.exc`).

mod morphy;
mod pos;
mod store;
mod synset;

pub use morphy::detachment_rules;
pub use pos::PartOfSpeech;
pub use store::{DatabaseTexts, LexicalStore};
pub use synset::{IndexEntry, Pointer, Synset, SynsetId, VerbFrame, Word};

/// `&`: adjective head to satellite and back.
pub const SIMILAR_TO: &str = "&";
/// `^`: weaker relatedness between adjective synsets.
pub const SEE_ALSO: &str = "^";
/// `+`: lexical link to a morphologically related word of another pos.
pub const DERIVATIONALLY_RELATED: &str = "+";
pub const HYPERNYM: &str = "@";
