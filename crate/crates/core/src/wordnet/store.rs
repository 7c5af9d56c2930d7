use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::morphy;
use super::synset::{IndexEntry, Synset, SynsetId};
use super::PartOfSpeech;
use crate::error::{Error, Result};

/// Hypernym pointer symbols used for the taxonomy graph.
const HYPERNYM_SYMBOLS: [&str; 2] = ["@", "@i"];

/// Raw text of the twelve database files, keyed by part of speech.
#[derive(Debug, Default, Clone)]
pub struct DatabaseTexts {
    pub index: [String; 4],
    pub data: [String; 4],
    pub exceptions: [String; 4],
}

impl DatabaseTexts {
    pub fn read_dir(dir: &Path) -> Result<Self> {
        let read = |name: String| -> Result<String> {
            let path = dir.join(&name);
            if !path.is_file() {
                return Err(Error::MissingFile(name));
            }
            fs::read_to_string(&path).map_err(|e| Error::io(path, e))
        };
        let mut texts = DatabaseTexts::default();
        for pos in PartOfSpeech::ALL {
            texts.index[pos.index()] = read(format!("index.{}", pos.file_suffix()))?;
        }
        for pos in PartOfSpeech::ALL {
            texts.data[pos.index()] = read(format!("data.{}", pos.file_suffix()))?;
        }
        for pos in PartOfSpeech::ALL {
            texts.exceptions[pos.index()] = read(format!("{}.exc", pos.file_suffix()))?;
        }
        Ok(texts)
    }
}

/// Immutable in-memory lexical database.
#[derive(Debug)]
pub struct LexicalStore {
    synsets: Vec<Synset>,
    by_offset: [HashMap<u64, SynsetId>; 4],
    index: [HashMap<String, IndexEntry>; 4],
    exceptions: [HashMap<String, Vec<String>>; 4],
    /// Undirected hypernym/hyponym adjacency, nouns and verbs only.
    taxonomy: Vec<Vec<SynsetId>>,
    /// Noun and verb synsets without a hypernym, per part of speech.
    roots: [Vec<SynsetId>; 4],
}

impl LexicalStore {
    /// Load the WordNet database files found in `dir`.
    pub fn load(dir: impl AsRef<Path>) -> Result<Self> {
        Self::from_texts(&DatabaseTexts::read_dir(dir.as_ref())?)
    }

    pub fn from_texts(texts: &DatabaseTexts) -> Result<Self> {
        let mut synsets = Vec::new();
        let mut by_offset: [HashMap<u64, SynsetId>; 4] = Default::default();

        for pos in PartOfSpeech::ALL {
            let file = format!("data.{}", pos.file_suffix());
            for (line_no, line) in content_lines(&texts.data[pos.index()]) {
                let id = SynsetId(synsets.len() as u32);
                let synset = Synset::parse_data_line(line, id).map_err(|message| Error::Parse {
                    file: file.clone(),
                    line: line_no,
                    message,
                })?;
                if synset.pos != pos {
                    return Err(Error::Parse {
                        file: file.clone(),
                        line: line_no,
                        message: format!("ss_type `{}` in {file}", synset.ss_type),
                    });
                }
                if by_offset[pos.index()].insert(synset.offset, id).is_some() {
                    return Err(Error::Parse {
                        file: file.clone(),
                        line: line_no,
                        message: format!("duplicate offset {:08}", synset.offset),
                    });
                }
                synsets.push(synset);
            }
        }

        let mut index: [HashMap<String, IndexEntry>; 4] = Default::default();
        for pos in PartOfSpeech::ALL {
            let file = format!("index.{}", pos.file_suffix());
            for (line_no, line) in content_lines(&texts.index[pos.index()]) {
                let entry = IndexEntry::parse_index_line(line).map_err(|message| Error::Parse {
                    file: file.clone(),
                    line: line_no,
                    message,
                })?;
                if entry.pos != pos {
                    return Err(Error::Parse {
                        file: file.clone(),
                        line: line_no,
                        message: format!("pos `{}` in {file}", entry.pos.code()),
                    });
                }
                index[pos.index()].insert(entry.lemma.clone(), entry);
            }
        }

        let mut exceptions: [HashMap<String, Vec<String>>; 4] = Default::default();
        for pos in PartOfSpeech::ALL {
            let file = format!("{}.exc", pos.file_suffix());
            for (line_no, line) in content_lines(&texts.exceptions[pos.index()]) {
                let mut fields = line.split_ascii_whitespace().map(str::to_lowercase);
                let (Some(form), bases) = (fields.next(), fields.collect::<Vec<_>>()) else {
                    continue;
                };
                if bases.is_empty() {
                    return Err(Error::Parse {
                        file: file.clone(),
                        line: line_no,
                        message: format!("exception `{form}` without base form"),
                    });
                }
                exceptions[pos.index()]
                    .entry(form)
                    .or_default()
                    .extend(bases);
            }
        }

        let mut store = LexicalStore {
            synsets,
            by_offset,
            index,
            exceptions,
            taxonomy: Vec::new(),
            roots: Default::default(),
        };
        store.check_integrity()?;
        store.taxonomy = store.build_taxonomy();
        let mut roots: [Vec<SynsetId>; 4] = Default::default();
        for synset in &store.synsets {
            if matches!(synset.pos, PartOfSpeech::Noun | PartOfSpeech::Verb)
                && store.is_taxonomy_root(synset.id)
            {
                roots[synset.pos.index()].push(synset.id);
            }
        }
        store.roots = roots;
        Ok(store)
    }

    fn check_integrity(&self) -> Result<()> {
        for synset in &self.synsets {
            for p in &synset.pointers {
                if self.id_of(p.target_pos, p.target_offset).is_none() {
                    return Err(Error::DanglingPointer {
                        source_offset: synset.offset,
                        source_pos: synset.pos,
                        symbol: p.symbol.clone(),
                        target_offset: p.target_offset,
                        target_pos: p.target_pos,
                    });
                }
            }
        }
        for pos in PartOfSpeech::ALL {
            // Sorted so the reported entry does not depend on hash order.
            let mut entries: Vec<_> = self.index[pos.index()].values().collect();
            entries.sort_by(|a, b| a.lemma.cmp(&b.lemma));
            for entry in entries {
                if let Some(&offset) = entry.offsets.iter().find(|&&o| self.id_of(pos, o).is_none()) {
                    return Err(Error::DanglingIndex {
                        lemma: entry.lemma.clone(),
                        pos,
                        offset,
                    });
                }
            }
        }
        Ok(())
    }

    fn build_taxonomy(&self) -> Vec<Vec<SynsetId>> {
        let mut adj = vec![Vec::new(); self.synsets.len()];
        for synset in &self.synsets {
            if !matches!(synset.pos, PartOfSpeech::Noun | PartOfSpeech::Verb) {
                continue;
            }
            for p in &synset.pointers {
                if HYPERNYM_SYMBOLS.contains(&p.symbol.as_str()) && p.target_pos == synset.pos {
                    let target = self.by_offset[p.target_pos.index()][&p.target_offset];
                    adj[synset.id.idx()].push(target);
                    adj[target.idx()].push(synset.id);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    pub fn synsets(&self) -> &[Synset] {
        &self.synsets
    }

    pub fn synset(&self, id: SynsetId) -> &Synset {
        &self.synsets[id.idx()]
    }

    pub fn id_of(&self, pos: PartOfSpeech, offset: u64) -> Option<SynsetId> {
        self.by_offset[pos.index()].get(&offset).copied()
    }

    pub fn resolve(&self, pos: PartOfSpeech, offset: u64) -> Option<&Synset> {
        self.id_of(pos, offset).map(|id| self.synset(id))
    }

    pub fn index_entry(&self, lemma: &str, pos: PartOfSpeech) -> Option<&IndexEntry> {
        self.index[pos.index()].get(lemma)
    }

    pub fn index_entries(&self, pos: PartOfSpeech) -> impl Iterator<Item = &IndexEntry> + '_ {
        self.index[pos.index()].values()
    }

    pub fn contains_lemma(&self, lemma: &str, pos: PartOfSpeech) -> bool {
        self.index[pos.index()].contains_key(lemma)
    }

    pub fn exceptions(&self, form: &str, pos: PartOfSpeech) -> Option<&[String]> {
        self.exceptions[pos.index()].get(form).map(Vec::as_slice)
    }

    /// Synsets of `lemma` in sense order; empty when the lemma is unknown.
    pub fn lookup_synsets(&self, lemma: &str, pos: PartOfSpeech) -> Vec<&Synset> {
        self.lookup_ids(lemma, pos)
            .into_iter()
            .map(|id| self.synset(id))
            .collect()
    }

    pub fn lookup_ids(&self, lemma: &str, pos: PartOfSpeech) -> Vec<SynsetId> {
        match self.index_entry(lemma, pos) {
            Some(entry) => entry
                .offsets
                .iter()
                .filter_map(|&o| self.id_of(pos, o))
                .collect(),
            None => Vec::new(),
        }
    }

    /// Targets of every pointer of `synset` carrying `symbol`, in file order.
    pub fn related(&self, synset: &Synset, symbol: &str) -> Vec<&Synset> {
        synset
            .pointers_with(symbol)
            .filter_map(|p| self.resolve(p.target_pos, p.target_offset))
            .collect()
    }

    /// Neighbors of a noun or verb synset in the hypernym/hyponym graph.
    pub fn taxonomy_neighbors(&self, id: SynsetId) -> &[SynsetId] {
        &self.taxonomy[id.idx()]
    }

    /// Noun or verb synsets without a hypernym; empty for other parts of speech.
    pub fn taxonomy_roots(&self, pos: PartOfSpeech) -> &[SynsetId] {
        &self.roots[pos.index()]
    }

    /// True when the synset has no hypernym of its own part of speech.
    pub fn is_taxonomy_root(&self, id: SynsetId) -> bool {
        let synset = self.synset(id);
        !synset
            .pointers
            .iter()
            .any(|p| HYPERNYM_SYMBOLS.contains(&p.symbol.as_str()) && p.target_pos == synset.pos)
    }

    /// Base forms of `word`: exception-list bases first, then the word itself,
    /// then suffix-detachment candidates. Only lemmas present in the index for
    /// `pos` are returned.
    pub fn morphy(&self, word: &str, pos: PartOfSpeech) -> Vec<String> {
        morphy::analyze(word, pos, self.exceptions(word, pos), |w| {
            self.contains_lemma(w, pos)
        })
    }

    pub fn is_adjective(&self, word: &str) -> bool {
        !self.morphy(word, PartOfSpeech::Adjective).is_empty()
    }
}

/// Non-empty lines with their 1-based line numbers, license header skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with("  ") && !l.trim().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_synset_texts() -> DatabaseTexts {
        let mut texts = DatabaseTexts::default();
        let adj = PartOfSpeech::Adjective.index();
        texts.data[adj] =
            "  1 license header\n00000010 00 a 01 solo 0 001 & 00000010 a 0000 | alone  \n".into();
        texts.index[adj] = "solo a 1 1 & 1 0 00000010  \n".into();
        texts
    }

    #[test]
    fn self_pointing_fixture_resolves() {
        let store = LexicalStore::from_texts(&one_synset_texts()).unwrap();
        assert_eq!(store.len(), 1);
        let solo = &store.lookup_synsets("solo", PartOfSpeech::Adjective)[0];
        let similar = store.related(solo, "&");
        assert_eq!(similar.len(), 1);
        assert_eq!(similar[0].offset, 10);
        assert!(store.related(solo, "±unknown±").is_empty());
    }

    #[test]
    fn dangling_pointer_is_reported() {
        let mut texts = one_synset_texts();
        texts.data[PartOfSpeech::Adjective.index()] =
            "00000010 00 a 01 solo 0 001 ^ 00000099 a 0000 | alone  \n".into();
        let err = LexicalStore::from_texts(&texts).unwrap_err();
        match err {
            Error::DanglingPointer {
                source_offset,
                symbol,
                target_offset,
                ..
            } => assert_eq!((source_offset, symbol.as_str(), target_offset), (10, "^", 99)),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn dangling_index_is_reported() {
        let mut texts = one_synset_texts();
        texts.index[PartOfSpeech::Adjective.index()] = "solo a 1 0 1 0 00000011  \n".into();
        assert!(matches!(
            LexicalStore::from_texts(&texts),
            Err(Error::DanglingIndex { offset: 11, .. })
        ));
    }

    #[test]
    fn malformed_line_names_file_and_line() {
        let mut texts = one_synset_texts();
        texts.data[PartOfSpeech::Adjective.index()] =
            "  1 header\n  2 header\n00000010 00 a zz solo 0 000 | x  \n".into();
        let err = LexicalStore::from_texts(&texts).unwrap_err();
        assert!(matches!(&err, Error::Parse { file, line: 3, .. } if file == "data.adj"), "{err}");
    }

    #[test]
    fn empty_directory_is_missing_index_noun() {
        let dir = tempfile::tempdir().unwrap();
        let err = LexicalStore::load(dir.path()).unwrap_err();
        assert_eq!(err.to_string(), "missing index.noun");
    }

    #[test]
    fn absent_lemma_is_empty() {
        let store = LexicalStore::from_texts(&one_synset_texts()).unwrap();
        assert!(store.lookup_synsets("zzzz_not_a_word", PartOfSpeech::Noun).is_empty());
        assert!(!store.is_adjective("zzzz"));
        assert!(store.is_adjective("solo"));
    }
}
