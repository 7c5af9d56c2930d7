//! Adjective-adjective similarity over the lexical graph.
//!
//! Two measures are provided:
//!
//! * **SynSim** treats synset co-members, `&` (similar-to) and `^` (see-also)
//!   neighbors as weighted synonyms. The directional score from `a` to `b` is
//!   the best product of edge weights over relation paths of at most
//!   `max_depth` edges; the symmetric score takes the larger direction.
//! * **StemSim** maps each adjective to a noun or verb "stem" and scores the
//!   stems with hypernym path similarity `1 / (1 + d)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::wordnet::{
    LexicalStore, PartOfSpeech, Synset, SynsetId, DERIVATIONALLY_RELATED, SEE_ALSO, SIMILAR_TO,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityConfig {
    pub weight_synonym: f64,
    pub weight_similar_to: f64,
    pub weight_see_also: f64,
    /// Maximum number of relation edges on a SynSim path.
    pub max_depth: u32,
}

impl Default for SimilarityConfig {
    fn default() -> Self {
        SimilarityConfig {
            weight_synonym: 1.0,
            weight_similar_to: 0.9,
            weight_see_also: 0.8,
            max_depth: 3,
        }
    }
}

impl SimilarityConfig {
    pub fn validate(&self) -> Result<()> {
        let ordered = 0.0 < self.weight_see_also
            && self.weight_see_also <= self.weight_similar_to
            && self.weight_similar_to <= self.weight_synonym
            && self.weight_synonym <= 1.0;
        if !ordered {
            return Err(Error::InvalidConfig(format!(
                "weights must satisfy 0 < see_also ({}) <= similar_to ({}) <= synonym ({}) <= 1",
                self.weight_see_also, self.weight_similar_to, self.weight_synonym
            )));
        }
        if self.max_depth == 0 {
            return Err(Error::InvalidConfig("max_depth must be at least 1".into()));
        }
        Ok(())
    }
}

/// A similarity value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
pub struct SimilarityScore(f64);

impl SimilarityScore {
    pub const ZERO: SimilarityScore = SimilarityScore(0.0);
    pub const ONE: SimilarityScore = SimilarityScore(1.0);

    pub fn new(value: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "similarity {value} out of range");
        SimilarityScore(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for SimilarityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.4}", self.0)
    }
}

/// Which similarity function feeds the anchor features.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimFn {
    Syn,
    Stem,
}

impl SimFn {
    pub const ALL: [SimFn; 2] = [SimFn::Syn, SimFn::Stem];

    pub fn name(self) -> &'static str {
        match self {
            SimFn::Syn => "syn",
            SimFn::Stem => "stem",
        }
    }
}

impl fmt::Display for SimFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimFn {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "syn" | "synsim" => Ok(SimFn::Syn),
            "stem" | "stemsim" => Ok(SimFn::Stem),
            other => Err(format!("unknown similarity function `{other}` (expected syn or stem)")),
        }
    }
}

/// Weighted synonym neighbors of an adjective lemma.
///
/// Union over all adjective senses of: synset co-members (`weight_synonym`),
/// lemmas of similar-to synsets (`weight_similar_to`) and lemmas of see-also
/// synsets (`weight_see_also`). A neighbor reachable several ways keeps its
/// largest weight. Sorted by descending weight, then lemma.
pub fn weighted_neighbors(
    store: &LexicalStore,
    config: &SimilarityConfig,
    lemma: &str,
) -> Vec<(String, f64)> {
    let mut best: HashMap<&str, f64> = HashMap::new();
    let mut offer = |neighbor, weight: f64| {
        if neighbor != lemma {
            let slot = best.entry(neighbor).or_insert(0.0);
            *slot = slot.max(weight);
        }
    };
    for synset in store.lookup_synsets(lemma, PartOfSpeech::Adjective) {
        for member in synset.lemmas() {
            offer(member, config.weight_synonym);
        }
        for (symbol, weight) in [
            (SIMILAR_TO, config.weight_similar_to),
            (SEE_ALSO, config.weight_see_also),
        ] {
            for related in store.related(synset, symbol) {
                for member in related.lemmas() {
                    offer(member, weight);
                }
            }
        }
    }
    let mut out: Vec<(String, f64)> = best.into_iter().map(|(l, w)| (l.to_string(), w)).collect();
    out.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Best path product from `source` to every lemma within `max_depth` edges.
///
/// Layer `k` holds the best product over walks of exactly `k` edges; a lemma
/// is expanded again only when the new layer improves on every earlier one.
/// Weights never exceed 1, so this equals the maximum over simple paths.
fn reach<F>(source: &str, max_depth: u32, mut neighbors: F) -> HashMap<String, f64>
where
    F: FnMut(&str) -> Arc<Vec<(String, f64)>>,
{
    let mut best: HashMap<String, f64> = HashMap::new();
    best.insert(source.to_string(), 1.0);
    let mut frontier: Vec<(String, f64)> = vec![(source.to_string(), 1.0)];
    for _ in 0..max_depth {
        let mut next: HashMap<String, f64> = HashMap::new();
        for (node, value) in &frontier {
            for (neighbor, weight) in neighbors(node).iter() {
                let candidate = value * weight;
                if best.get(neighbor).is_some_and(|&b| b >= candidate) {
                    continue;
                }
                let slot = next.entry(neighbor.clone()).or_insert(0.0);
                if candidate > *slot {
                    *slot = candidate;
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for (node, value) in &next {
            best.insert(node.clone(), *value);
        }
        frontier = next.into_iter().collect();
    }
    best
}

/// SynSim without any caching.
pub fn syn_sim(store: &LexicalStore, config: &SimilarityConfig, a: &str, b: &str) -> SimilarityScore {
    if a == b {
        return SimilarityScore::ONE;
    }
    let mut neighbors = |l: &str| Arc::new(weighted_neighbors(store, config, l));
    let forward = reach(a, config.max_depth, &mut neighbors).get(b).copied().unwrap_or(0.0);
    let backward = reach(b, config.max_depth, &mut neighbors).get(a).copied().unwrap_or(0.0);
    SimilarityScore::new(forward.max(backward))
}

/// Noun and verb stems of an adjective, in discovery order.
///
/// The derivationally related noun/verb forms linked from the adjective
/// itself, across its adjective senses in sense order and pointers in file
/// order. When there are none, the first word of its synonym list
/// (co-members, then similar-to lemmas) that is itself indexed as a noun or
/// verb, preferring the noun reading.
pub fn stems_of(store: &LexicalStore, adjective: &str) -> Vec<(String, PartOfSpeech)> {
    let senses = store.lookup_synsets(adjective, PartOfSpeech::Adjective);
    let mut stems: Vec<(String, PartOfSpeech)> = Vec::new();
    for synset in &senses {
        let Some(word_no) = synset.word_number(adjective) else {
            continue;
        };
        for p in synset.pointers_with(DERIVATIONALLY_RELATED) {
            if p.source != word_no || !matches!(p.target_pos, PartOfSpeech::Noun | PartOfSpeech::Verb) {
                continue;
            }
            let Some(word) = store
                .resolve(p.target_pos, p.target_offset)
                .and_then(|target| target.words.get((p.target as usize).wrapping_sub(1)))
            else {
                continue;
            };
            let stem = (word.lemma.clone(), p.target_pos);
            if !stems.contains(&stem) {
                stems.push(stem);
            }
        }
    }
    if !stems.is_empty() {
        return stems;
    }

    let mut synonyms: Vec<&str> = Vec::new();
    for synset in &senses {
        synonyms.extend(synset.lemmas().filter(|&l| l != adjective));
    }
    for synset in &senses {
        for related in store.related(synset, SIMILAR_TO) {
            synonyms.extend(related.lemmas());
        }
    }
    synonyms
        .into_iter()
        .find_map(|lemma| {
            [PartOfSpeech::Noun, PartOfSpeech::Verb]
                .into_iter()
                .find(|&pos| store.contains_lemma(lemma, pos))
                .map(|pos| (lemma.to_string(), pos))
        })
        .into_iter()
        .collect()
}

/// The first stem of an adjective, see [`stems_of`].
pub fn stem_of(store: &LexicalStore, adjective: &str) -> Option<(String, PartOfSpeech)> {
    stems_of(store, adjective).into_iter().next()
}

/// Unreachable marker in distance tables.
const FAR: u32 = u32::MAX;

/// Breadth-first distances from the nearest of `sources` over the taxonomy of
/// their part of speech, with a virtual node joining every root. Entry `len`
/// of the result is the virtual root.
fn taxonomy_distances(store: &LexicalStore, sources: &[SynsetId]) -> Vec<u32> {
    let virtual_root = store.len();
    let mut dist = vec![FAR; store.len() + 1];
    let Some(&first) = sources.first() else {
        return dist;
    };
    let pos = store.synset(first).pos;
    let mut queue = VecDeque::new();
    for &s in sources {
        debug_assert_eq!(store.synset(s).pos, pos);
        if dist[s.idx()] == FAR {
            dist[s.idx()] = 0;
            queue.push_back(s.idx());
        }
    }
    while let Some(node) = queue.pop_front() {
        let d = dist[node] + 1;
        let mut visit = |next: usize, queue: &mut VecDeque<usize>| {
            if dist[next] == FAR {
                dist[next] = d;
                queue.push_back(next);
            }
        };
        if node == virtual_root {
            for &root in store.taxonomy_roots(pos) {
                visit(root.idx(), &mut queue);
            }
            continue;
        }
        let id = SynsetId(node as u32);
        for &next in store.taxonomy_neighbors(id) {
            visit(next.idx(), &mut queue);
        }
        if store.is_taxonomy_root(id) {
            visit(virtual_root, &mut queue);
        }
    }
    dist
}

fn has_taxonomy(synset: &Synset) -> bool {
    matches!(synset.pos, PartOfSpeech::Noun | PartOfSpeech::Verb)
}

fn score_from_distance(d: u32) -> f64 {
    if d == FAR {
        0.0
    } else {
        1.0 / (1.0 + f64::from(d))
    }
}

/// `1 / (1 + d)` for the shortest hypernym/hyponym path between two synsets
/// of the same part of speech; `None` across parts of speech or outside the
/// noun and verb taxonomies.
pub fn path_similarity(store: &LexicalStore, s1: &Synset, s2: &Synset) -> Option<SimilarityScore> {
    if s1.pos != s2.pos || !has_taxonomy(s1) {
        return None;
    }
    let dist = taxonomy_distances(store, &[s1.id])[s2.id.idx()];
    (dist != FAR).then(|| SimilarityScore::new(score_from_distance(dist)))
}

/// Synsets of all stems, split into (noun, verb) lists, sorted and deduplicated.
fn stem_synsets(store: &LexicalStore, stems: &[(String, PartOfSpeech)]) -> [Vec<SynsetId>; 2] {
    let mut out: [Vec<SynsetId>; 2] = Default::default();
    for (lemma, pos) in stems {
        let slot = match pos {
            PartOfSpeech::Noun => 0,
            PartOfSpeech::Verb => 1,
            _ => continue,
        };
        out[slot].extend(store.lookup_ids(lemma, *pos));
    }
    for list in &mut out {
        list.sort_unstable();
        list.dedup();
    }
    out
}

/// StemSim without any caching: the best path similarity between any synset
/// of any stem of `a` and any same-pos synset of any stem of `b`.
pub fn stem_sim(store: &LexicalStore, a: &str, b: &str) -> SimilarityScore {
    if a == b {
        return SimilarityScore::ONE;
    }
    let xs = stem_synsets(store, &stems_of(store, a));
    let ys = stem_synsets(store, &stems_of(store, b));
    let mut best = FAR;
    for (x, y) in xs.iter().zip(&ys) {
        if x.is_empty() || y.is_empty() {
            continue;
        }
        let table = taxonomy_distances(store, x);
        best = best.min(y.iter().map(|t| table[t.idx()]).min().unwrap_or(FAR));
    }
    SimilarityScore::new(score_from_distance(best))
}

/// Distance tables kept before the cache is flushed.
const DISTANCE_CACHE_LIMIT: usize = 64;

type PairKey = (SimFn, String, String);

/// Similarity with memoized neighbor lists, reach maps, stems, taxonomy
/// distance tables and pair scores. Safe to share between threads; results
/// are identical to the uncached free functions.
#[derive(Debug)]
pub struct SimilarityEngine {
    store: Arc<LexicalStore>,
    config: SimilarityConfig,
    neighbors: RwLock<HashMap<String, Arc<Vec<(String, f64)>>>>,
    reach: RwLock<HashMap<String, Arc<HashMap<String, f64>>>>,
    stems: RwLock<HashMap<String, Arc<Vec<(String, PartOfSpeech)>>>>,
    distances: Mutex<HashMap<Vec<SynsetId>, Arc<Vec<u32>>>>,
    pairs: RwLock<HashMap<PairKey, f64>>,
}

impl SimilarityEngine {
    pub fn new(store: Arc<LexicalStore>, config: SimilarityConfig) -> Result<Self> {
        config.validate()?;
        Ok(SimilarityEngine {
            store,
            config,
            neighbors: Default::default(),
            reach: Default::default(),
            stems: Default::default(),
            distances: Default::default(),
            pairs: Default::default(),
        })
    }

    pub fn store(&self) -> &LexicalStore {
        &self.store
    }

    pub fn shared_store(&self) -> Arc<LexicalStore> {
        Arc::clone(&self.store)
    }

    pub fn config(&self) -> &SimilarityConfig {
        &self.config
    }

    pub fn weighted_neighbors(&self, lemma: &str) -> Arc<Vec<(String, f64)>> {
        if let Some(hit) = self.neighbors.read().unwrap().get(lemma) {
            return Arc::clone(hit);
        }
        let list = Arc::new(weighted_neighbors(&self.store, &self.config, lemma));
        self.neighbors
            .write()
            .unwrap()
            .insert(lemma.to_string(), Arc::clone(&list));
        list
    }

    fn reach_from(&self, lemma: &str) -> Arc<HashMap<String, f64>> {
        if let Some(hit) = self.reach.read().unwrap().get(lemma) {
            return Arc::clone(hit);
        }
        let map = Arc::new(reach(lemma, self.config.max_depth, |l| self.weighted_neighbors(l)));
        self.reach
            .write()
            .unwrap()
            .insert(lemma.to_string(), Arc::clone(&map));
        map
    }

    pub fn syn_sim(&self, a: &str, b: &str) -> SimilarityScore {
        self.memoized(SimFn::Syn, a, b, |a, b| {
            let forward = self.reach_from(a).get(b).copied().unwrap_or(0.0);
            let backward = self.reach_from(b).get(a).copied().unwrap_or(0.0);
            forward.max(backward)
        })
    }

    pub fn stems_of(&self, adjective: &str) -> Arc<Vec<(String, PartOfSpeech)>> {
        if let Some(hit) = self.stems.read().unwrap().get(adjective) {
            return Arc::clone(hit);
        }
        let stems = Arc::new(stems_of(&self.store, adjective));
        self.stems
            .write()
            .unwrap()
            .insert(adjective.to_string(), Arc::clone(&stems));
        stems
    }

    pub fn stem_of(&self, adjective: &str) -> Option<(String, PartOfSpeech)> {
        self.stems_of(adjective).first().cloned()
    }

    fn distances_from(&self, sources: &[SynsetId]) -> Arc<Vec<u32>> {
        if let Some(hit) = self.distances.lock().unwrap().get(sources) {
            return Arc::clone(hit);
        }
        let table = Arc::new(taxonomy_distances(&self.store, sources));
        let mut cache = self.distances.lock().unwrap();
        if cache.len() >= DISTANCE_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(sources.to_vec(), Arc::clone(&table));
        table
    }

    fn is_distance_cached(&self, sources: &[SynsetId]) -> bool {
        self.distances.lock().unwrap().contains_key(sources)
    }

    pub fn path_similarity(&self, s1: &Synset, s2: &Synset) -> Option<SimilarityScore> {
        if s1.pos != s2.pos || !has_taxonomy(s1) {
            return None;
        }
        let dist = self.distances_from(&[s1.id])[s2.id.idx()];
        (dist != FAR).then(|| SimilarityScore::new(score_from_distance(dist)))
    }

    pub fn stem_sim(&self, a: &str, b: &str) -> SimilarityScore {
        self.memoized(SimFn::Stem, a, b, |a, b| {
            let xs = stem_synsets(&self.store, &self.stems_of(a));
            let ys = stem_synsets(&self.store, &self.stems_of(b));
            let mut best = FAR;
            for (x, y) in xs.iter().zip(&ys) {
                if x.is_empty() || y.is_empty() {
                    continue;
                }
                // Search from whichever side is already tabulated, else from
                // the side with fewer synsets.
                let from_y = self.is_distance_cached(y)
                    || (!self.is_distance_cached(x) && y.len() <= x.len());
                let (sources, targets) = if from_y { (y, x) } else { (x, y) };
                let table = self.distances_from(sources);
                best = best.min(targets.iter().map(|t| table[t.idx()]).min().unwrap_or(FAR));
            }
            score_from_distance(best)
        })
    }

    pub fn similarity(&self, simfn: SimFn, a: &str, b: &str) -> SimilarityScore {
        match simfn {
            SimFn::Syn => self.syn_sim(a, b),
            SimFn::Stem => self.stem_sim(a, b),
        }
    }

    fn memoized(
        &self,
        simfn: SimFn,
        a: &str,
        b: &str,
        compute: impl FnOnce(&str, &str) -> f64,
    ) -> SimilarityScore {
        if a == b {
            return SimilarityScore::ONE;
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let key = (simfn, lo.to_string(), hi.to_string());
        if let Some(&hit) = self.pairs.read().unwrap().get(&key) {
            return SimilarityScore::new(hit);
        }
        let value = compute(lo, hi);
        self.pairs.write().unwrap().insert(key, value);
        SimilarityScore::new(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordnet::DatabaseTexts;

    /// Adjectives: hot {hot, blistering} & warm {warm}; warm ^ cozy {cozy, snug};
    /// cold {cold} with no relations.
    /// Nouns: entity <- heat <- warmth; entity <- coldness.
    fn toy_store() -> LexicalStore {
        let mut t = DatabaseTexts::default();
        t.data[PartOfSpeech::Adjective.index()] = [
            "00000100 00 a 02 hot 0 blistering 0 002 & 00000200 s 0000 + 00001000 n 0101 | hot  ",
            "00000200 00 s 01 warm 0 002 & 00000100 a 0000 ^ 00000300 a 0000 | warm  ",
            "00000300 00 a 02 cozy 0 snug 0 001 ^ 00000200 a 0000 | cozy  ",
            "00000400 00 a 01 cold 0 001 + 00001300 n 0101 | cold  ",
        ]
        .join("\n");
        t.index[PartOfSpeech::Adjective.index()] = [
            "blistering a 1 1 & 1 0 00000100  ",
            "cold a 1 1 + 1 0 00000400  ",
            "cozy a 1 1 ^ 1 0 00000300  ",
            "hot a 1 2 & + 1 0 00000100  ",
            "snug a 1 1 ^ 1 0 00000300  ",
            "warm a 1 2 & ^ 1 0 00000200  ",
        ]
        .join("\n");
        t.data[PartOfSpeech::Noun.index()] = [
            "00001000 00 n 01 heat 0 002 @ 00001100 n 0000 ~ 00001200 n 0000 | heat  ",
            "00001100 00 n 01 entity 0 002 ~ 00001000 n 0000 ~ 00001300 n 0000 | root  ",
            "00001200 00 n 01 warmth 0 001 @ 00001000 n 0000 | warmth  ",
            "00001300 00 n 01 coldness 0 001 @ 00001100 n 0000 | cold  ",
        ]
        .join("\n");
        t.index[PartOfSpeech::Noun.index()] = [
            "coldness n 1 1 @ 1 0 00001300  ",
            "entity n 1 1 ~ 1 0 00001100  ",
            "heat n 1 2 @ ~ 1 0 00001000  ",
            "warmth n 1 1 @ 1 0 00001200  ",
        ]
        .join("\n");
        LexicalStore::from_texts(&t).unwrap()
    }

    #[test]
    fn neighbors_carry_relation_weights() {
        let store = toy_store();
        let config = SimilarityConfig::default();
        assert_eq!(
            weighted_neighbors(&store, &config, "hot"),
            vec![("blistering".to_string(), 1.0), ("warm".to_string(), 0.9)]
        );
        assert_eq!(
            weighted_neighbors(&store, &config, "warm"),
            vec![
                ("blistering".to_string(), 0.9),
                ("hot".to_string(), 0.9),
                ("cozy".to_string(), 0.8),
                ("snug".to_string(), 0.8)
            ]
        );
        assert!(weighted_neighbors(&store, &config, "zzzz").is_empty());
    }

    #[test]
    fn syn_sim_multiplies_along_paths() {
        let store = toy_store();
        let config = SimilarityConfig::default();
        assert_eq!(syn_sim(&store, &config, "hot", "hot").value(), 1.0);
        assert_eq!(syn_sim(&store, &config, "hot", "blistering").value(), 1.0);
        assert!((syn_sim(&store, &config, "hot", "snug").value() - 0.72).abs() < 1e-12);
        assert!((syn_sim(&store, &config, "blistering", "snug").value() - 0.72).abs() < 1e-12);
        assert_eq!(syn_sim(&store, &config, "hot", "cold").value(), 0.0);

        let shallow = SimilarityConfig { max_depth: 1, ..config };
        assert_eq!(syn_sim(&store, &shallow, "hot", "snug").value(), 0.0);
    }

    #[test]
    fn stems_and_path_similarity() {
        let store = toy_store();
        assert_eq!(stem_of(&store, "hot"), Some(("heat".into(), PartOfSpeech::Noun)));
        // "warm" has no `+` pointer and no synonym indexed as a noun or verb.
        assert_eq!(stem_of(&store, "warm"), None);
        assert_eq!(stem_of(&store, "zzzz"), None);

        let heat = &store.lookup_synsets("heat", PartOfSpeech::Noun)[0];
        let entity = &store.lookup_synsets("entity", PartOfSpeech::Noun)[0];
        let warmth = &store.lookup_synsets("warmth", PartOfSpeech::Noun)[0];
        let coldness = &store.lookup_synsets("coldness", PartOfSpeech::Noun)[0];
        assert_eq!(path_similarity(&store, heat, heat).unwrap().value(), 1.0);
        assert_eq!(path_similarity(&store, heat, entity).unwrap().value(), 0.5);
        assert_eq!(path_similarity(&store, warmth, coldness).unwrap().value(), 0.25);
        let hot = &store.lookup_synsets("hot", PartOfSpeech::Adjective)[0];
        assert_eq!(path_similarity(&store, hot, heat), None);

        // heat .. coldness: heat -> entity -> coldness.
        assert!((stem_sim(&store, "hot", "cold").value() - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(stem_sim(&store, "warm", "cold").value(), 0.0);
        assert_eq!(stem_sim(&store, "warm", "warm").value(), 1.0);
    }

    #[test]
    fn engine_matches_free_functions() {
        let store = Arc::new(toy_store());
        let config = SimilarityConfig::default();
        let engine = SimilarityEngine::new(Arc::clone(&store), config).unwrap();
        let words = ["hot", "blistering", "warm", "cozy", "snug", "cold", "zzzz"];
        for a in words {
            for b in words {
                assert_eq!(engine.syn_sim(a, b), syn_sim(&store, &config, a, b), "{a} {b}");
                assert_eq!(engine.stem_sim(a, b), stem_sim(&store, a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn config_validation() {
        assert!(SimilarityConfig::default().validate().is_ok());
        let bad = SimilarityConfig {
            weight_see_also: 0.95,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let zero = SimilarityConfig {
            max_depth: 0,
            ..Default::default()
        };
        assert!(zero.validate().is_err());
    }

    #[test]
    fn simfn_parses() {
        assert_eq!("syn".parse::<SimFn>(), Ok(SimFn::Syn));
        assert_eq!("STEM".parse::<SimFn>(), Ok(SimFn::Stem));
        assert!("path".parse::<SimFn>().is_err());
    }
}
