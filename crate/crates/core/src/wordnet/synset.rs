use std::fmt::Write as _;

use serde::Serialize;

use super::PartOfSpeech;

/// Dense handle of a synset inside a [`LexicalStore`](super::LexicalStore).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SynsetId(pub u32);

impl SynsetId {
    pub(crate) fn idx(self) -> usize {
        self.0 as usize
    }
}

/// One member word of a synset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    /// Lowercased lemma with any adjective marker removed.
    pub lemma: String,
    /// The word exactly as written in the data file, e.g. `galore(ip)`.
    pub surface: String,
    pub lex_id: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pointer {
    pub symbol: String,
    pub target_offset: u64,
    pub target_pos: PartOfSpeech,
    /// Raw pos code of the target, `s` for adjective satellites.
    pub target_code: char,
    /// 1-based source word number; 0 for a semantic (whole-synset) pointer.
    pub source: u8,
    /// 1-based target word number; 0 for a semantic pointer.
    pub target: u8,
}

impl Pointer {
    pub fn is_lexical(&self) -> bool {
        self.source != 0 || self.target != 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerbFrame {
    pub frame: u8,
    /// 0 when the frame applies to every word of the synset.
    pub word: u8,
}

/// A concept node parsed from one `data.*` line.
#[derive(Debug, Clone, PartialEq)]
pub struct Synset {
    pub id: SynsetId,
    pub offset: u64,
    pub pos: PartOfSpeech,
    /// `n`, `v`, `a`, `s` or `r` as written in the data file.
    pub ss_type: char,
    pub lex_filenum: u8,
    pub words: Vec<Word>,
    pub pointers: Vec<Pointer>,
    /// Present only for verb synsets.
    pub frames: Option<Vec<VerbFrame>>,
    pub gloss: String,
}

impl Synset {
    pub fn lemmas(&self) -> impl Iterator<Item = &str> + '_ {
        self.words.iter().map(|w| w.lemma.as_str())
    }

    pub fn contains_lemma(&self, lemma: &str) -> bool {
        self.words.iter().any(|w| w.lemma == lemma)
    }

    /// 1-based word number of `lemma` in this synset.
    pub fn word_number(&self, lemma: &str) -> Option<u8> {
        self.words
            .iter()
            .position(|w| w.lemma == lemma)
            .map(|i| (i + 1) as u8)
    }

    pub fn pointers_with<'a>(&'a self, symbol: &'a str) -> impl Iterator<Item = &'a Pointer> + 'a {
        self.pointers.iter().filter(move |p| p.symbol == symbol)
    }

    /// Parse one data file line. `id` is assigned by the caller.
    pub fn parse_data_line(line: &str, id: SynsetId) -> Result<Synset, String> {
        let (head, gloss) = match line.find(" | ") {
            // Only the two-space terminator is dropped; a few glosses carry
            // extra trailing blanks that round-tripping must preserve.
            Some(i) => {
                let rest = &line[i + 3..];
                (&line[..i], rest.strip_suffix("  ").unwrap_or(rest.trim_end()))
            }
            None => match line.trim_end().strip_suffix(" |") {
                Some(head) => (head, ""),
                None => (line.trim_end(), ""),
            },
        };
        let mut fields = head.split_ascii_whitespace();
        let mut next = |what: &str| fields.next().ok_or_else(|| format!("missing {what}"));

        let offset = parse_dec(next("synset_offset")?, "synset_offset")?;
        let lex_filenum = parse_dec(next("lex_filenum")?, "lex_filenum")? as u8;
        let ss_field = next("ss_type")?;
        let ss_type = single_char(ss_field).ok_or_else(|| format!("bad ss_type `{ss_field}`"))?;
        let pos = PartOfSpeech::from_code(ss_type).ok_or_else(|| format!("bad ss_type `{ss_type}`"))?;

        let w_cnt = parse_hex(next("w_cnt")?, "w_cnt")?;
        if w_cnt == 0 {
            return Err("synset without words".into());
        }
        let mut words = Vec::with_capacity(w_cnt as usize);
        for _ in 0..w_cnt {
            let surface = next("word")?.to_string();
            let lex_id = parse_hex(next("lex_id")?, "lex_id")? as u8;
            words.push(Word {
                lemma: normalize_lemma(&surface),
                surface,
                lex_id,
            });
        }

        let p_cnt = parse_dec(next("p_cnt")?, "p_cnt")?;
        let mut pointers = Vec::with_capacity(p_cnt as usize);
        for _ in 0..p_cnt {
            let symbol = next("pointer_symbol")?.to_string();
            let target_offset = parse_dec(next("pointer offset")?, "pointer offset")?;
            let code_field = next("pointer pos")?;
            let target_code =
                single_char(code_field).ok_or_else(|| format!("bad pointer pos `{code_field}`"))?;
            let target_pos = PartOfSpeech::from_code(target_code)
                .ok_or_else(|| format!("bad pointer pos `{target_code}`"))?;
            let st = next("source/target")?;
            if st.len() != 4 {
                return Err(format!("bad source/target `{st}`"));
            }
            let source = parse_hex(&st[..2], "source")? as u8;
            let target = parse_hex(&st[2..], "target")? as u8;
            pointers.push(Pointer {
                symbol,
                target_offset,
                target_pos,
                target_code,
                source,
                target,
            });
        }

        let frames = if pos == PartOfSpeech::Verb {
            let f_cnt = parse_dec(next("f_cnt")?, "f_cnt")?;
            let mut frames = Vec::with_capacity(f_cnt as usize);
            for _ in 0..f_cnt {
                let plus = next("frame marker")?;
                if plus != "+" {
                    return Err(format!("expected `+`, found `{plus}`"));
                }
                let frame = parse_dec(next("f_num")?, "f_num")? as u8;
                let word = parse_hex(next("w_num")?, "w_num")? as u8;
                frames.push(VerbFrame { frame, word });
            }
            Some(frames)
        } else {
            None
        };

        if let Some(extra) = fields.next() {
            return Err(format!("unexpected field `{extra}`"));
        }

        Ok(Synset {
            id,
            offset,
            pos,
            ss_type,
            lex_filenum,
            words,
            pointers,
            frames,
            gloss: gloss.to_string(),
        })
    }

    /// Serialize back to the data file line format (without newline).
    pub fn to_data_line(&self) -> String {
        let mut out = String::with_capacity(128 + self.gloss.len());
        let _ = write!(
            out,
            "{:08} {:02} {} {:02x} ",
            self.offset,
            self.lex_filenum,
            self.ss_type,
            self.words.len()
        );
        for w in &self.words {
            let _ = write!(out, "{} {:x} ", w.surface, w.lex_id);
        }
        let _ = write!(out, "{:03} ", self.pointers.len());
        for p in &self.pointers {
            let _ = write!(
                out,
                "{} {:08} {} {:02x}{:02x} ",
                p.symbol, p.target_offset, p.target_code, p.source, p.target
            );
        }
        if let Some(frames) = &self.frames {
            let _ = write!(out, "{:02} ", frames.len());
            for f in frames {
                let _ = write!(out, "+ {:02} {:02x} ", f.frame, f.word);
            }
        }
        let _ = write!(out, "| {}  ", self.gloss);
        out
    }
}

/// One `index.*` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexEntry {
    pub lemma: String,
    pub pos: PartOfSpeech,
    pub pointer_symbols: Vec<String>,
    pub tagsense_count: u32,
    /// Synset offsets in sense order.
    pub offsets: Vec<u64>,
}

impl IndexEntry {
    pub fn parse_index_line(line: &str) -> Result<IndexEntry, String> {
        let mut fields = line.split_ascii_whitespace();
        let mut next = |what: &str| fields.next().ok_or_else(|| format!("missing {what}"));

        let lemma = next("lemma")?.to_lowercase();
        let pos_field = next("pos")?;
        let pos = single_char(pos_field)
            .and_then(PartOfSpeech::from_code)
            .ok_or_else(|| format!("bad pos `{pos_field}`"))?;
        let synset_cnt = parse_dec(next("synset_cnt")?, "synset_cnt")?;
        let p_cnt = parse_dec(next("p_cnt")?, "p_cnt")?;
        let mut pointer_symbols = Vec::with_capacity(p_cnt as usize);
        for _ in 0..p_cnt {
            pointer_symbols.push(next("ptr_symbol")?.to_string());
        }
        let sense_cnt = parse_dec(next("sense_cnt")?, "sense_cnt")?;
        if sense_cnt != synset_cnt {
            return Err(format!("sense_cnt {sense_cnt} != synset_cnt {synset_cnt}"));
        }
        let tagsense_count = parse_dec(next("tagsense_cnt")?, "tagsense_cnt")? as u32;
        let mut offsets = Vec::with_capacity(synset_cnt as usize);
        for _ in 0..synset_cnt {
            offsets.push(parse_dec(next("synset_offset")?, "synset_offset")?);
        }
        if let Some(extra) = fields.next() {
            return Err(format!("unexpected field `{extra}`"));
        }
        Ok(IndexEntry {
            lemma,
            pos,
            pointer_symbols,
            tagsense_count,
            offsets,
        })
    }
}

/// Lowercase and strip a trailing adjective position marker such as `(p)`.
pub(crate) fn normalize_lemma(surface: &str) -> String {
    let base = match surface.find('(') {
        Some(i) if surface.ends_with(')') => &surface[..i],
        _ => surface,
    };
    base.to_lowercase()
}

fn single_char(s: &str) -> Option<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn parse_dec(s: &str, what: &str) -> Result<u64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad {what} `{s}`"));
    }
    s.parse().map_err(|_| format!("bad {what} `{s}`"))
}

fn parse_hex(s: &str, what: &str) -> Result<u64, String> {
    u64::from_str_radix(s, 16).map_err(|_| format!("bad {what} `{s}`"))
}
