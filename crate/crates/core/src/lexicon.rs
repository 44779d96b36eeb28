//! The codified dictionary: Sinhala words indexed by the code sequences of
//! their Romanizations.
//!
//! File format, one entry per line:
//!
//! ```text
//! sinhala<TAB>romanization[;romanization...]<TAB>freq_rank
//! ```
//!
//! Lines starting with `#` and blank lines are skipped.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::coder::{encode_word, CodeSeq, CodeTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: expected 3 tab-separated fields, found {found}")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: invalid romanization {text:?}")]
    InvalidRomanization { line: usize, text: String },
    #[error("line {line}: {text:?} contains no Sinhala character")]
    InvalidSinhala { line: usize, text: String },
    #[error("line {line}: frequency rank {text:?} is not a positive integer")]
    InvalidRank { line: usize, text: String },
    #[error("line {line}: {sinhala} / {romanization} already listed on line {first}")]
    DuplicateExactLine { line: usize, first: usize, sinhala: String, romanization: String },
    #[error("lexicon is not valid UTF-8")]
    NotUtf8,
}

impl LexiconError {
    pub fn line(&self) -> Option<usize> {
        match self {
            LexiconError::MalformedLine { line, .. }
            | LexiconError::InvalidRomanization { line, .. }
            | LexiconError::InvalidSinhala { line, .. }
            | LexiconError::InvalidRank { line, .. }
            | LexiconError::DuplicateExactLine { line, .. } => Some(*line),
            LexiconError::NotUtf8 => None,
        }
    }
}

pub type EntryId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub id: EntryId,
    pub sinhala: String,
    pub romanizations: Vec<String>,
    pub code_seqs: Vec<CodeSeq>,
    pub freq_rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: HashMap<CodeSeq, Vec<EntryId>>,
}

/// True if `text` contains a character in the Sinhala block U+0D80..=U+0DFF.
pub fn has_sinhala(text: &str) -> bool {
    text.chars().any(|c| ('\u{0D80}'..='\u{0DFF}').contains(&c))
}

struct ParsedLine {
    line: usize,
    sinhala: String,
    romanizations: Vec<String>,
    freq_rank: u32,
}

fn parse_line(line: usize, raw: &str) -> Result<Option<ParsedLine>, LexiconError> {
    let raw = raw.strip_suffix('\r').unwrap_or(raw);
    if raw.trim().is_empty() || raw.starts_with('#') {
        return Ok(None);
    }
    let fields: Vec<&str> = raw.split('\t').collect();
    let [sinhala, romans, rank] = fields[..] else {
        return Err(LexiconError::MalformedLine { line, found: fields.len() });
    };
    let sinhala = sinhala.trim();
    if !has_sinhala(sinhala) {
        return Err(LexiconError::InvalidSinhala { line, text: sinhala.to_string() });
    }
    let romanizations = romans
        .split(';')
        .map(|r| {
            let r = r.trim();
            if !r.is_empty() && r.bytes().all(|b| b.is_ascii_lowercase()) {
                Ok(r.to_string())
            } else {
                Err(LexiconError::InvalidRomanization { line, text: r.to_string() })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let freq_rank = rank
        .trim()
        .parse::<u32>()
        .ok()
        .filter(|&r| r > 0)
        .ok_or_else(|| LexiconError::InvalidRank { line, text: rank.to_string() })?;
    Ok(Some(ParsedLine { line, sinhala: sinhala.to_string(), romanizations, freq_rank }))
}

fn parse_all(text: &str) -> (Vec<ParsedLine>, Vec<LexiconError>) {
    let mut parsed = Vec::new();
    let mut errors = Vec::new();
    let mut seen: HashMap<(String, String), usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        match parse_line(line, raw) {
            Ok(None) => {}
            Ok(Some(p)) => {
                let mut dup = None;
                for r in &p.romanizations {
                    if let Some(&first) = seen.get(&(p.sinhala.clone(), r.clone())) {
                        dup.get_or_insert(LexiconError::DuplicateExactLine {
                            line,
                            first,
                            sinhala: p.sinhala.clone(),
                            romanization: r.clone(),
                        });
                    } else {
                        seen.insert((p.sinhala.clone(), r.clone()), line);
                    }
                }
                match dup {
                    Some(e) => errors.push(e),
                    None => parsed.push(p),
                }
            }
            Err(e) => errors.push(e),
        }
    }
    (parsed, errors)
}

/// Checks a lexicon file and returns every line-level problem.
pub fn validate_lexicon(text: &str) -> Vec<LexiconError> {
    parse_all(text).1
}

/// Loads and codifies a lexicon from UTF-8 bytes.
pub fn load_lexicon(source: &[u8], table: &CodeTable) -> Result<Lexicon, LexiconError> {
    let text = std::str::from_utf8(source).map_err(|_| LexiconError::NotUtf8)?;
    Lexicon::parse(text, table)
}

impl Lexicon {
    pub fn parse(text: &str, table: &CodeTable) -> Result<Self, LexiconError> {
        let (parsed, errors) = parse_all(text);
        if let Some(first) = errors.into_iter().min_by_key(|e| e.line()) {
            return Err(first);
        }
        let mut lexicon = Lexicon::default();
        for p in parsed {
            let code_seqs = p
                .romanizations
                .iter()
                .map(|r| {
                    encode_word(r, table).map_err(|_| LexiconError::InvalidRomanization {
                        line: p.line,
                        text: r.clone(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            lexicon.push(p.sinhala, p.romanizations, code_seqs, p.freq_rank);
        }
        Ok(lexicon)
    }

    fn push(&mut self, sinhala: String, romanizations: Vec<String>, code_seqs: Vec<CodeSeq>, freq_rank: u32) {
        let id = self.entries.len() as EntryId;
        let mut indexed = HashSet::new();
        for seq in &code_seqs {
            if indexed.insert(seq.clone()) {
                self.index.entry(seq.clone()).or_default().push(id);
            }
        }
        self.entries.push(LexiconEntry { id, sinhala, romanizations, code_seqs, freq_rank });
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: EntryId) -> Option<&LexiconEntry> {
        self.entries.get(id as usize)
    }

    /// Entries listing `seq` among their code sequences, most frequent first.
    pub fn lookup_exact(&self, seq: &CodeSeq) -> Vec<&LexiconEntry> {
        let mut hits: Vec<&LexiconEntry> = self
            .index
            .get(seq)
            .map(|ids| ids.iter().map(|&id| &self.entries[id as usize]).collect())
            .unwrap_or_default();
        hits.sort_by(|a, b| a.freq_rank.cmp(&b.freq_rank).then_with(|| a.id.cmp(&b.id)));
        hits
    }

    /// Every `(code_seq, entry_id)` pair, in id order then romanization order.
    pub fn all_code_seqs(&self) -> impl Iterator<Item = (&CodeSeq, EntryId)> + '_ {
        self.entries
            .iter()
            .flat_map(|e| e.code_seqs.iter().map(move |s| (s, e.id)))
    }

    /// Canonical file form: entries by id, romanizations joined with `;`.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", e.sinhala, e.romanizations.join(";"), e.freq_rank));
        }
        out
    }
}
