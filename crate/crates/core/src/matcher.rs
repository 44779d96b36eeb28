//! Fuzzy matching of code sequences against the lexicon.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::coder::CodeSeq;
use crate::lexicon::{EntryId, Lexicon};

pub const DEFAULT_TOP_K: usize = 5;
pub const DEFAULT_THRESHOLD: u8 = 60;

/// How a suggestion was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Some probe equals one of the entry's code sequences.
    Exact,
    /// Best probe was a vowel-expanded candidate or the bare skeleton.
    Expanded,
    /// The input itself, fuzzily matched.
    Direct,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Exact => "exact",
            Source::Expanded => "expanded",
            Source::Direct => "direct",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suggestion {
    pub entry_id: EntryId,
    pub sinhala: String,
    pub romanization: String,
    pub score: u8,
    pub source: Source,
}

/// Token-level Levenshtein distance.
pub fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    if a.len() < b.len() {
        return edit_distance(b, a);
    }
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, &x) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, &y) in b.iter().enumerate() {
            let next = (diag + usize::from(x != y)).min(row[j] + 1).min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[b.len()]
}

/// `100 * (1 - d / max_len)`, rounded half up.
///
/// ```
/// use swabhasha::coder::{encode_word, CodeTable};
/// use swabhasha::matcher::similarity;
/// let t = CodeTable::default();
/// let a = encode_word("kynna", &t).unwrap();
/// let b = encode_word("kiyanna", &t).unwrap();
/// assert_eq!(similarity(&a, &b), 71);
/// ```
pub fn similarity(a: &CodeSeq, b: &CodeSeq) -> u8 {
    ratio(a.codes(), b.codes())
}

fn ratio(a: &[u8], b: &[u8]) -> u8 {
    ratio_bound(edit_distance(a, b), a.len().max(b.len()))
}

fn ratio_bound(distance: usize, max: usize) -> u8 {
    if max == 0 {
        return 100;
    }
    let same = max - distance;
    // round(100 * same / max) with halves going up, in integers
    ((200 * same + max) / (2 * max)) as u8
}

/// Ordering used for every suggestion list: score descending, then frequency
/// rank, then Sinhala code point order.
pub fn compare(lex: &Lexicon, a: &Suggestion, b: &Suggestion) -> Ordering {
    let rank = |s: &Suggestion| lex.get(s.entry_id).map_or(u32::MAX, |e| e.freq_rank);
    b.score
        .cmp(&a.score)
        .then_with(|| rank(a).cmp(&rank(b)))
        .then_with(|| a.sinhala.cmp(&b.sinhala))
        .then_with(|| a.entry_id.cmp(&b.entry_id))
}

/// Scores every lexicon entry against the query and candidates and returns
/// the best `top_k` at or above `threshold`.
///
/// Inexact hits are labelled `Direct` when there are no candidates and
/// `Expanded` otherwise; see [`rank_with_source`] to choose explicitly.
pub fn rank(
    query: &CodeSeq,
    candidates: &[CodeSeq],
    lex: &Lexicon,
    top_k: usize,
    threshold: u8,
) -> Vec<Suggestion> {
    let inexact = if candidates.is_empty() { Source::Direct } else { Source::Expanded };
    rank_with_source(query, candidates, lex, top_k, threshold, inexact)
}

pub fn rank_with_source(
    query: &CodeSeq,
    candidates: &[CodeSeq],
    lex: &Lexicon,
    top_k: usize,
    threshold: u8,
    inexact: Source,
) -> Vec<Suggestion> {
    let probes: Vec<&CodeSeq> = std::iter::once(query).chain(candidates).collect();
    let mut best: HashMap<EntryId, (u8, usize)> = HashMap::new();
    for entry in lex.entries() {
        for (r, seq) in entry.code_seqs.iter().enumerate() {
            let mut score = 0;
            for p in &probes {
                // distance is at least the length difference
                let (la, lb) = (p.len(), seq.len());
                let bound = ratio_bound(la.abs_diff(lb), la.max(lb));
                if bound > score {
                    score = score.max(similarity(p, seq));
                    if score == 100 {
                        break;
                    }
                }
            }
            if score < threshold {
                continue;
            }
            match best.get(&entry.id) {
                Some(&(s, _)) if s >= score => {}
                _ => {
                    best.insert(entry.id, (score, r));
                }
            }
        }
    }
    let mut out: Vec<Suggestion> = best
        .into_iter()
        .map(|(id, (score, r))| {
            let entry = lex.get(id).expect("id from lexicon");
            Suggestion {
                entry_id: id,
                sinhala: entry.sinhala.clone(),
                romanization: entry.romanizations[r].clone(),
                score,
                source: if score == 100 { Source::Exact } else { inexact },
            }
        })
        .collect();
    out.sort_by(|a, b| compare(lex, a, b));
    out.truncate(top_k);
    out
}
