//! End-to-end transliteration of a single word.

use std::time::Instant;

use thiserror::Error;

use crate::coder::{classify, encode, tokenize, CodeTable, CoderError, Scenario};
use crate::expander::{ExpandError, RuleSet};
use crate::lexicon::Lexicon;
use crate::matcher::{rank_with_source, Source, Suggestion, DEFAULT_THRESHOLD, DEFAULT_TOP_K};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransliterateError {
    #[error(transparent)]
    Coder(#[from] CoderError),
    #[error(transparent)]
    Expand(#[from] ExpandError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub top_k: usize,
    pub threshold: u8,
}

impl Default for Options {
    fn default() -> Self {
        Self { top_k: DEFAULT_TOP_K, threshold: DEFAULT_THRESHOLD }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransliterationResult {
    pub query: String,
    pub scenario: Scenario,
    pub suggestions: Vec<Suggestion>,
    /// Wall-clock time spent, for diagnostics only.
    pub timing_micros: u64,
}

/// Immutable bundle of everything a transliteration needs.
#[derive(Debug, Clone)]
pub struct Engine {
    pub lexicon: Lexicon,
    pub rules: RuleSet,
    pub table: CodeTable,
}

impl Engine {
    pub fn new(lexicon: Lexicon, rules: RuleSet, table: CodeTable) -> Self {
        Self { lexicon, rules, table }
    }

    pub fn transliterate(&self, word: &str, opts: Options) -> Result<TransliterationResult, TransliterateError> {
        transliterate(word, &self.lexicon, &self.rules, &self.table, opts)
    }

    pub fn transliterate_batch<S: AsRef<str>>(
        &self,
        words: &[S],
        opts: Options,
    ) -> Vec<Result<TransliterationResult, TransliterateError>> {
        transliterate_batch(words, &self.lexicon, &self.rules, &self.table, opts)
    }
}

/// Tokenize, encode, classify, expand bare skeletons, then rank.
///
/// Skeleton input is ranked with the skeleton itself plus every expanded
/// candidate as probes. Input with any vowel is ranked on its own.
pub fn transliterate(
    word: &str,
    lex: &Lexicon,
    rules: &RuleSet,
    table: &CodeTable,
    opts: Options,
) -> Result<TransliterationResult, TransliterateError> {
    let start = Instant::now();
    let letters = tokenize(word)?;
    let query = encode(&letters, table)?;
    let scenario = classify(&query, table);
    let suggestions = match scenario {
        Scenario::NoVowel => {
            let candidates = rules.expand(&query, table)?;
            rank_with_source(&query, &candidates, lex, opts.top_k, opts.threshold, Source::Expanded)
        }
        Scenario::WithVowel => {
            rank_with_source(&query, &[], lex, opts.top_k, opts.threshold, Source::Direct)
        }
    };
    Ok(TransliterationResult {
        query: letters.into_iter().collect(),
        scenario,
        suggestions,
        timing_micros: start.elapsed().as_micros() as u64,
    })
}

/// Element-wise [`transliterate`]; a failing word does not abort the rest.
pub fn transliterate_batch<S: AsRef<str>>(
    words: &[S],
    lex: &Lexicon,
    rules: &RuleSet,
    table: &CodeTable,
    opts: Options,
) -> Vec<Result<TransliterationResult, TransliterateError>> {
    words
        .iter()
        .map(|w| transliterate(w.as_ref(), lex, rules, table, opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    fn engine() -> Engine {
        bundled::engine()
    }

    fn top(word: &str) -> TransliterationResult {
        engine().transliterate(word, Options::default()).unwrap()
    }

    #[test]
    fn consonant_only_input() {
        let r = top("khmd");
        assert_eq!(r.scenario, Scenario::NoVowel);
        assert_eq!(r.suggestions[0].sinhala, "කොහොමද");
        assert_eq!(r.suggestions[0].source, Source::Exact);
    }

    #[test]
    fn vowel_input() {
        let r = top("amma");
        assert_eq!(r.scenario, Scenario::WithVowel);
        assert_eq!(r.suggestions[0].sinhala, "අම්මා");
    }

    #[test]
    fn reduced_vowel_input() {
        let r = top("kynna");
        assert_eq!(r.scenario, Scenario::WithVowel);
        assert!(r.suggestions.iter().any(|s| s.sinhala == "කියන්න"));
        assert!(r.suggestions.len() <= 5);
    }

    #[test]
    fn query_is_normalised() {
        assert_eq!(top("  KHMD ").query, "khmd");
    }

    #[test]
    fn errors() {
        let e = engine();
        assert_eq!(
            e.transliterate("", Options::default()).unwrap_err(),
            TransliterateError::Coder(CoderError::EmptyInput)
        );
        assert_eq!(
            e.transliterate("bcdfghjklm", Options::default()).unwrap_err(),
            TransliterateError::Expand(ExpandError::SkeletonTooLong(10))
        );
    }

    #[test]
    fn batch() {
        let e = engine();
        let opts = Options::default();
        assert!(e.transliterate_batch::<&str>(&[], opts).is_empty());

        let out = e.transliterate_batch(&["khmd", "amma"], opts);
        assert_eq!(out.len(), 2);
        for (r, w) in out.iter().zip(["khmd", "amma"]) {
            let single = e.transliterate(w, opts).unwrap();
            assert_eq!(r.as_ref().unwrap().suggestions, single.suggestions);
        }

        let out = e.transliterate_batch(&["khmd", "kmd!", "amma"], opts);
        assert!(out[0].is_ok() && out[2].is_ok());
        assert_eq!(
            out[1].as_ref().unwrap_err(),
            &TransliterateError::Coder(CoderError::NonAlphabetic { ch: '!', position: 3 })
        );
    }
}
