//! JSON bodies shared by `suggest --json` and `/api/suggest`.

use serde::{Deserialize, Serialize};
use swabhasha::pipeline::{Engine, Options, TransliterateError, TransliterationResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuggestResponse {
    pub query: String,
    pub scenario: String,
    pub suggestions: Vec<WireSuggestion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireSuggestion {
    pub sinhala: String,
    pub romanization: String,
    pub score: u8,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HealthResponse {
    pub status: String,
    pub lexicon_entries: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorResponse {
    pub error: String,
}

impl From<TransliterationResult> for SuggestResponse {
    fn from(r: TransliterationResult) -> Self {
        Self {
            query: r.query,
            scenario: r.scenario.as_str().to_string(),
            suggestions: r
                .suggestions
                .into_iter()
                .map(|s| WireSuggestion {
                    sinhala: s.sinhala,
                    romanization: s.romanization,
                    score: s.score,
                    source: s.source.as_str().to_string(),
                })
                .collect(),
        }
    }
}

pub fn suggest(engine: &Engine, word: &str, opts: Options) -> Result<SuggestResponse, TransliterateError> {
    engine.transliterate(word, opts).map(SuggestResponse::from)
}

/// The token being typed: the last run of letters in `q`.
pub fn last_token(q: &str) -> Option<&str> {
    q.rsplit(|c: char| !c.is_alphabetic()).find(|t| !t.is_empty())
}
