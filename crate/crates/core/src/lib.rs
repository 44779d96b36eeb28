//! Word-level Singlish to Sinhala transliteration.
//!
//! Roman letters are mapped to integer codes, consonant-only input is expanded
//! into vowelled candidates by positional rules, and every probe is fuzzily
//! matched against a lexicon whose Romanizations are stored as code sequences.
//!
//! ```
//! use swabhasha::{bundled, Options};
//!
//! let engine = bundled::engine();
//! let result = engine.transliterate("khmd", Options::default()).unwrap();
//! assert_eq!(result.suggestions[0].sinhala, "කොහොමද");
//! ```

pub mod bundled;
pub mod coder;
pub mod evaluator;
pub mod expander;
pub mod lexicon;
pub mod matcher;
pub mod pipeline;

pub use coder::{classify, decode, encode, encode_word, tokenize, CodeSeq, CodeTable, Scenario};
pub use expander::{default_rules, expand, load_rules, ExpansionRule, RuleSet};
pub use lexicon::{load_lexicon, Lexicon, LexiconEntry};
pub use matcher::{rank, similarity, Source, Suggestion};
pub use pipeline::{transliterate, transliterate_batch, Engine, Options, TransliterationResult};

// Book chapters compiled as doctests so their snippets stay in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/letter-codes.md")]
    mod letter_codes {}
    #[doc = include_str!("../../../book/src/lexicon.md")]
    mod lexicon {}
    #[doc = include_str!("../../../book/src/expansion.md")]
    mod expansion {}
    #[doc = include_str!("../../../book/src/matching.md")]
    mod matching {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/service.md")]
    mod service {}
}
