//! Data files shipped with the crate.

use crate::coder::CodeTable;
use crate::expander::{default_rules, DEFAULT_RULES};
use crate::lexicon::Lexicon;
use crate::pipeline::Engine;

pub const LEXICON: &str = include_str!("../data/lexicon.tsv");
pub const RULES: &str = DEFAULT_RULES;
pub const GOLD: &str = include_str!("../data/gold.tsv");

pub fn lexicon(table: &CodeTable) -> Lexicon {
    Lexicon::parse(LEXICON, table).expect("bundled lexicon is valid")
}

/// Engine over the bundled lexicon, default rules and default code table.
pub fn engine() -> Engine {
    let table = CodeTable::default();
    Engine::new(lexicon(&table), default_rules(), table)
}
