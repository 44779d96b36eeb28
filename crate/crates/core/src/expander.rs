//! Vowel expansion of consonant skeletons.
//!
//! A rule names a skeleton length, the positions after which vowels are
//! inserted, and the vowel patterns that may fill those positions. Rule file
//! lines look like `4|1,2,3,4|o,o,a,a`; several patterns may share one line
//! when separated by spaces: `2|1,2|a,a a,u`.

use std::collections::HashSet;

use thiserror::Error;

use crate::coder::{classify, CodeSeq, CodeTable, Scenario};

/// Longest skeleton the rule conditions cover.
pub const MAX_SKELETON_LEN: usize = 9;

pub const DEFAULT_MAX_CANDIDATES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("line {line}: {reason}")]
    MalformedRule { line: usize, reason: String },
    #[error("rules are not valid UTF-8")]
    NotUtf8,
}

impl RuleError {
    pub fn line(&self) -> Option<usize> {
        match self {
            RuleError::MalformedRule { line, .. } => Some(*line),
            RuleError::NotUtf8 => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("skeleton has {0} letters; at most 9 are supported")]
    SkeletonTooLong(usize),
    #[error("input contains vowels and is not a consonant skeleton")]
    NotASkeleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionRule {
    skeleton_len: usize,
    slots: Vec<usize>,
    patterns: Vec<Vec<char>>,
}

impl ExpansionRule {
    pub fn new(skeleton_len: usize, slots: Vec<usize>, patterns: Vec<Vec<char>>) -> Result<Self, String> {
        if !(1..=MAX_SKELETON_LEN).contains(&skeleton_len) {
            return Err(format!("skeleton length {skeleton_len} outside 1..=9"));
        }
        if slots.is_empty() {
            return Err("no slots".into());
        }
        if slots.windows(2).any(|w| w[0] >= w[1]) {
            return Err("slots must be strictly increasing".into());
        }
        if let Some(&s) = slots.iter().find(|&&s| s > skeleton_len) {
            return Err(format!("slot {s} beyond skeleton length {skeleton_len}"));
        }
        if patterns.is_empty() {
            return Err("no vowel pattern".into());
        }
        for p in &patterns {
            if p.len() != slots.len() {
                return Err(format!("pattern length {} != {} slots", p.len(), slots.len()));
            }
            if let Some(c) = p.iter().find(|c| !"aeiou".contains(**c)) {
                return Err(format!("{c:?} is not a vowel"));
            }
        }
        Ok(Self { skeleton_len, slots, patterns })
    }

    pub fn skeleton_len(&self) -> usize {
        self.skeleton_len
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn patterns(&self) -> &[Vec<char>] {
        &self.patterns
    }

    fn to_line(&self) -> String {
        let slots: Vec<String> = self.slots.iter().map(|s| s.to_string()).collect();
        let patterns: Vec<String> = self
            .patterns
            .iter()
            .map(|p| p.iter().map(char::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("{}|{}|{}", self.skeleton_len, slots.join(","), patterns.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<ExpansionRule>,
    max_candidates: usize,
}

impl Default for RuleSet {
    fn default() -> Self {
        Self { rules: Vec::new(), max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

fn parse_rule(line: usize, raw: &str) -> Result<Option<ExpansionRule>, RuleError> {
    let content = raw.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return Ok(None);
    }
    let bad = |reason: String| RuleError::MalformedRule { line, reason };
    let fields: Vec<&str> = content.split('|').map(str::trim).collect();
    let [len, slots, patterns] = fields[..] else {
        return Err(bad(format!("expected 3 `|`-separated fields, found {}", fields.len())));
    };
    let len: usize = len.parse().map_err(|_| bad(format!("bad skeleton length {len:?}")))?;
    let slots = slots
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| bad(format!("bad slot {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let patterns = patterns
        .split_whitespace()
        .map(|p| {
            p.split(',')
                .map(|v| {
                    let mut cs = v.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => Ok(c),
                        _ => Err(bad(format!("bad vowel {v:?}"))),
                    }
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    ExpansionRule::new(len, slots, patterns).map(Some).map_err(bad)
}

/// Checks a rule file and returns every line-level problem.
pub fn validate_rules(text: &str) -> Vec<RuleError> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| parse_rule(i + 1, raw).err())
        .collect()
}

pub fn load_rules(source: &[u8]) -> Result<RuleSet, RuleError> {
    RuleSet::parse(std::str::from_utf8(source).map_err(|_| RuleError::NotUtf8)?)
}

impl RuleSet {
    pub fn new(rules: Vec<ExpansionRule>) -> Self {
        Self { rules, ..Self::default() }
    }

    pub fn parse(text: &str) -> Result<Self, RuleError> {
        let mut rules = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            if let Some(rule) = parse_rule(i + 1, raw)? {
                rules.push(rule);
            }
        }
        Ok(Self::new(rules))
    }

    pub fn with_max_candidates(mut self, max_candidates: usize) -> Self {
        self.max_candidates = max_candidates;
        self
    }

    pub fn rules(&self) -> &[ExpansionRule] {
        &self.rules
    }

    pub fn max_candidates(&self) -> usize {
        self.max_candidates
    }

    pub fn for_length(&self, skeleton_len: usize) -> impl Iterator<Item = &ExpansionRule> + '_ {
        self.rules.iter().filter(move |r| r.skeleton_len == skeleton_len)
    }

    pub fn to_file_string(&self) -> String {
        self.rules.iter().map(|r| r.to_line() + "\n").collect()
    }

    /// Inserts vowels into a consonant skeleton according to every rule of
    /// matching length. Output is deduplicated, in rule-then-pattern order, and
    /// capped at [`RuleSet::max_candidates`].
    pub fn expand(&self, skeleton: &CodeSeq, table: &CodeTable) -> Result<Vec<CodeSeq>, ExpandError> {
        if classify(skeleton, table) != Scenario::NoVowel {
            return Err(ExpandError::NotASkeleton);
        }
        let consonants = skeleton.codes();
        if consonants.len() > MAX_SKELETON_LEN {
            return Err(ExpandError::SkeletonTooLong(consonants.len()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for rule in self.for_length(consonants.len()) {
            for pattern in &rule.patterns {
                if out.len() >= self.max_candidates {
                    return Ok(out);
                }
                let vowels: Vec<u8> = pattern
                    .iter()
                    .map(|&v| table.code(v).expect("vowels are always mapped"))
                    .collect();
                let mut codes = Vec::with_capacity(consonants.len() + vowels.len());
                let mut slot = 0;
                for pos in 0..=consonants.len() {
                    if pos > 0 {
                        codes.push(consonants[pos - 1]);
                    }
                    if slot < rule.slots.len() && rule.slots[slot] == pos {
                        codes.push(vowels[slot]);
                        slot += 1;
                    }
                }
                let candidate = CodeSeq::new(codes).expect("non-empty");
                if seen.insert(candidate.clone()) {
                    out.push(candidate);
                }
            }
        }
        Ok(out)
    }
}

/// Built-in rule file.
pub const DEFAULT_RULES: &str = include_str!("../data/rules.txt");

pub fn default_rules() -> RuleSet {
    RuleSet::parse(DEFAULT_RULES).expect("bundled rule file is valid")
}

pub fn expand(skeleton: &CodeSeq, rules: &RuleSet, table: &CodeTable) -> Result<Vec<CodeSeq>, ExpandError> {
    rules.expand(skeleton, table)
}
