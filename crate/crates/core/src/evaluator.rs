//! Word-level (top-1) and suggestion-level (top-k) accuracy over gold cases.
//!
//! Gold file lines are `input<TAB>expected<TAB>label` where label is one of
//! `no_vowel`, `with_vowel`, `reduced_vowel`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::coder::tokenize;
use crate::lexicon::has_sinhala;
use crate::pipeline::{Engine, Options};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("line {line}: expected 3 tab-separated fields, found {found}")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: unknown scenario label {label:?}")]
    UnknownScenarioLabel { line: usize, label: String },
    #[error("line {line}: input {input:?} is not a plain Roman word")]
    InvalidInput { line: usize, input: String },
    #[error("line {line}: expected word {text:?} is not Sinhala")]
    InvalidExpected { line: usize, text: String },
    #[error("gold set is empty")]
    EmptyGoldSet,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("gold file is not valid UTF-8")]
    NotUtf8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScenarioLabel {
    NoVowel,
    WithVowel,
    ReducedVowel,
}

impl ScenarioLabel {
    pub const ALL: [ScenarioLabel; 3] =
        [ScenarioLabel::NoVowel, ScenarioLabel::WithVowel, ScenarioLabel::ReducedVowel];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioLabel::NoVowel => "no_vowel",
            ScenarioLabel::WithVowel => "with_vowel",
            ScenarioLabel::ReducedVowel => "reduced_vowel",
        }
    }
}

impl FromStr for ScenarioLabel {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Self::ALL.into_iter().find(|l| l.as_str() == s).ok_or(())
    }
}

impl fmt::Display for ScenarioLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldCase {
    pub input: String,
    pub expected: String,
    pub label: ScenarioLabel,
}

pub fn load_gold(source: &[u8]) -> Result<Vec<GoldCase>, EvalError> {
    parse_gold(std::str::from_utf8(source).map_err(|_| EvalError::NotUtf8)?)
}

pub fn parse_gold(text: &str) -> Result<Vec<GoldCase>, EvalError> {
    let mut cases = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        let [input, expected, label] = fields[..] else {
            return Err(EvalError::MalformedLine { line, found: fields.len() });
        };
        let label = label
            .parse()
            .map_err(|_| EvalError::UnknownScenarioLabel { line, label: label.to_string() })?;
        if tokenize(input).is_err() {
            return Err(EvalError::InvalidInput { line, input: input.to_string() });
        }
        if !has_sinhala(expected) {
            return Err(EvalError::InvalidExpected { line, text: expected.to_string() });
        }
        cases.push(GoldCase { input: input.to_string(), expected: expected.to_string(), label });
    }
    Ok(cases)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub cases: usize,
    pub top1_hits: usize,
    pub topk_hits: usize,
}

impl Counts {
    fn add(&mut self, top1: bool, topk: bool) {
        self.cases += 1;
        self.top1_hits += usize::from(top1);
        self.topk_hits += usize::from(topk);
    }
}

/// Per-case outcome, kept so reports can list the misses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub case: GoldCase,
    pub top1: bool,
    pub topk: bool,
    /// Sinhala words suggested, or the error message for failed inputs.
    pub got: Result<Vec<String>, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    pub word_level_acc: f64,
    pub suggestion_level_acc: f64,
    pub per_scenario: BTreeMap<ScenarioLabel, Counts>,
    pub k: usize,
    pub total: Counts,
    pub outcomes: Vec<CaseOutcome>,
}

/// Runs every case through the engine with `top_k = k`. Inputs that fail to
/// transliterate count as misses.
pub fn evaluate(cases: &[GoldCase], engine: &Engine, k: usize, threshold: u8) -> Result<Metrics, EvalError> {
    if cases.is_empty() {
        return Err(EvalError::EmptyGoldSet);
    }
    if k == 0 {
        return Err(EvalError::ZeroK);
    }
    let opts = Options { top_k: k, threshold };
    let mut per_scenario: BTreeMap<ScenarioLabel, Counts> = BTreeMap::new();
    let mut total = Counts::default();
    let mut outcomes = Vec::with_capacity(cases.len());
    for case in cases {
        let got = engine
            .transliterate(&case.input, opts)
            .map(|r| r.suggestions.into_iter().map(|s| s.sinhala).collect::<Vec<_>>())
            .map_err(|e| e.to_string());
        let (top1, topk) = match &got {
            Ok(words) => (
                words.first() == Some(&case.expected),
                words.iter().take(k).any(|w| *w == case.expected),
            ),
            Err(_) => (false, false),
        };
        per_scenario.entry(case.label).or_default().add(top1, topk);
        total.add(top1, topk);
        outcomes.push(CaseOutcome { case: case.clone(), top1, topk, got });
    }
    Ok(Metrics {
        word_level_acc: total.top1_hits as f64 / total.cases as f64,
        suggestion_level_acc: total.topk_hits as f64 / total.cases as f64,
        per_scenario,
        k,
        total,
        outcomes,
    })
}

/// Human-readable table followed by a `key=value` block.
pub fn report(metrics: &Metrics) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<14} {:>6} {:>6} {:>6} {:>9} {:>9}", "scenario", "cases", "top1", "topk", "top1_acc", "topk_acc");
    let mut row = |name: &str, c: &Counts| {
        let _ = writeln!(
            out,
            "{:<14} {:>6} {:>6} {:>6} {:>9.3} {:>9.3}",
            name,
            c.cases,
            c.top1_hits,
            c.topk_hits,
            frac(c.top1_hits, c.cases),
            frac(c.topk_hits, c.cases)
        );
    };
    for (label, c) in &metrics.per_scenario {
        row(label.as_str(), c);
    }
    row("all", &metrics.total);

    let misses: Vec<&CaseOutcome> = metrics.outcomes.iter().filter(|o| !o.top1).collect();
    if !misses.is_empty() {
        let _ = writeln!(out, "\nmisses (top-1):");
        for m in misses {
            let got = match &m.got {
                Ok(words) if words.is_empty() => "-".to_string(),
                Ok(words) => words.join(" "),
                Err(e) => format!("error: {e}"),
            };
            let mark = if m.topk { "in top-k" } else { "absent" };
            let _ = writeln!(out, "  {}\t{}\t{}\t{}\t{}", m.case.label, m.case.input, m.case.expected, mark, got);
        }
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "k={}", metrics.k);
    let _ = writeln!(out, "cases={}", metrics.total.cases);
    let _ = writeln!(out, "word_level={:.3}", metrics.word_level_acc);
    let _ = writeln!(out, "suggestion_level={:.3}", metrics.suggestion_level_acc);
    for (label, c) in &metrics.per_scenario {
        let _ = writeln!(out, "{label}.cases={}", c.cases);
        let _ = writeln!(out, "{label}.top1={}", c.top1_hits);
        let _ = writeln!(out, "{label}.topk={}", c.topk_hits);
    }
    out
}

fn frac(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn parse_examples() {
        let cases = parse_gold("kohomada\tකොහොමද\twith_vowel\nkhmd\tකොහොමද\tno_vowel\n").unwrap();
        assert_eq!(cases.len(), 2);
        assert_eq!(cases[1].label, ScenarioLabel::NoVowel);
        assert_eq!(
            parse_gold("x\ty\tweird\n"),
            Err(EvalError::UnknownScenarioLabel { line: 1, label: "weird".into() })
        );
        assert_eq!(parse_gold("# h\nkhmd\tකොහොමද\n"), Err(EvalError::MalformedLine { line: 2, found: 2 }));
        assert!(matches!(parse_gold("kh md\tකොහොමද\tno_vowel\n"), Err(EvalError::InvalidInput { .. })));
        assert!(matches!(parse_gold("khmd\tkohomada\tno_vowel\n"), Err(EvalError::InvalidExpected { .. })));
    }

    #[test]
    fn exact_inputs_score_perfectly() {
        let engine = bundled::engine();
        let cases: Vec<GoldCase> = engine
            .lexicon
            .entries()
            .iter()
            .take(40)
            .filter(|e| engine.lexicon.lookup_exact(&e.code_seqs[0])[0].id == e.id)
            .map(|e| GoldCase {
                input: e.romanizations[0].clone(),
                expected: e.sinhala.clone(),
                label: ScenarioLabel::WithVowel,
            })
            .collect();
        let m = evaluate(&cases, &engine, 5, 60).unwrap();
        assert_eq!(m.word_level_acc, 1.0);
        assert_eq!(m.suggestion_level_acc, 1.0);
    }

    #[test]
    fn empty_and_zero_k() {
        let engine = bundled::engine();
        assert_eq!(evaluate(&[], &engine, 5, 60), Err(EvalError::EmptyGoldSet));
        let one = parse_gold("amma\tඅම්මා\twith_vowel\n").unwrap();
        assert_eq!(evaluate(&one, &engine, 0, 60), Err(EvalError::ZeroK));
    }

    #[test]
    fn failing_inputs_are_misses() {
        let engine = bundled::engine();
        let cases = vec![
            GoldCase { input: "amma".into(), expected: "අම්මා".into(), label: ScenarioLabel::WithVowel },
            GoldCase { input: "bcdfghjklm".into(), expected: "අම්මා".into(), label: ScenarioLabel::NoVowel },
        ];
        let m = evaluate(&cases, &engine, 5, 60).unwrap();
        assert_eq!(m.total, Counts { cases: 2, top1_hits: 1, topk_hits: 1 });
        assert!(m.outcomes[1].got.is_err());
    }

    #[test]
    fn report_format() {
        let engine = bundled::engine();
        let cases = parse_gold(
            "amma\tඅම්මා\twith_vowel\nkhmd\tකොහොමද\tno_vowel\nkynna\tකියන්න\treduced_vowel\n",
        )
        .unwrap();
        let m = evaluate(&cases, &engine, 5, 60).unwrap();
        let text = report(&m);
        assert!(text.contains("suggestion_level=1.000"), "{text}");
        for label in ["no_vowel", "with_vowel", "reduced_vowel"] {
            assert!(text.lines().any(|l| l.starts_with(label)), "{label} row missing");
            assert!(text.contains(&format!("{label}.cases=1")));
        }
        assert_eq!(text, report(&m));

        let perfect = evaluate(&cases[..2], &engine, 5, 60).unwrap();
        assert!(report(&perfect).contains("word_level=1.000"));
    }
}
