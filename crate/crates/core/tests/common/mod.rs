//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::HashSet;

use swabhasha::expander::RuleSet;

/// Full-matrix Wagner-Fischer edit distance.
pub fn oracle_distance(a: &[u8], b: &[u8]) -> usize {
    let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..=b.len() {
        d[0][j] = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = d[i - 1][j - 1] + if a[i - 1] == b[j - 1] { 0 } else { 1 };
            d[i][j] = sub.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    d[a.len()][b.len()]
}

/// Normalized similarity computed in floating point, rounded half up.
pub fn oracle_similarity(a: &[u8], b: &[u8]) -> u8 {
    let max = a.len().max(b.len()) as f64;
    let d = oracle_distance(a, b) as f64;
    (100.0 * (max - d) / max + 0.5).floor() as u8
}

/// Builds every expansion as a string by inserting vowel letters into the
/// skeleton text, and returns the distinct results in first-seen order.
pub fn oracle_expansions(skeleton: &str, rules: &RuleSet) -> Vec<String> {
    let letters: Vec<char> = skeleton.chars().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rule in rules.rules().iter().filter(|r| r.skeleton_len() == letters.len()) {
        for pattern in rule.patterns() {
            let mut word = String::new();
            for pos in 0..=letters.len() {
                if pos > 0 {
                    word.push(letters[pos - 1]);
                }
                if let Some(j) = rule.slots().iter().position(|&s| s == pos) {
                    word.push(pattern[j]);
                }
            }
            if seen.insert(word.clone()) {
                out.push(word);
            }
        }
    }
    out
}

pub const CONSONANTS: &str = "bcdfghjklmnpqrstvwxyz";
