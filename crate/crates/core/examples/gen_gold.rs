//! Regenerates `data/gold.tsv`.
//!
//! Named cases come first: consonant skeletons of the seed-combination words,
//! the common test words with vowels, and the `kiyanna` family. Derived cases
//! follow, taken from the bundled lexicon at fixed strides so none are hand
//! picked:
//!
//! * every 10th entry, all vowels deleted, as `no_vowel`;
//! * every 7th entry (from id 3), unchanged, as `with_vowel`;
//! * every 9th entry (from id 5), first interior vowel deleted, as
//!   `reduced_vowel`.
//!
//!     cargo run -p swabhasha --example gen_gold > crates/core/data/gold.tsv

use std::collections::HashSet;

use swabhasha::{bundled, CodeTable};

const NAMED: &[(&str, &str, &str)] = &[
    ("bh", "බහාව", "no_vowel"),
    ("thth", "තාත්තා", "no_vowel"),
    ("ps", "පසු", "no_vowel"),
    ("kl", "කළු", "no_vowel"),
    ("dws", "දවස", "no_vowel"),
    ("mkd", "මොකද", "no_vowel"),
    ("hryt", "හරියට", "no_vowel"),
    ("ndgnn", "නිදාගන්නා", "no_vowel"),
    ("ndhs", "නිදහස", "no_vowel"),
    ("thbnw", "තිබෙනවා", "no_vowel"),
    ("khmd", "කොහොමද", "no_vowel"),
    ("kynn", "කියන්න", "no_vowel"),
    ("kiyanna", "කියන්න", "with_vowel"),
    ("innawa", "ඉන්නවා", "with_vowel"),
    ("kohomada", "කොහොමද", "with_vowel"),
    ("karanne", "කරන්නේ", "with_vowel"),
    ("amma", "අම්මා", "with_vowel"),
    ("ethakota", "එතකොට", "with_vowel"),
    ("neda", "නේද", "with_vowel"),
    ("wahanse", "වහන්සේ", "with_vowel"),
    ("dunna", "දුන්නා", "with_vowel"),
    ("epa", "එපා", "with_vowel"),
    ("kianna", "කියන්න", "with_vowel"),
    ("kynna", "කියන්න", "reduced_vowel"),
    ("kiynna", "කියන්න", "reduced_vowel"),
];

fn is_vowel(c: char) -> bool {
    "aeiou".contains(c)
}

fn strip_vowels(word: &str) -> String {
    word.chars().filter(|&c| !is_vowel(c)).collect()
}

fn drop_interior_vowel(word: &str) -> Option<String> {
    let chars: Vec<char> = word.chars().collect();
    let pos = (1..chars.len().saturating_sub(1)).find(|&i| is_vowel(chars[i]))?;
    let mut out = chars;
    out.remove(pos);
    Some(out.into_iter().collect())
}

fn main() {
    let lexicon = bundled::lexicon(&CodeTable::default());
    let mut seen: HashSet<String> = HashSet::new();
    println!("# input\texpected\tscenario_label");
    for &(input, expected, label) in NAMED {
        seen.insert(input.to_string());
        println!("{input}\t{expected}\t{label}");
    }
    let mut emit = |input: String, expected: &str, label: &str| {
        if !input.is_empty() && seen.insert(input.clone()) {
            println!("{input}\t{expected}\t{label}");
        }
    };
    for e in lexicon.entries() {
        let roman = &e.romanizations[0];
        if e.id % 10 == 0 {
            emit(strip_vowels(roman), &e.sinhala, "no_vowel");
        }
        if e.id % 7 == 3 {
            emit(roman.clone(), &e.sinhala, "with_vowel");
        }
        if e.id % 9 == 5 {
            if let Some(reduced) = drop_interior_vowel(roman) {
                let label = if reduced.chars().any(is_vowel) { "reduced_vowel" } else { "no_vowel" };
                emit(reduced, &e.sinhala, label);
            }
        }
    }
}
