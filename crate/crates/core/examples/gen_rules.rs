//! Regenerates `data/rules.txt`.
//!
//! Two sources of rules, in this order:
//!
//! 1. The eight seed vowel combinations. A combination of `m` vowels is placed
//!    one vowel after each consonant for skeletons of length `m`, and after
//!    consecutive consonant groups of 1 to 4 letters for longer skeletons up
//!    to `min(4m, 9)` letters.
//! 2. The vowel layout of every Romanization in the lexicon given as the first
//!    argument (the bundled one by default). Romanizations with two adjacent
//!    vowels cannot be expressed as slots and are skipped.
//!
//!     cargo run -p swabhasha --example gen_rules > crates/core/data/rules.txt



use swabhasha::expander::MAX_SKELETON_LEN;

const SEED_PATTERNS: [&str; 8] = ["aa", "au", "aaa", "oaa", "aiaa", "iaaa", "ieaa", "ooaa"];
const MAX_GROUP: usize = 4;

fn is_vowel(c: char) -> bool {
    "aeiou".contains(c)
}

/// Slots and vowels of a Romanization, or `None` when it has adjacent vowels
/// or no consonant.
fn vowel_layout(word: &str) -> Option<(usize, Vec<usize>, String)> {
    let mut consonants = 0;
    let mut slots = Vec::new();
    let mut vowels = String::new();
    let mut prev_vowel = false;
    for c in word.chars() {
        if is_vowel(c) {
            if prev_vowel {
                return None;
            }
            slots.push(consonants);
            vowels.push(c);
        } else {
            consonants += 1;
        }
        prev_vowel = is_vowel(c);
    }
    (consonants > 0 && consonants <= MAX_SKELETON_LEN && !slots.is_empty())
        .then_some((consonants, slots, vowels))
}

/// All ways to split `total` letters into `parts` groups of 1..=MAX_GROUP.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=MAX_GROUP.min(total) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn add(rules: &mut Vec<((usize, Vec<usize>), Vec<String>)>, key: (usize, Vec<usize>), pattern: &str) {
    match rules.iter_mut().find(|(k, _)| *k == key) {
        Some((_, pats)) if pats.iter().any(|p| p == pattern) => {}
        Some((_, pats)) => pats.push(pattern.to_string()),
        None => rules.push((key, vec![pattern.to_string()])),
    }
}

fn main() {
    let lexicon = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable lexicon"),
        None => swabhasha::bundled::LEXICON.to_string(),
    };

    let mut seeded = Vec::new();
    for pattern in SEED_PATTERNS {
        let m = pattern.len();
        for len in m..=(MAX_GROUP * m).min(MAX_SKELETON_LEN) {
            for comp in compositions(len, m) {
                let slots = comp
                    .iter()
                    .scan(0, |pos, g| {
                        *pos += g;
                        Some(*pos)
                    })
                    .collect();
                add(&mut seeded, (len, slots), pattern);
            }
        }
    }

    let mut studied = Vec::new();
    for line in lexicon.lines().filter(|l| !l.starts_with('#')) {
        let Some(romans) = line.split('\t').nth(1) else { continue };
        for r in romans.split(';') {
            if let Some((len, slots, vowels)) = vowel_layout(r) {
                add(&mut studied, (len, slots), &vowels);
            }
        }
    }

    println!("# skeleton_len|slots|patterns (space separated)");
    println!("# generated by `cargo run -p swabhasha --example gen_rules`");
    for (title, mut rules) in [("seed vowel combinations", seeded), ("lexicon vowel layouts", studied)] {
        rules.sort_by_key(|((len, _), _)| *len);
        println!();
        println!("# {title}");
        for ((len, slots), pats) in rules {
            let slots: Vec<String> = slots.iter().map(usize::to_string).collect();
            let pats: Vec<String> = pats
                .iter()
                .map(|p| p.chars().map(String::from).collect::<Vec<_>>().join(","))
                .collect();
            println!("{len}|{}|{}", slots.join(","), pats.join(" "));
        }
    }
}
