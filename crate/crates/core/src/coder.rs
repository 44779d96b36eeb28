//! Letter coding.
//!
//! Every Roman letter maps to a small integer code. Vowels sit at or below
//! [`CodeTable::vowel_max`] and consonants above it, so a word whose codes all
//! exceed the boundary is a bare consonant skeleton.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Boundary code used by the default table.
pub const DEFAULT_VOWEL_MAX: u8 = 10;

const VOWELS: [char; 5] = ['a', 'e', 'i', 'o', 'u'];

/// Highest code a table may assign.
pub const MAX_CODE: u8 = 99;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoderError {
    #[error("empty input")]
    EmptyInput,
    #[error("non-alphabetic character {ch:?} at position {position}")]
    NonAlphabetic { ch: char, position: usize },
    #[error("letter {0:?} has no code")]
    UnmappedLetter(char),
    #[error("code {0} is not assigned to any letter")]
    UnknownCode(u8),
    #[error("code sequence is empty")]
    EmptySequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeTableError {
    #[error("line {line}: expected `letter=code`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {letter:?} is not a lowercase letter a-z")]
    BadLetter { line: usize, letter: String },
    #[error("line {line}: code {code:?} is not an integer in 1..=99")]
    BadCode { line: usize, code: String },
    #[error("letter {0:?} is assigned more than once")]
    DuplicateLetter(char),
    #[error("code {code} is shared by {first:?} and {second:?}")]
    DuplicateCode { code: u8, first: char, second: char },
    #[error("letter {0:?} is missing from the table")]
    MissingLetter(char),
    #[error("vowel {letter:?} has code {code}, above the vowel boundary {vowel_max}")]
    VowelAboveBoundary { letter: char, code: u8, vowel_max: u8 },
    #[error("consonant {letter:?} has code {code}, not above the vowel boundary {vowel_max}")]
    ConsonantBelowBoundary { letter: char, code: u8, vowel_max: u8 },
}

/// Bijective map between the 26 lowercase Roman letters and integer codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    by_letter: [u8; 26],
    by_code: [Option<char>; MAX_CODE as usize + 1],
    vowel_max: u8,
}

impl Default for CodeTable {
    /// Vowels `a e i o u` get 1..=5, consonants get 11.. in alphabetical order.
    fn default() -> Self {
        let mut pairs = Vec::with_capacity(26);
        let mut next_consonant = 11;
        for letter in 'a'..='z' {
            let code = match VOWELS.iter().position(|&v| v == letter) {
                Some(i) => i as u8 + 1,
                None => {
                    next_consonant += 1;
                    next_consonant - 1
                }
            };
            pairs.push((letter, code));
        }
        Self::from_pairs(pairs, DEFAULT_VOWEL_MAX).expect("default table is valid")
    }
}

impl CodeTable {
    /// Builds a table, checking coverage, bijectivity and the vowel boundary.
    pub fn from_pairs(
        pairs: impl IntoIterator<Item = (char, u8)>,
        vowel_max: u8,
    ) -> Result<Self, CodeTableError> {
        let mut by_letter = [0u8; 26];
        let mut by_code = [None; MAX_CODE as usize + 1];
        for (letter, code) in pairs {
            let slot = &mut by_letter[letter_index(letter).ok_or(CodeTableError::BadLetter {
                line: 0,
                letter: letter.to_string(),
            })?];
            if *slot != 0 {
                return Err(CodeTableError::DuplicateLetter(letter));
            }
            if code == 0 || code > MAX_CODE {
                return Err(CodeTableError::BadCode { line: 0, code: code.to_string() });
            }
            if let Some(first) = by_code[code as usize] {
                return Err(CodeTableError::DuplicateCode { code, first, second: letter });
            }
            *slot = code;
            by_code[code as usize] = Some(letter);
        }
        for (i, &code) in by_letter.iter().enumerate() {
            let letter = (b'a' + i as u8) as char;
            if code == 0 {
                return Err(CodeTableError::MissingLetter(letter));
            }
            if VOWELS.contains(&letter) {
                if code > vowel_max {
                    return Err(CodeTableError::VowelAboveBoundary { letter, code, vowel_max });
                }
            } else if code <= vowel_max {
                return Err(CodeTableError::ConsonantBelowBoundary { letter, code, vowel_max });
            }
        }
        Ok(Self { by_letter, by_code, vowel_max })
    }

    /// Parses an override file: `letter=code` per line, `#` comments, and an
    /// optional `vowel_max=N` line.
    pub fn parse(text: &str) -> Result<Self, CodeTableError> {
        let mut pairs = Vec::new();
        let mut seen: BTreeMap<char, usize> = BTreeMap::new();
        let mut vowel_max = DEFAULT_VOWEL_MAX;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| CodeTableError::Malformed { line, text: raw.to_string() })?;
            let (key, value) = (key.trim(), value.trim());
            let code: u8 = value
                .parse()
                .ok()
                .filter(|c| (1..=MAX_CODE).contains(c))
                .ok_or_else(|| CodeTableError::BadCode { line, code: value.to_string() })?;
            if key == "vowel_max" {
                vowel_max = code;
                continue;
            }
            let mut chars = key.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => c,
                _ => return Err(CodeTableError::BadLetter { line, letter: key.to_string() }),
            };
            if seen.insert(letter, line).is_some() {
                return Err(CodeTableError::DuplicateLetter(letter));
            }
            pairs.push((letter, code));
        }
        Self::from_pairs(pairs, vowel_max)
    }

    /// Renders the table in the override file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("vowel_max={}\n", self.vowel_max);
        for (letter, code) in self.iter() {
            out.push_str(&format!("{letter}={code}\n"));
        }
        out
    }

    pub fn vowel_max(&self) -> u8 {
        self.vowel_max
    }

    pub fn code(&self, letter: char) -> Option<u8> {
        letter_index(letter).map(|i| self.by_letter[i])
    }

    pub fn letter(&self, code: u8) -> Option<char> {
        self.by_code.get(code as usize).copied().flatten()
    }

    pub fn is_vowel_code(&self, code: u8) -> bool {
        code <= self.vowel_max
    }

    /// `(letter, code)` pairs in alphabetical order.
    pub fn iter(&self) -> impl Iterator<Item = (char, u8)> + '_ {
        self.by_letter.iter().enumerate().map(|(i, &c)| ((b'a' + i as u8) as char, c))
    }
}

fn letter_index(letter: char) -> Option<usize> {
    letter.is_ascii_lowercase().then(|| (letter as u8 - b'a') as usize)
}

/// Ordered letter codes of one word.
///
/// Compared token-wise. The string form renders each code as two fixed-width
/// digits, so `[1, 12]` and `[11, 2]` never alias.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSeq(Vec<u8>);

impl CodeSeq {
    pub fn new(codes: Vec<u8>) -> Result<Self, CoderError> {
        if codes.is_empty() {
            return Err(CoderError::EmptySequence);
        }
        Ok(Self(codes))
    }

    pub fn codes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_codes(self) -> Vec<u8> {
        self.0
    }

    /// Concatenates two sequences.
    pub fn concat(&self, other: &CodeSeq) -> CodeSeq {
        let mut codes = self.0.clone();
        codes.extend_from_slice(&other.0);
        CodeSeq(codes)
    }
}

impl fmt::Display for CodeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for code in &self.0 {
            write!(f, "{code:02}")?;
        }
        Ok(())
    }
}

/// Whether a word carries any vowel letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scenario {
    NoVowel,
    WithVowel,
}

impl Scenario {
    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::NoVowel => "no_vowel",
            Scenario::WithVowel => "with_vowel",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Splits a word into lowercase letters, one token per letter.
///
/// ```
/// use swabhasha::coder::tokenize;
/// assert_eq!(tokenize("Amma").unwrap(), vec!['a', 'm', 'm', 'a']);
/// ```
pub fn tokenize(word: &str) -> Result<Vec<char>, CoderError> {
    let word = word.trim();
    if word.is_empty() {
        return Err(CoderError::EmptyInput);
    }
    word.chars()
        .flat_map(char::to_lowercase)
        .enumerate()
        .map(|(position, ch)| {
            if ch.is_ascii_lowercase() {
                Ok(ch)
            } else {
                Err(CoderError::NonAlphabetic { ch, position })
            }
        })
        .collect()
}

pub fn encode(letters: &[char], table: &CodeTable) -> Result<CodeSeq, CoderError> {
    let codes = letters
        .iter()
        .map(|&l| table.code(l).ok_or(CoderError::UnmappedLetter(l)))
        .collect::<Result<Vec<_>, _>>()?;
    CodeSeq::new(codes)
}

pub fn decode(seq: &CodeSeq, table: &CodeTable) -> Result<Vec<char>, CoderError> {
    seq.codes()
        .iter()
        .map(|&c| table.letter(c).ok_or(CoderError::UnknownCode(c)))
        .collect()
}

/// Tokenizes and encodes in one step.
pub fn encode_word(word: &str, table: &CodeTable) -> Result<CodeSeq, CoderError> {
    encode(&tokenize(word)?, table)
}

/// `NoVowel` iff every code lies above the vowel boundary.
pub fn classify(seq: &CodeSeq, table: &CodeTable) -> Scenario {
    match seq.codes().iter().min() {
        Some(&min) if min > table.vowel_max() => Scenario::NoVowel,
        _ => Scenario::WithVowel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn tokenize_examples() {
        assert_eq!(tokenize("khmd").unwrap(), letters("khmd"));
        assert_eq!(tokenize("Amma").unwrap(), letters("amma"));
        assert_eq!(tokenize("  KoHoMaDa ").unwrap(), letters("kohomada"));
        assert_eq!(tokenize(""), Err(CoderError::EmptyInput));
        assert_eq!(tokenize("   \t"), Err(CoderError::EmptyInput));
        assert_eq!(tokenize("kmd!"), Err(CoderError::NonAlphabetic { ch: '!', position: 3 }));
        assert_eq!(tokenize("ab cd"), Err(CoderError::NonAlphabetic { ch: ' ', position: 2 }));
        assert_eq!(tokenize("කො"), Err(CoderError::NonAlphabetic { ch: 'ක', position: 0 }));
    }

    #[test]
    fn default_table_values() {
        let t = CodeTable::default();
        let expected = [
            ('a', 1), ('e', 2), ('i', 3), ('o', 4), ('u', 5), ('b', 11), ('c', 12),
            ('d', 13), ('f', 14), ('g', 15), ('h', 16), ('j', 17), ('k', 18), ('l', 19),
            ('m', 20), ('n', 21), ('p', 22), ('q', 23), ('r', 24), ('s', 25), ('t', 26),
            ('v', 27), ('w', 28), ('x', 29), ('y', 30), ('z', 31),
        ];
        for (letter, code) in expected {
            assert_eq!(t.code(letter), Some(code), "{letter}");
        }
        assert_eq!(t.vowel_max(), 10);
    }

    #[test]
    fn encode_decode_examples() {
        let t = CodeTable::default();
        assert_eq!(encode(&['a'], &t).unwrap().codes(), &[1]);
        let khmd = encode(&letters("khmd"), &t).unwrap();
        assert_eq!(khmd.codes(), &[18, 16, 20, 13]);
        assert_eq!(decode(&khmd, &t).unwrap(), letters("khmd"));
        assert_eq!(decode(&CodeSeq::new(vec![1]).unwrap(), &t).unwrap(), vec!['a']);
        assert_eq!(
            decode(&CodeSeq::new(vec![99]).unwrap(), &t),
            Err(CoderError::UnknownCode(99))
        );
        assert_eq!(encode(&['A'], &t), Err(CoderError::UnmappedLetter('A')));
        assert_eq!(encode(&[], &t), Err(CoderError::EmptySequence));
    }

    #[test]
    fn fixed_width_rendering() {
        let t = CodeTable::default();
        assert_eq!(encode_word("khmd", &t).unwrap().to_string(), "18162013");
        assert_eq!(encode_word("kohomada", &t).unwrap().to_string(), "1804160420011301");
        // [1, 12] and [11, 2] would both be "112" without padding.
        let a = CodeSeq::new(vec![1, 12]).unwrap().to_string();
        let b = CodeSeq::new(vec![11, 2]).unwrap().to_string();
        assert_ne!(a, b);
    }

    #[test]
    fn classify_examples() {
        let t = CodeTable::default();
        let class = |w: &str| classify(&encode_word(w, &t).unwrap(), &t);
        assert_eq!(class("khmd"), Scenario::NoVowel);
        assert_eq!(class("amma"), Scenario::WithVowel);
        assert_eq!(class("kynna"), Scenario::WithVowel);
        assert_eq!(class("kynn"), Scenario::NoVowel);
        assert_eq!(class("y"), Scenario::NoVowel);
        assert_eq!(class("u"), Scenario::WithVowel);
    }

    #[test]
    fn table_file_round_trip() {
        let t = CodeTable::default();
        let parsed = CodeTable::parse(&t.to_file_string()).unwrap();
        assert_eq!(parsed, t);
    }

    #[test]
    fn table_file_validation() {
        let base = CodeTable::default().to_file_string();

        let swapped = base.replace("a=1\n", "a=11\n").replace("b=11\n", "b=1\n");
        assert!(matches!(
            CodeTable::parse(&swapped),
            Err(CodeTableError::VowelAboveBoundary { letter: 'a', .. })
        ));

        let dup = base.replace("b=11\n", "b=12\n");
        assert!(matches!(CodeTable::parse(&dup), Err(CodeTableError::DuplicateCode { code: 12, .. })));

        let missing = base.replace("z=31\n", "");
        assert_eq!(CodeTable::parse(&missing), Err(CodeTableError::MissingLetter('z')));

        let twice = format!("{base}a=6\n");
        assert_eq!(CodeTable::parse(&twice), Err(CodeTableError::DuplicateLetter('a')));

        assert!(matches!(
            CodeTable::parse("# header\nab=3\n"),
            Err(CodeTableError::BadLetter { line: 2, .. })
        ));
        assert!(matches!(
            CodeTable::parse("a=100\n"),
            Err(CodeTableError::BadCode { line: 1, .. })
        ));
        assert!(matches!(CodeTable::parse("a 1\n"), Err(CodeTableError::Malformed { line: 1, .. })));

        let low_consonant = base.replace("vowel_max=10", "vowel_max=11");
        assert!(matches!(
            CodeTable::parse(&low_consonant),
            Err(CodeTableError::ConsonantBelowBoundary { letter: 'b', .. })
        ));
    }

    #[test]
    fn comments_and_custom_boundary() {
        let mut text = String::from("# custom\nvowel_max=30\n");
        for (i, l) in ('a'..='z').enumerate() {
            let code = if "aeiou".contains(l) { 10 + i as u8 } else { 40 + i as u8 };
            text.push_str(&format!("{l} = {code}  # note\n"));
        }
        let t = CodeTable::parse(&text).unwrap();
        assert_eq!(t.vowel_max(), 30);
        assert_eq!(t.code('e'), Some(14));
        let seq = encode_word("khmd", &t).unwrap();
        assert_eq!(classify(&seq, &t), Scenario::NoVowel);
    }
}
