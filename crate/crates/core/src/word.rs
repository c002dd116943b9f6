//! Finite words over an ordered alphabet.
//!
//! Letters are stored as 1-based indices: letter `1` is the least letter `a`,
//! letter `2` is `b`, and so on. Rendering to lowercase Latin letters happens
//! only at the string boundary, so alphabets larger than 26 are usable
//! internally (they render as `<k>` past `z`).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = u8;

/// An ordered alphabet `a_1 < a_2 < ... < a_sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    sigma: usize,
}

impl Alphabet {
    pub const MAX_SIGMA: usize = Letter::MAX as usize;

    pub fn new(sigma: usize) -> Result<Self> {
        if sigma == 0 || sigma > Self::MAX_SIGMA {
            return Err(Error::InvalidAlphabet {
                sigma,
                max: Self::MAX_SIGMA,
            });
        }
        Ok(Alphabet { sigma })
    }

    pub fn binary() -> Self {
        Alphabet { sigma: 2 }
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter >= 1 && (letter as usize) <= self.sigma
    }

    /// Parses a lowercase word, rejecting letters beyond this alphabet.
    pub fn parse(&self, s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let letter = match ch {
                'a'..='z' => ch as u8 - b'a' + 1,
                _ => {
                    return Err(Error::InvalidCharacter {
                        ch,
                        sigma: self.sigma,
                    })
                }
            };
            if !self.contains(letter) {
                return Err(Error::InvalidCharacter {
                    ch,
                    sigma: self.sigma,
                });
            }
            letters.push(letter);
        }
        Ok(Word(letters))
    }

    /// Checks that every letter of `w` belongs to this alphabet.
    pub fn check(&self, w: &Word) -> Result<()> {
        match w.iter().find(|&&l| !self.contains(l)) {
            Some(&letter) => Err(Error::LetterOutOfRange {
                letter,
                sigma: self.sigma,
            }),
            None => Ok(()),
        }
    }
}

/// A finite word. The derived ordering is the lexicographic order induced by
/// the letter order, with proper prefixes sorting first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based letter indices.
    ///
    /// Panics if a letter is `0`.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|&l| l >= 1), "letters are 1-based");
        Word(letters)
    }

    /// `x^k` for a single letter `x`.
    pub fn power_of_letter(letter: Letter, k: usize) -> Self {
        Word::from_letters(vec![letter; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// The largest letter index used, `0` for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The smallest alphabet containing every letter of the word.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet {
            sigma: (self.max_letter() as usize).max(1),
        }
    }

    pub fn slice(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(letter >= 1, "letters are 1-based");
        self.0.push(letter);
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    pub fn count_letter(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

pub(crate) fn is_palindrome(s: &[Letter]) -> bool {
    s.iter().eq(s.iter().rev())
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word::from_letters(s.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses over the full 26-letter Latin alphabet.
    fn from_str(s: &str) -> Result<Self> {
        Alphabet { sigma: 26 }.parse(s)
    }
}

pub(crate) fn render_letter(f: &mut impl fmt::Write, letter: Letter) -> fmt::Result {
    if (1..=26).contains(&letter) {
        f.write_char((b'a' + letter - 1) as char)
    } else {
        write!(f, "<{letter}>")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            render_letter(f, l)?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Lexicographic comparison of two words.
pub fn compare_lex(u: &Word, v: &Word) -> std::cmp::Ordering {
    u.cmp(v)
}

/// All factor occurrences of a word together with its distinct non-empty factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factors {
    /// `(start, len)` for every non-empty factor occurrence; `n(n+1)/2` entries.
    pub occurrences: Vec<(usize, usize)>,
    /// Distinct non-empty factors in lexicographic order.
    pub distinct: Vec<Word>,
}

pub fn factors(w: &Word) -> Factors {
    let n = w.len();
    let mut occurrences = Vec::with_capacity(n * (n + 1) / 2);
    let mut distinct = BTreeSet::new();
    for start in 0..n {
        for len in 1..=n - start {
            occurrences.push((start, len));
            distinct.insert(&w[start..start + len]);
        }
    }
    Factors {
        occurrences,
        distinct: distinct.into_iter().map(Word::from).collect(),
    }
}

/// The smallest period `d` of `w` such that `w` is a power of its prefix of length `d`.
fn root_length(w: &[Letter]) -> usize {
    let n = w.len();
    (1..=n)
        .find(|&d| n.is_multiple_of(d) && w.chunks(d).all(|c| c == &w[..d]))
        .unwrap_or(n)
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(root_length(w) == w.len())
}

/// Rotation `k` of `w`: `w[k..] + w[..k]`.
pub fn rotation(w: &Word, k: usize) -> Word {
    let mut letters = Vec::with_capacity(w.len());
    letters.extend_from_slice(&w[k..]);
    letters.extend_from_slice(&w[..k]);
    Word(letters)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugates {
    /// The `|w|` rotations in rotation order, duplicates included.
    pub rotations: Vec<Word>,
    pub distinct_count: usize,
}

pub fn conjugates(w: &Word) -> Result<Conjugates> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let rotations: Vec<Word> = (0..w.len()).map(|k| rotation(w, k)).collect();
    let distinct_count = rotations.iter().collect::<BTreeSet<_>>().len();
    Ok(Conjugates {
        rotations,
        distinct_count,
    })
}

/// Non-empty proper borders, shortest first.
pub fn borders(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    Ok((1..n)
        .filter(|&k| w[..k] == w[n - k..])
        .map(|k| w.slice(0, k))
        .collect())
}

pub fn reverse(w: &Word) -> Word {
    Word(w.iter().rev().copied().collect())
}
