//! Lyndon words: recognition, conjugates, factor counting and generation.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::word::{is_primitive, rotation, Alphabet, Letter, Word};

/// Single left-to-right pass: tracks the period of the longest Lyndon prefix
/// and fails as soon as a letter drops below its periodic predecessor.
fn is_lyndon_slice(w: &[Letter]) -> bool {
    let mut period = 1;
    for j in 1..w.len() {
        match w[j].cmp(&w[j - period]) {
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Greater => period = j + 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    period == w.len()
}

pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_lyndon_slice(w))
}

/// A single letter, or strictly smaller than every proper suffix.
pub fn is_lyndon_by_suffixes(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..w.len()).all(|i| w.letters() < &w[i..]))
}

/// Primitive and the least word of its conjugacy class.
pub fn is_lyndon_by_conjugates(w: &Word) -> Result<bool> {
    if !is_primitive(w)? {
        return Ok(false);
    }
    Ok((1..w.len()).all(|k| *w < rotation(w, k)))
}

/// The unique Lyndon rotation of a primitive word.
pub fn lyndon_conjugate(w: &Word) -> Result<Word> {
    if !is_primitive(w)? {
        return Err(Error::NotPrimitive(w.to_string()));
    }
    Ok((0..w.len())
        .map(|k| rotation(w, k))
        .min()
        .expect("non-empty word has a rotation"))
}

/// Calls `f(start, len)` for every occurrence of a Lyndon factor of `w`.
///
/// For each start position the scan extends the factor one letter at a time
/// while it stays a prefix of a Lyndon word, so the whole pass is quadratic.
pub fn for_each_lyndon_occurrence(w: &[Letter], mut f: impl FnMut(usize, usize)) {
    let n = w.len();
    for start in 0..n {
        f(start, 1);
        let mut period = 1;
        for j in start + 1..n {
            let len = j - start + 1;
            match w[j].cmp(&w[j - period]) {
                std::cmp::Ordering::Less => break,
                std::cmp::Ordering::Greater => period = len,
                std::cmp::Ordering::Equal => {}
            }
            if period == len {
                f(start, len);
            }
        }
    }
}

/// `(distinct, total)` Lyndon factor counts without materialising the factors.
pub fn lyndon_counts(w: &Word) -> Result<(usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(lyndon_counts_slice(w))
}

pub(crate) fn lyndon_counts_slice(w: &[Letter]) -> (usize, usize) {
    let mut seen: HashSet<&[Letter]> = HashSet::with_capacity(2 * w.len());
    let mut total = 0;
    for_each_lyndon_occurrence(w, |start, len| {
        total += 1;
        seen.insert(&w[start..start + len]);
    });
    (seen.len(), total)
}

/// The distinct Lyndon factors of a word and its Lyndon factor counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorProfile {
    /// Distinct Lyndon factors in lexicographic order.
    pub distinct: Vec<Word>,
    pub distinct_count: usize,
    /// Lyndon factor occurrences counted with multiplicity.
    pub total_count: usize,
}

pub fn lyndon_profile(w: &Word) -> Result<LyndonFactorProfile> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut distinct = BTreeSet::new();
    let mut total_count = 0;
    for_each_lyndon_occurrence(w, |start, len| {
        total_count += 1;
        distinct.insert(&w[start..start + len]);
    });
    let distinct: Vec<Word> = distinct.into_iter().map(Word::from).collect();
    Ok(LyndonFactorProfile {
        distinct_count: distinct.len(),
        distinct,
        total_count,
    })
}

/// Lyndon words of one exact length in lexicographic order.
///
/// Uses the successor rule: extend the current word periodically to the
/// target length, strip trailing maximal letters, and increment the last
/// letter. Every word produced this way is a Lyndon word of length at most
/// `n`; the iterator keeps those of length exactly `n`.
#[derive(Debug, Clone)]
pub struct LyndonWords {
    current: Vec<Letter>,
    n: usize,
    max: Letter,
    done: bool,
}

impl LyndonWords {
    pub fn new(alphabet: Alphabet, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(LyndonWords {
            current: vec![1],
            n,
            max: alphabet.sigma() as Letter,
            done: false,
        })
    }

    fn advance(&mut self) {
        let m = self.current.len();
        while self.current.len() < self.n {
            let letter = self.current[self.current.len() - m];
            self.current.push(letter);
        }
        while self.current.last() == Some(&self.max) {
            self.current.pop();
        }
        match self.current.last_mut() {
            Some(last) => *last += 1,
            None => self.done = true,
        }
    }
}

impl Iterator for LyndonWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while !self.done {
            let emit = (self.current.len() == self.n).then(|| Word::from(&self.current[..]));
            self.advance();
            if emit.is_some() {
                return emit;
            }
        }
        None
    }
}

pub fn enumerate_lyndon_words(alphabet: Alphabet, n: usize) -> Result<LyndonWords> {
    LyndonWords::new(alphabet, n)
}
