//! Continued fractions, standard sequences, palindromic closure and
//! Christoffel words over `{a, b}` with `a < b`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lyndon::lyndon_counts;
use crate::word::{is_palindrome, Letter, Word};

const A: Letter = 1;
const B: Letter = 2;

/// Upper bound on the length of any word built in this module.
pub const MAX_WORD_LEN: usize = 1_000_000;

fn check_len(len: u128) -> Result<()> {
    if len > MAX_WORD_LEN as u128 {
        return Err(Error::WordTooLong {
            len,
            limit: MAX_WORD_LEN,
        });
    }
    Ok(())
}

/// A rational slope `p/q` in lowest terms with `0 < p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChristoffelSlope {
    p: u64,
    q: u64,
}

impl ChristoffelSlope {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(Error::InvalidSlope { p, q });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NotCoprime { p, q, gcd });
        }
        Ok(ChristoffelSlope { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Every valid slope with denominator at most `max_q`.
    pub fn all_up_to(max_q: u64) -> impl Iterator<Item = ChristoffelSlope> {
        (2..=max_q).flat_map(|q| (1..q).filter_map(move |p| ChristoffelSlope::new(p, q).ok()))
    }
}

impl fmt::Display for ChristoffelSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for ChristoffelSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSlope { p: 0, q: 0 };
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        ChristoffelSlope::new(p, q)
    }
}

/// A finite simple continued fraction `[0; a_1, ..., a_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<u64>,
}

impl ContinuedFraction {
    /// `terms[0]` is the integer part and must be `0`; all later terms are positive.
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.len() < 2 {
            return Err(Error::InvalidContinuedFraction(
                "need at least one partial quotient".into(),
            ));
        }
        if terms[0] != 0 {
            return Err(Error::InvalidContinuedFraction(
                "integer part must be 0".into(),
            ));
        }
        if terms[1..].contains(&0) {
            return Err(Error::InvalidContinuedFraction(
                "partial quotients must be positive".into(),
            ));
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Partial quotients `a_1, ..., a_k`.
    pub fn quotients(&self) -> &[u64] {
        &self.terms[1..]
    }

    /// The value as a reduced fraction `(p, q)`.
    pub fn value(&self) -> Result<(u64, u64)> {
        Ok(*convergents(self)?.last().expect("at least one convergent"))
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.terms[0])?;
        for (i, t) in self.terms[1..].iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Convergents `p_i/q_i` for `i = 0..=k`, from `p_0 = 0, p_1 = 1, q_0 = 1,
/// q_1 = a_1` and `x_i = a_i x_(i-1) + x_(i-2)`.
pub fn convergents(cf: &ContinuedFraction) -> Result<Vec<(u64, u64)>> {
    let a = &cf.terms;
    let mut out = vec![(0u64, 1u64), (1, a[1])];
    for &ai in &a[2..] {
        let (p1, q1) = out[out.len() - 1];
        let (p0, q0) = out[out.len() - 2];
        let next = |x1: u64, x0: u64| {
            ai.checked_mul(x1)
                .and_then(|v| v.checked_add(x0))
                .ok_or(Error::Overflow("convergents"))
        };
        out.push((next(p1, p0)?, next(q1, q0)?));
    }
    Ok(out)
}

/// Both simple continued fraction expansions of a rational slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansions {
    /// The expansion ending in a partial quotient `1`.
    pub long: ContinuedFraction,
    /// The expansion whose last partial quotient is at least `2`.
    pub short: ContinuedFraction,
}

pub fn cf_expansions(slope: ChristoffelSlope) -> CfExpansions {
    let mut short = vec![0];
    let (mut num, mut den) = (slope.q, slope.p);
    while den != 0 {
        short.push(num / den);
        (num, den) = (den, num % den);
    }
    let mut long = short.clone();
    *long.last_mut().expect("non-empty") -= 1;
    long.push(1);
    CfExpansions {
        long: ContinuedFraction { terms: long },
        short: ContinuedFraction { terms: short },
    }
}

/// Block exponents `(d_1, ..., d_n)`, `d_1 >= 0`, `d_i >= 1` for `i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectiveSequence {
    d: Vec<u64>,
}

impl DirectiveSequence {
    pub fn new(d: Vec<u64>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidDirective("sequence is empty".into()));
        }
        if d[1..].contains(&0) {
            return Err(Error::InvalidDirective(
                "every term after the first must be positive".into(),
            ));
        }
        Ok(DirectiveSequence { d })
    }

    pub fn terms(&self) -> &[u64] {
        &self.d
    }

    pub fn sum(&self) -> u64 {
        self.d.iter().sum()
    }

    /// `[0; 1 + d_1, d_2, ..., d_n, 1]`.
    pub fn long_cf(&self) -> ContinuedFraction {
        let mut terms = Vec::with_capacity(self.d.len() + 2);
        terms.push(0);
        terms.push(self.d[0] + 1);
        terms.extend_from_slice(&self.d[1..]);
        terms.push(1);
        ContinuedFraction { terms }
    }

    /// The slope whose long expansion this directive is read from.
    pub fn slope(&self) -> Result<ChristoffelSlope> {
        let (p, q) = self.long_cf().value()?;
        ChristoffelSlope::new(p, q)
    }

    /// The directive with one more term appended.
    pub fn extended(&self, next: u64) -> Result<Self> {
        let mut d = self.d.clone();
        d.push(next);
        DirectiveSequence::new(d)
    }
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.d.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Reads `d_1 = a_1 - 1, d_i = a_i` off the long expansion of the slope.
pub fn directive_of(slope: ChristoffelSlope) -> DirectiveSequence {
    let long = cf_expansions(slope).long;
    let a = long.quotients();
    let mut d = Vec::with_capacity(a.len() - 1);
    d.push(a[0] - 1);
    d.extend_from_slice(&a[1..a.len() - 1]);
    DirectiveSequence { d }
}

/// Words `s_(-1) = b, s_0 = a, s_i = s_(i-1)^(d_i) s_(i-2)` for `i = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSequence {
    directive: DirectiveSequence,
    /// `words[i + 1]` holds `s_i`.
    words: Vec<Word>,
}

impl StandardSequence {
    pub fn directive(&self) -> &DirectiveSequence {
        &self.directive
    }

    /// Largest index `n`.
    pub fn last_index(&self) -> usize {
        self.directive.d.len()
    }

    /// `s_i` for `-1 <= i <= n`.
    pub fn word(&self, i: i64) -> Result<&Word> {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.words.get(k))
            .ok_or(Error::IndexOutOfRange(i))
    }

    pub fn last(&self) -> &Word {
        self.words.last().expect("s_(-1) and s_0 always present")
    }

    /// `|s_i|`, the convergent denominator `q_i` (with `|s_(-1)| = 1`).
    pub fn q(&self, i: i64) -> Result<usize> {
        Ok(self.word(i)?.len())
    }

    /// `(s_i)` from `i = -1` onwards.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The split `s_i = u v` into palindromes with `|u| = q_(i-1) - 2`.
    /// Defined only for `i >= 1` with `q_(i-1) >= 2`.
    pub fn palindrome_halves(&self, i: i64) -> Result<Option<(Word, Word)>> {
        if i < 1 {
            return Err(Error::IndexOutOfRange(i));
        }
        let s = self.word(i)?;
        let prev = self.q(i - 1)?;
        if prev < 2 {
            return Ok(None);
        }
        let cut = prev - 2;
        Ok(Some((s.slice(0, cut), s.slice(cut, s.len() - cut))))
    }
}

pub fn standard_sequence(directive: &DirectiveSequence) -> Result<StandardSequence> {
    let mut lens: Vec<u128> = vec![1, 1];
    for &d in &directive.d {
        let n = lens.len();
        let len = (d as u128)
            .checked_mul(lens[n - 1])
            .and_then(|v| v.checked_add(lens[n - 2]))
            .ok_or(Error::Overflow("standard word length"))?;
        check_len(len)?;
        lens.push(len);
    }
    let mut words = vec![Word::from_letters(vec![B]), Word::from_letters(vec![A])];
    for &d in &directive.d {
        let n = words.len();
        let next = words[n - 1].pow(d as usize).concat(&words[n - 2]);
        words.push(next);
    }
    Ok(StandardSequence {
        directive: directive.clone(),
        words,
    })
}

/// Finite Fibonacci word `f_n`: `f_(-1) = b`, `f_0 = a`, `f_n = f_(n-1) f_(n-2)`.
pub fn fibonacci_word(n: i64) -> Result<Word> {
    match n {
        _ if n < -1 => Err(Error::IndexOutOfRange(n)),
        -1 => Ok(Word::from_letters(vec![B])),
        0 => Ok(Word::from_letters(vec![A])),
        _ => {
            let directive = DirectiveSequence::new(vec![1; n as usize])?;
            Ok(standard_sequence(&directive)?.last().clone())
        }
    }
}

/// `F_(-1) = F_0 = 1`, `F_n = F_(n-1) + F_(n-2)`, so `|f_n| = F_n`.
pub fn fibonacci_number(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::IndexOutOfRange(n));
    }
    let (mut prev, mut cur) = (BigInt::from(1), BigInt::from(1));
    for _ in 0..n.max(0) {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// The shortest palindrome having `u` as a prefix.
pub fn palindromic_closure(u: &Word) -> Word {
    let start = (0..u.len())
        .find(|&i| is_palindrome(&u[i..]))
        .unwrap_or(u.len());
    let mut letters = u.letters().to_vec();
    letters.extend(u[..start].iter().rev());
    Word::from_letters(letters)
}

/// Iterated palindromic closure `Pal(v)`, applying `Pal(wx) = (Pal(w) x)^+`
/// letter by letter.
pub fn iterated_pal_by_closure(v: &Word) -> Word {
    let mut pal = Word::empty();
    for &x in v.iter() {
        pal.push(x);
        pal = palindromic_closure(&pal);
    }
    pal
}

/// Iterated palindromic closure `Pal(v)` in time linear in the output.
///
/// If `x` does not occur in `w`, `Pal(wx) = Pal(w) x Pal(w)`. Otherwise, with
/// `w = w1 x w2` and `x` absent from `w2`, `Pal(wx)` is `Pal(w)` followed by
/// `Pal(w)` stripped of its prefix `Pal(w1)`.
pub fn iterated_pal(v: &Word) -> Word {
    let mut pal: Vec<Letter> = Vec::new();
    // pal_len[k] = |Pal(v[..k])|
    let mut pal_len = vec![0usize];
    let mut last_seen: Vec<Option<usize>> = vec![None; v.max_letter() as usize + 1];
    for (k, &x) in v.iter().enumerate() {
        let old = pal.len();
        match last_seen[x as usize] {
            None => {
                pal.push(x);
                pal.extend_from_within(..old);
            }
            Some(j) => pal.extend_from_within(pal_len[j]..old),
        }
        last_seen[x as usize] = Some(k);
        pal_len.push(pal.len());
    }
    Word::from_letters(pal)
}

/// `a^(d_1) b^(d_2) a^(d_3) ...`: the word whose iterated palindromic closure
/// is the central part of the Christoffel word.
pub fn directive_word(directive: &DirectiveSequence) -> Result<Word> {
    let len: u128 = directive.d.iter().map(|&d| d as u128).sum();
    check_len(len)?;
    let mut letters = Vec::with_capacity(len as usize);
    for (i, &d) in directive.d.iter().enumerate() {
        let letter = if i % 2 == 0 { A } else { B };
        letters.extend(std::iter::repeat_n(letter, d as usize));
    }
    Ok(Word::from_letters(letters))
}

/// The lower Christoffel word of slope `p/q`: `a Pal(v) b` with `v` the
/// directive word. It has length `q`, `p` letters `b`, and is Lyndon.
pub fn christoffel_word(slope: ChristoffelSlope) -> Result<Word> {
    check_len(slope.q as u128)?;
    let v = directive_word(&directive_of(slope))?;
    let mut letters = Vec::with_capacity(slope.q as usize);
    letters.push(A);
    letters.extend_from_slice(&iterated_pal(&v));
    letters.push(B);
    Ok(Word::from_letters(letters))
}

/// Splits a standard word as `pal · tail` with `pal` a palindrome and
/// `tail` one of `ab`, `ba`.
pub fn standard_decomposition(s: &Word) -> Result<(Word, Word)> {
    let n = s.len();
    if n < 2 || s.max_letter() > B {
        return Err(Error::NotStandard(s.to_string()));
    }
    let tail = &s[n - 2..];
    if (tail != [A, B] && tail != [B, A]) || !is_palindrome(&s[..n - 2]) {
        return Err(Error::NotStandard(s.to_string()));
    }
    Ok((s.slice(0, n - 2), s.slice(n - 2, 2)))
}

/// The unique split `w = u v` into palindromes with `v` non-empty, if there
/// is exactly one.
pub fn palindrome_split(w: &Word) -> Option<(Word, Word)> {
    let mut splits = (0..w.len()).filter(|&k| is_palindrome(&w[..k]) && is_palindrome(&w[k..]));
    let k = splits.next()?;
    if splits.next().is_some() {
        return None;
    }
    Some((w.slice(0, k), w.slice(k, w.len() - k)))
}

/// The Lyndon conjugate of a standard word, `a · pal · b`.
pub fn lyndon_of_standard(s: &Word) -> Result<Word> {
    let (pal, _) = standard_decomposition(s)?;
    let mut letters = Vec::with_capacity(s.len());
    letters.push(A);
    letters.extend_from_slice(&pal);
    letters.push(B);
    Ok(Word::from_letters(letters))
}

/// Distinct Lyndon factors of the Christoffel word of the given slope,
/// `d_1 + ... + d_n + 3`.
pub fn christoffel_lyndon_count(slope: ChristoffelSlope) -> u64 {
    directive_of(slope).sum() + 3
}

/// The slope of `w` if it is a lower Christoffel word of length at least 2.
///
/// A Christoffel word is determined by its length and its number of `b`s, so
/// membership is decided by rebuilding the candidate and comparing.
pub fn is_christoffel(w: &Word) -> Result<Option<ChristoffelSlope>> {
    if w.max_letter() > B {
        return Err(Error::LetterOutOfRange {
            letter: w.max_letter(),
            sigma: 2,
        });
    }
    let (p, q) = (w.count_letter(B) as u64, w.len() as u64);
    let Ok(slope) = ChristoffelSlope::new(p, q) else {
        return Ok(None);
    };
    Ok((christoffel_word(slope)? == *w).then_some(slope))
}

/// Checks that `christoffel_lyndon_count` agrees with a direct count.
pub fn christoffel_count_matches(slope: ChristoffelSlope) -> Result<bool> {
    let (distinct, _) = lyndon_counts(&christoffel_word(slope)?)?;
    Ok(distinct as u64 == christoffel_lyndon_count(slope))
}
