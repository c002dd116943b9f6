//! Exact counting formulas for Lyndon factors.
//!
//! All quantities are computed with arbitrary-precision integers and
//! rationals; expectations are never approximated in floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lyndon::{is_lyndon, lyndon_counts_slice};
use crate::word::{Alphabet, Letter, Word};

/// The Möbius function, by trial division.
pub fn mobius(k: u64) -> Result<i8> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut k = k;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    Ok(sign)
}

fn divisors(m: u64) -> impl Iterator<Item = u64> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

fn big_pow(base: u64, exp: u64) -> BigInt {
    BigInt::from(base).pow(u32::try_from(exp).expect("exponent fits in u32"))
}

/// `C(a, b)` by the multiplicative formula; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_positive(sigma: u64, n: u64) -> Result<()> {
    if sigma == 0 || n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(())
}

/// Number of primitive words of length `m` over `sigma` letters:
/// `sum_{d | m} mu(m/d) sigma^d`.
pub fn primitive_count(sigma: u64, m: u64) -> Result<BigInt> {
    check_positive(sigma, m)?;
    let mut acc = BigInt::zero();
    for d in divisors(m) {
        match mobius(m / d)? {
            1 => acc += big_pow(sigma, d),
            -1 => acc -= big_pow(sigma, d),
            _ => {}
        }
    }
    Ok(acc)
}

/// Number of Lyndon words of length `m`: one per conjugacy class of primitive words.
pub fn lyndon_count(sigma: u64, m: u64) -> Result<BigInt> {
    let primitive = primitive_count(sigma, m)?;
    let (q, r) = primitive.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "{m} does not divide the primitive word count");
    Ok(q)
}

/// Exponents `k_1, ..., k_sigma` of a word `a_1^k_1 a_2^k_2 ... a_sigma^k_sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentComposition {
    k: Vec<u64>,
}

impl ExponentComposition {
    pub fn new(k: Vec<u64>) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::ZeroArgument);
        }
        Ok(ExponentComposition { k })
    }

    /// Exponents differing by at most one: `sigma - p` copies of `m` then `p`
    /// copies of `m + 1`, where `n = m sigma + p`.
    pub fn balanced(sigma: u64, n: u64) -> Result<Self> {
        check_positive(sigma, n)?;
        let (m, p) = (n / sigma, n % sigma);
        let k = (0..sigma)
            .map(|i| if i < sigma - p { m } else { m + 1 })
            .collect();
        Ok(ExponentComposition { k })
    }

    /// Every composition of `n` into `sigma` non-negative parts.
    pub fn all(sigma: u64, n: u64) -> Vec<Self> {
        fn go(rest: u64, parts: u64, prefix: &mut Vec<u64>, out: &mut Vec<ExponentComposition>) {
            if parts == 1 {
                prefix.push(rest);
                out.push(ExponentComposition { k: prefix.clone() });
                prefix.pop();
                return;
            }
            for first in 0..=rest {
                prefix.push(first);
                go(rest - first, parts - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if sigma > 0 {
            go(n, sigma, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn exponents(&self) -> &[u64] {
        &self.k
    }

    pub fn sigma(&self) -> u64 {
        self.k.len() as u64
    }

    pub fn n(&self) -> u64 {
        self.k.iter().sum()
    }

    /// The word `a_1^k_1 ... a_sigma^k_sigma`.
    pub fn word(&self) -> Result<Word> {
        if self.k.len() > Alphabet::MAX_SIGMA {
            return Err(Error::InvalidAlphabet {
                sigma: self.k.len(),
                max: Alphabet::MAX_SIGMA,
            });
        }
        let mut letters = Vec::with_capacity(self.n() as usize);
        for (i, &k) in self.k.iter().enumerate() {
            letters.extend(std::iter::repeat_n((i + 1) as Letter, k as usize));
        }
        Ok(Word::from_letters(letters))
    }
}

/// Lyndon factor count of `a_1^k_1 ... a_sigma^k_sigma`:
/// `C(n+1, 2) - sum_i C(k_i+1, 2) + sigma`.
///
/// Every factor except the powers `a_i^j, j > 1` is Lyndon; the trailing
/// `sigma` counts each single letter once, so the value is the distinct count
/// of the block word when every `k_i >= 1`.
pub fn block_word_lyndon_count(comp: &ExponentComposition) -> BigInt {
    let n = comp.n();
    let powers: BigInt = comp.k.iter().map(|&k| binomial(k + 1, 2)).sum();
    binomial(n + 1, 2) - powers + BigInt::from(comp.sigma())
}

/// Maximum number of distinct Lyndon factors in a word of length `n` over
/// `sigma` letters. With `n = m sigma + p`, `0 <= p < sigma`:
/// `C(n+1,2) - (sigma-p) C(m+1,2) - p C(m+2,2) + sigma`.
pub fn max_distinct(sigma: u64, n: u64) -> Result<BigInt> {
    check_positive(sigma, n)?;
    let (m, p) = (n / sigma, n % sigma);
    Ok(binomial(n + 1, 2)
        - BigInt::from(sigma - p) * binomial(m + 1, 2)
        - BigInt::from(p) * binomial(m + 2, 2)
        + BigInt::from(sigma))
}

/// The largest distinct Lyndon factor count actually attained by some word.
///
/// [`max_distinct`] credits all `sigma` single letters, which a word shorter
/// than the alphabet cannot contain; for `n < sigma` the maximum is instead
/// `C(n+1, 2)`, reached by any strictly increasing word. Both agree when `n >= sigma`.
pub fn max_distinct_attained(sigma: u64, n: u64) -> Result<BigInt> {
    check_positive(sigma, n)?;
    if n < sigma {
        Ok(binomial(n + 1, 2))
    } else {
        max_distinct(sigma, n)
    }
}

/// `C(sigma, 2) m^2 + sigma`: the maximum when `n = m sigma`.
pub fn max_distinct_multiple(sigma: u64, m: u64) -> BigInt {
    binomial(sigma, 2) * BigInt::from(m) * BigInt::from(m) + BigInt::from(sigma)
}

/// The block word of the balanced composition. It attains [`max_distinct`]
/// when `n >= sigma` and [`max_distinct_attained`] always.
pub fn extremal_word(sigma: u64, n: u64) -> Result<Word> {
    ExponentComposition::balanced(sigma, n)?.word()
}

/// Total number of Lyndon factor occurrences over all `sigma^n` words of length `n`:
/// `sum_{m=1}^{n} (n-m+1) sigma^(n-m) L(sigma, m)`, `L` the Lyndon word count.
pub fn total_appearances(sigma: u64, n: u64) -> Result<BigInt> {
    check_positive(sigma, n)?;
    let mut acc = BigInt::zero();
    for m in 1..=n {
        acc += BigInt::from(n - m + 1) * big_pow(sigma, n - m) * lyndon_count(sigma, m)?;
    }
    Ok(acc)
}

/// Expected total number of Lyndon factors in a uniform word of length `n`.
pub fn expected_total(sigma: u64, n: u64) -> Result<BigRational> {
    Ok(BigRational::new(
        total_appearances(sigma, n)?,
        big_pow(sigma, n),
    ))
}

/// Inclusion-exclusion count of length-`n` words containing a factor of length
/// `m` that cannot overlap itself:
/// `sum_{s=1}^{n/m} (-1)^(s+1) C(n - s m + s, s) sigma^(n - s m)`.
fn containing_count(m: u64, n: u64, sigma: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 1..=n / m {
        let term = binomial(n - s * m + s, s) * big_pow(sigma, n - s * m);
        if s % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Number of words in `Sigma^n` containing at least one occurrence of the
/// Lyndon word `lyndon`.
///
/// Requires a Lyndon word: the count relies on occurrences never overlapping,
/// which holds because Lyndon words are borderless.
pub fn words_containing(lyndon: &Word, n: u64, sigma: u64) -> Result<BigInt> {
    check_positive(sigma, n)?;
    if !is_lyndon(lyndon)? {
        return Err(Error::NotLyndon(lyndon.to_string()));
    }
    if lyndon.max_letter() as u64 > sigma {
        return Err(Error::LetterOutOfRange {
            letter: lyndon.max_letter(),
            sigma: sigma as usize,
        });
    }
    Ok(containing_count(lyndon.len() as u64, n, sigma))
}

/// Expected number of distinct Lyndon factors in a uniform word of length `n`.
///
/// Sums the containment count over every Lyndon word of each length `m <= n`
/// (all Lyndon words of one length share the same count) and divides by `sigma^n`.
pub fn expected_distinct(sigma: u64, n: u64) -> Result<BigRational> {
    check_positive(sigma, n)?;
    let mut acc = BigInt::zero();
    for m in 1..=n {
        acc += lyndon_count(sigma, m)? * containing_count(m, n, sigma);
    }
    Ok(BigRational::new(acc, big_pow(sigma, n)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceAggregates {
    /// Number of words enumerated, `sigma^n`.
    pub words: BigInt,
    /// Sum of total Lyndon factor counts.
    pub total: BigInt,
    /// Sum of distinct Lyndon factor counts.
    pub distinct_sum: BigInt,
}

impl BruteForceAggregates {
    pub fn expected_total(&self) -> BigRational {
        BigRational::new(self.total.clone(), self.words.clone())
    }

    pub fn expected_distinct(&self) -> BigRational {
        BigRational::new(self.distinct_sum.clone(), self.words.clone())
    }
}

/// Enumerates all `sigma^n` words and sums their Lyndon factor counts,
/// refusing when `sigma^n` exceeds [`crate::max_work`].
pub fn brute_force_aggregates(sigma: u64, n: u64) -> Result<BruteForceAggregates> {
    brute_force_aggregates_with_limit(sigma, n, crate::max_work())
}

pub fn brute_force_aggregates_with_limit(
    sigma: u64,
    n: u64,
    limit: u128,
) -> Result<BruteForceAggregates> {
    check_positive(sigma, n)?;
    let alphabet = Alphabet::new(sigma as usize)?;
    let words = (sigma as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if words > limit {
        return Err(Error::WorkLimit {
            requested: words,
            limit,
            hint: "use the closed-form formulas or raise LYNDONLAB_MAX_WORK",
        });
    }
    let n = n as usize;
    let sigma_l = alphabet.sigma() as u64;
    let (total, distinct_sum) = (0..words as u64)
        .into_par_iter()
        .map_init(
            || vec![0 as Letter; n],
            |buf, index| {
                let mut rest = index;
                for slot in buf.iter_mut().rev() {
                    *slot = (rest % sigma_l) as Letter + 1;
                    rest /= sigma_l;
                }
                let (distinct, total) = lyndon_counts_slice(buf);
                (total as u64, distinct as u64)
            },
        )
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(BruteForceAggregates {
        words: BigInt::from(words),
        total: BigInt::from(total),
        distinct_sum: BigInt::from(distinct_sum),
    })
}

/// Largest distinct Lyndon factor count over all `sigma^n` words, by enumeration.
pub fn brute_force_max_distinct(sigma: u64, n: u64, limit: u128) -> Result<usize> {
    check_positive(sigma, n)?;
    Alphabet::new(sigma as usize)?;
    let words = (sigma as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if words > limit {
        return Err(Error::WorkLimit {
            requested: words,
            limit,
            hint: "raise LYNDONLAB_MAX_WORK",
        });
    }
    let n = n as usize;
    Ok((0..words as u64)
        .into_par_iter()
        .map_init(
            || vec![0 as Letter; n],
            |buf, index| {
                let mut rest = index;
                for slot in buf.iter_mut().rev() {
                    *slot = (rest % sigma) as Letter + 1;
                    rest /= sigma;
                }
                lyndon_counts_slice(buf).0
            },
        )
        .max()
        .unwrap_or(0))
}

/// Renders a rational with `places` decimals, rounding half to even.
pub fn round_half_even(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * BigRational::from_integer(scale.clone());
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut units = floor.to_integer();
    if frac > half || (frac == half && units.is_odd()) {
        units += 1;
    }
    let negative = units.is_negative();
    let digits = units.abs().to_string();
    let places = places as usize;
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Renders an exact rational as `num/den`, or just `num` for integers.
pub fn render_exact(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
