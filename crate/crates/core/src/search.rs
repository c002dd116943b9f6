//! Lyndon words with the fewest distinct Lyndon factors.
//!
//! The pruned search walks the tree of Lyndon-word prefixes in lexicographic
//! order, carrying the set of distinct Lyndon factors of the current prefix.
//! Extending a word never removes a factor, so a prefix whose count already
//! exceeds the best complete word found so far is cut.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::counting::lyndon_count;
use crate::error::{Error, Result};
use crate::lyndon::{is_lyndon, lyndon_counts, LyndonWords};
use crate::sturmian::{christoffel_word, is_christoffel, ChristoffelSlope};
use crate::word::{Alphabet, Letter, Word};

/// `ceil(log_phi(n) + 1)`: the least `m` with `phi^(m-1) >= n`.
///
/// Uses `phi^j = (L_j + F_j sqrt 5) / 2` with Lucas numbers `L` and Fibonacci
/// numbers `F` (`F_0 = 0, F_1 = 1`), so `phi^j >= n` reduces to the integer
/// test `2n - L_j <= 0` or `(2n - L_j)^2 <= 5 F_j^2`.
pub fn saari_bound(n: u64) -> u64 {
    assert!(n >= 1, "saari_bound needs n >= 1");
    let target = BigInt::from(n) * 2;
    let (mut fib, mut fib_next) = (BigInt::from(0), BigInt::from(1));
    let (mut lucas, mut lucas_next) = (BigInt::from(2), BigInt::from(1));
    let mut j = 0u64;
    loop {
        let gap = &target - &lucas;
        if gap <= BigInt::from(0) || &gap * &gap <= &fib * &fib * 5 {
            return j + 1;
        }
        let f = &fib + &fib_next;
        fib = std::mem::replace(&mut fib_next, f);
        let l = &lucas + &lucas_next;
        lucas = std::mem::replace(&mut lucas_next, l);
        j += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Generate every Lyndon word and count its factors.
    Exhaustive,
    /// Depth-first over Lyndon prefixes with count-based pruning.
    Pruned,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub sigma_max: usize,
    pub minimum: usize,
    /// Minimisers using exactly the letters `a_1..a_k` for some `k`, sorted.
    pub witnesses: Vec<Word>,
    pub nodes_explored: u64,
    pub pruned: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest alphabet considered; `None` means `min(n, initial bound)`.
    pub sigma_max: Option<usize>,
    pub mode: SearchMode,
    /// Cap on Lyndon words generated by the exhaustive mode.
    pub max_work: u128,
}

impl SearchConfig {
    pub fn new(mode: SearchMode) -> Self {
        SearchConfig {
            sigma_max: None,
            mode,
            max_work: crate::max_work(),
        }
    }

    pub fn sigma_max(mut self, sigma_max: usize) -> Self {
        self.sigma_max = Some(sigma_max);
        self
    }
}

/// Uses exactly the letters `1..=k` for some `k`.
fn is_canonical(w: &[Letter]) -> bool {
    let mut seen = [false; 256];
    for &l in w {
        seen[l as usize] = true;
    }
    let k = w.iter().copied().max().unwrap_or(0) as usize;
    seen[1..=k].iter().all(|&s| s)
}

/// Smallest distinct Lyndon factor count among Christoffel words of length `n`,
/// a count attained by a real binary Lyndon word.
fn christoffel_upper_bound(n: usize) -> Result<Option<usize>> {
    let mut best: Option<usize> = None;
    for p in 1..n as u64 {
        if let Ok(slope) = ChristoffelSlope::new(p, n as u64) {
            let (distinct, _) = lyndon_counts(&christoffel_word(slope)?)?;
            best = Some(best.map_or(distinct, |b| b.min(distinct)));
        }
    }
    Ok(best)
}

pub fn min_distinct_search(
    n: usize,
    sigma_max: Option<usize>,
    mode: SearchMode,
) -> Result<SearchReport> {
    let config = SearchConfig {
        sigma_max,
        ..SearchConfig::new(mode)
    };
    search(n, &config)
}

pub fn search(n: usize, config: &SearchConfig) -> Result<SearchReport> {
    let started = Instant::now();
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if config.sigma_max == Some(0) {
        return Err(Error::ZeroArgument);
    }
    let requested = config.sigma_max.map(|s| s.min(Alphabet::MAX_SIGMA));
    let upper = if n == 1 {
        1
    } else {
        if requested == Some(1) {
            return Err(Error::NoLyndonWords { n, sigma: 1 });
        }
        christoffel_upper_bound(n)?.expect("n >= 2 has the Christoffel word of slope 1/n")
    };
    let sigma_max = requested.unwrap_or(n.min(upper));
    // a word with k letters has at least k distinct Lyndon factors
    let sigma = sigma_max.min(upper).max(1);

    let mut report = match config.mode {
        SearchMode::Exhaustive => exhaustive(n, sigma, config.max_work)?,
        SearchMode::Pruned => Dfs::new(n, sigma, upper)?.run(),
    };
    report.sigma_max = sigma_max;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn exhaustive(n: usize, sigma: usize, max_work: u128) -> Result<SearchReport> {
    let words = lyndon_count(sigma as u64, n as u64)?
        .to_u128()
        .unwrap_or(u128::MAX);
    if words > max_work {
        return Err(Error::WorkLimit {
            requested: words,
            limit: max_work,
            hint: "use the pruned mode or raise LYNDONLAB_MAX_WORK",
        });
    }
    let mut minimum = usize::MAX;
    let mut witnesses = Vec::new();
    let mut nodes = 0u64;
    for w in LyndonWords::new(Alphabet::new(sigma)?, n)? {
        nodes += 1;
        if !is_canonical(&w) {
            continue;
        }
        let (distinct, _) = lyndon_counts(&w)?;
        if distinct < minimum {
            minimum = distinct;
            witnesses.clear();
        }
        if distinct == minimum {
            witnesses.push(w);
        }
    }
    Ok(SearchReport {
        n,
        sigma_max: sigma,
        minimum,
        witnesses,
        nodes_explored: nodes,
        pruned: 0,
        elapsed_ms: 0,
    })
}

/// Per-start scan state for the factor `w[start..t]` of the current prefix.
#[derive(Debug, Clone, Copy, Default)]
struct Scan {
    /// Period of the longest Lyndon prefix; `0` once the factor can no longer
    /// be extended to a Lyndon word.
    period: usize,
    /// Letters packed behind a leading marker bit, so length is part of the key.
    key: u128,
}

struct Dfs {
    n: usize,
    sigma: Letter,
    bits: u32,
    letters: Vec<Letter>,
    /// `scans[t][i]` describes `w[i..t]`.
    scans: Vec<Vec<Scan>>,
    /// Distinct Lyndon factors of the current prefix.
    seen: HashSet<u128>,
    undo: Vec<u128>,
    best: usize,
    witnesses: Vec<Word>,
    nodes: u64,
    pruned: u64,
}

impl Dfs {
    fn new(n: usize, sigma: usize, upper: usize) -> Result<Self> {
        let bits = usize::BITS - sigma.leading_zeros();
        let needed = 1 + n as u128 * bits as u128;
        if needed > 128 || sigma > 64 {
            return Err(Error::WorkLimit {
                requested: needed,
                limit: 128,
                hint: "packed factor keys need 1 + n * bits(sigma) <= 128; lower --sigma-max or n",
            });
        }
        Ok(Dfs {
            n,
            sigma: sigma as Letter,
            bits,
            letters: vec![0; n],
            scans: vec![vec![Scan::default(); n]; n + 1],
            seen: HashSet::new(),
            undo: Vec::new(),
            best: upper,
            witnesses: Vec::new(),
            nodes: 0,
            pruned: 0,
        })
    }

    fn run(mut self) -> SearchReport {
        // a Lyndon word starts with its least letter, and canonical words use `a`
        self.extend(0, 1);
        SearchReport {
            n: self.n,
            sigma_max: self.sigma as usize,
            minimum: self.best,
            witnesses: self.witnesses,
            nodes_explored: self.nodes,
            pruned: self.pruned,
            elapsed_ms: 0,
        }
    }

    /// Appends `x` at position `t`, recurses, and restores the state.
    fn extend(&mut self, t: usize, x: Letter) {
        self.nodes += 1;
        self.letters[t] = x;
        let mark = self.undo.len();
        let (before, after) = self.scans.split_at_mut(t + 1);
        let (old, new) = (&before[t], &mut after[0]);
        for start in 0..=t {
            let len = t - start + 1;
            let scan = if start == t {
                Scan {
                    period: 1,
                    key: (1u128 << self.bits) | x as u128,
                }
            } else {
                let prev = old[start];
                let period = if prev.period == 0 {
                    0
                } else {
                    match x.cmp(&self.letters[t - prev.period]) {
                        std::cmp::Ordering::Less => 0,
                        std::cmp::Ordering::Greater => len,
                        std::cmp::Ordering::Equal => prev.period,
                    }
                };
                Scan {
                    period,
                    key: (prev.key << self.bits) | x as u128,
                }
            };
            new[start] = scan;
            if scan.period == len && self.seen.insert(scan.key) {
                self.undo.push(scan.key);
            }
        }
        let count = self.seen.len();
        if count > self.best {
            self.pruned += 1;
        } else if t + 1 == self.n {
            let whole = self.scans[t + 1][0].period;
            if whole == self.n && is_canonical(&self.letters) {
                if count < self.best {
                    self.best = count;
                    self.witnesses.clear();
                }
                self.witnesses.push(Word::from(&self.letters[..]));
            }
        } else {
            // the whole prefix must stay a prefix of some Lyndon word
            let period = self.scans[t + 1][0].period;
            let lo = self.letters[t + 1 - period];
            for y in lo..=self.sigma {
                self.extend(t + 1, y);
            }
        }

        for key in self.undo.drain(mark..) {
            self.seen.remove(&key);
        }
    }
}

/// One named check inside a [`Verdict`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

/// The length-28 Lyndon word with 10 distinct Lyndon factors that is not Christoffel.
pub const COUNTEREXAMPLE: &str = "aabaababaabaabababaabaababab";
/// The Christoffel word of slope 11/28, which also has 10 distinct Lyndon factors.
pub const CHRISTOFFEL_11_28: &str = "aabaababaababaababaababaabab";

fn distinct_of(s: &str) -> Result<usize> {
    Ok(lyndon_counts(&s.parse()?)?.0)
}

/// Verifies the facts around the length-28 counterexample to the conjecture
/// that minimisers are Christoffel words.
pub fn counterexample_check() -> Result<Verdict> {
    let mut v = Verdict::default();
    let word: Word = COUNTEREXAMPLE.parse()?;
    let distinct = distinct_of(COUNTEREXAMPLE)?;
    v.push(
        "counterexample has 10 distinct Lyndon factors",
        distinct == 10,
        format!("L({COUNTEREXAMPLE}) = {distinct}"),
    );
    let lyndon = is_lyndon(&word)?;
    v.push(
        "counterexample is Lyndon",
        lyndon,
        format!("is_lyndon = {lyndon}"),
    );
    let slope = is_christoffel(&word)?;
    v.push(
        "counterexample is not Christoffel",
        slope.is_none(),
        format!("is_christoffel = {slope:?}"),
    );
    let distinct = distinct_of(CHRISTOFFEL_11_28)?;
    let slope = is_christoffel(&CHRISTOFFEL_11_28.parse()?)?;
    v.push(
        "Christoffel word of slope 11/28 has 10 distinct Lyndon factors",
        distinct == 10 && slope == Some(ChristoffelSlope::new(11, 28)?),
        format!(
            "L({CHRISTOFFEL_11_28}) = {distinct}, slope = {}",
            slope.map_or("none".to_string(), |s| s.to_string())
        ),
    );
    let (prefix, suffix) = (word.slice(0, 5), word.slice(word.len() - 5, 5));
    v.push(
        "prefix and suffix of length 5 differ",
        prefix != suffix,
        format!("prefix {prefix}, suffix {suffix}"),
    );
    Ok(v)
}

/// Evidence that a Christoffel word need not minimise the distinct Lyndon
/// factor count at its length (slopes 5/11 and 3/11).
pub fn christoffel_non_minimal_check() -> Result<Verdict> {
    let mut v = Verdict::default();
    for (word, expected, p, q) in [("aababababab", 8, 5, 11), ("aaabaaabaab", 7, 3, 11)] {
        let distinct = distinct_of(word)?;
        let slope = is_christoffel(&word.parse()?)?;
        v.push(
            format!("L({word}) = {expected} with slope {p}/{q}"),
            distinct == expected && slope == Some(ChristoffelSlope::new(p, q)?),
            format!(
                "L = {distinct}, slope = {}",
                slope.map_or("none".to_string(), |s| s.to_string())
            ),
        );
    }
    let report = min_distinct_search(11, Some(2), SearchMode::Pruned)?;
    let has_witness = report.witnesses.contains(&"aaabaaabaab".parse()?);
    v.push(
        "minimum over binary Lyndon words of length 11 is 7",
        report.minimum == 7 && has_witness,
        format!(
            "minimum = {}, witnesses = {}",
            report.minimum,
            join_words(&report.witnesses)
        ),
    );
    Ok(v)
}

/// Comma-separated rendering of a word list.
pub fn join_words(words: &[Word]) -> String {
    words
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Whether some Christoffel word of length `n` attains the search minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChristoffelFinding {
    pub n: usize,
    pub minimum: usize,
    /// Christoffel slopes of length `n` whose word attains the minimum.
    pub attaining: Vec<String>,
    /// Smallest count over Christoffel words of length `n`.
    pub christoffel_minimum: usize,
}

impl ChristoffelFinding {
    pub fn attained(&self) -> bool {
        !self.attaining.is_empty()
    }
}

/// Compares binary search minima with Christoffel words for lengths `2..=n_max`.
pub fn christoffel_findings(n_max: usize) -> Result<Vec<ChristoffelFinding>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let report = min_distinct_search(n, Some(2), SearchMode::Pruned)?;
        let mut attaining = Vec::new();
        let mut christoffel_minimum = usize::MAX;
        for p in 1..n as u64 {
            if let Ok(slope) = ChristoffelSlope::new(p, n as u64) {
                let (distinct, _) = lyndon_counts(&christoffel_word(slope)?)?;
                christoffel_minimum = christoffel_minimum.min(distinct);
                if distinct == report.minimum {
                    attaining.push(slope.to_string());
                }
            }
        }
        out.push(ChristoffelFinding {
            n,
            minimum: report.minimum,
            attaining,
            christoffel_minimum,
        });
    }
    Ok(out)
}
