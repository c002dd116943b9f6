//! Verification suites behind `lyndonlab verify`.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::counting::{
    brute_force_aggregates, brute_force_max_distinct, expected_distinct, expected_total,
    extremal_word, max_distinct, max_distinct_attained, total_appearances,
};
use crate::error::Result;
use crate::lyndon::{is_lyndon, lyndon_conjugate, lyndon_counts};
use crate::search::{
    christoffel_non_minimal_check, counterexample_check, join_words, min_distinct_search,
    saari_bound, SearchMode, Verdict,
};
use crate::sturmian::{
    christoffel_lyndon_count, christoffel_word, directive_of, fibonacci_number, fibonacci_word,
    lyndon_of_standard, standard_sequence, ChristoffelSlope,
};

/// Lengths of the rows of the maximum and expected-distinct tables.
pub const TABLE_NS: [u64; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15, 20, 25, 30];

/// Reference maxima `D(sigma, n)` for `sigma = 2, 5, 10`, one row per [`TABLE_NS`] entry.
pub const REFERENCE_MAX_DISTINCT: [[u64; 3]; 14] = [
    [2, 5, 10],
    [3, 6, 11],
    [4, 8, 13],
    [6, 11, 16],
    [8, 15, 20],
    [11, 19, 25],
    [14, 24, 31],
    [18, 30, 38],
    [22, 37, 46],
    [27, 45, 55],
    [58, 95, 110],
    [102, 165, 190],
    [158, 255, 290],
    [227, 365, 415],
];

/// Reference `(M(2,n), ET(2,n), M(5,n), ET(5,n))` for `n = 1..=10`.
pub const REFERENCE_TOTALS: [(u64, &str, u64, &str); 10] = [
    (2, "1.00", 5, "1.00"),
    (9, "2.25", 60, "2.40"),
    (30, "3.75", 515, "4.12"),
    (87, "5.43", 3800, "6.08"),
    (234, "7.31", 25749, "8.24"),
    (597, "9.32", 165070, "10.56"),
    (1470, "11.48", 1018135, "13.03"),
    (3522, "13.76", 6103350, "15.62"),
    (8264, "16.14", 35797125, "18.33"),
    (19067, "18.62", 206363748, "21.13"),
];

/// Reference `ED(sigma, n)` for `sigma = 2, 5, 10, 20`, one row per [`TABLE_NS`] entry.
pub const REFERENCE_EXPECTED_DISTINCT: [[&str; 4]; 14] = [
    ["1.00", "1.00", "1.00", "1.00"],
    ["1.75", "2.20", "2.35", "2.42"],
    ["2.50", "3.56", "3.94", "4.14"],
    ["3.25", "5.02", "5.69", "6.05"],
    ["4.06", "6.55", "7.57", "8.12"],
    ["4.91", "8.16", "9.54", "10.31"],
    ["5.81", "9.82", "11.59", "12.61"],
    ["6.77", "11.54", "13.70", "14.99"],
    ["7.77", "13.31", "15.88", "17.45"],
    ["8.83", "15.13", "18.11", "19.97"],
    ["14.77", "24.93", "29.90", "33.36"],
    ["21.67", "35.76", "42.58", "47.70"],
    ["29.35", "47.43", "56.02", "62.73"],
    ["37.70", "59.82", "70.11", "78.33"],
];

/// Parses a plain decimal such as `5.43` exactly.
pub fn parse_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

/// `|value - reference| <= 0.01`.
pub fn within_hundredth(value: &BigRational, reference: &str) -> bool {
    (value - parse_decimal(reference)).abs() <= BigRational::new(1.into(), 100.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Oracles,
    Christoffel,
    Saari,
    Counterexample,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Oracles => "oracles",
            Suite::Christoffel => "christoffel",
            Suite::Saari => "saari",
            Suite::Counterexample => "counterexample",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<(Suite, Verdict)>> {
    let single = |s: Suite| -> Result<(Suite, Verdict)> {
        let v = match s {
            Suite::Tables => tables()?,
            Suite::Oracles => oracles()?,
            Suite::Christoffel => christoffel()?,
            Suite::Saari => saari()?,
            Suite::Counterexample => counterexample_check()?,
            Suite::All => unreachable!(),
        };
        Ok((s, v))
    };
    match suite {
        Suite::All => [
            Suite::Tables,
            Suite::Oracles,
            Suite::Christoffel,
            Suite::Saari,
            Suite::Counterexample,
        ]
        .into_iter()
        .map(single)
        .collect(),
        s => Ok(vec![single(s)?]),
    }
}

pub fn tables() -> Result<Verdict> {
    let mut v = Verdict::default();
    let mut mismatches = Vec::new();
    for (row, &n) in REFERENCE_MAX_DISTINCT.iter().zip(&TABLE_NS) {
        for (&reference, sigma) in row.iter().zip([2, 5, 10]) {
            let got = max_distinct(sigma, n)?;
            if got != BigInt::from(reference) {
                mismatches.push(format!("D({sigma},{n}) = {got}, reference {reference}"));
            }
        }
    }
    v.push(
        "maximum table",
        mismatches.is_empty(),
        describe(&mismatches, 42, "cells"),
    );

    let mut mismatches = Vec::new();
    for (i, &(m2, et2, m5, et5)) in REFERENCE_TOTALS.iter().enumerate() {
        let n = i as u64 + 1;
        for (sigma, m, et) in [(2, m2, et2), (5, m5, et5)] {
            let total = total_appearances(sigma, n)?;
            if total != BigInt::from(m) {
                mismatches.push(format!("M({sigma},{n}) = {total}, reference {m}"));
            }
            let expected = expected_total(sigma, n)?;
            if !within_hundredth(&expected, et) {
                mismatches.push(format!("ET({sigma},{n}) = {expected}, reference {et}"));
            }
        }
    }
    v.push(
        "total table",
        mismatches.is_empty(),
        describe(&mismatches, 40, "cells"),
    );

    let mut mismatches = Vec::new();
    for (row, &n) in REFERENCE_EXPECTED_DISTINCT.iter().zip(&TABLE_NS) {
        for (&reference, sigma) in row.iter().zip([2, 5, 10, 20]) {
            let ed = expected_distinct(sigma, n)?;
            if !within_hundredth(&ed, reference) {
                mismatches.push(format!("ED({sigma},{n}) = {ed}, reference {reference}"));
            }
        }
    }
    v.push(
        "expected distinct table",
        mismatches.is_empty(),
        describe(&mismatches, 56, "cells"),
    );
    Ok(v)
}

fn describe(mismatches: &[String], count: usize, unit: &str) -> String {
    if mismatches.is_empty() {
        format!("{count} {unit} agree")
    } else {
        mismatches.join("; ")
    }
}

pub fn oracles() -> Result<Verdict> {
    let mut v = Verdict::default();
    let limit = crate::max_work();
    for (sigma, n_max) in [(2u64, 10u64), (3, 7)] {
        let mut mismatches = Vec::new();
        for n in 1..=n_max {
            let agg = brute_force_aggregates(sigma, n)?;
            if agg.total != total_appearances(sigma, n)? {
                mismatches.push(format!("M({sigma},{n})"));
            }
            if agg.expected_distinct() != expected_distinct(sigma, n)? {
                mismatches.push(format!("ED({sigma},{n})"));
            }
        }
        v.push(
            format!("enumeration matches M and ED for sigma={sigma}, n<={n_max}"),
            mismatches.is_empty(),
            describe(&mismatches, 2 * n_max as usize, "values"),
        );
    }
    for (sigma, n_max) in [(2u64, 14u64), (3, 9)] {
        let mut mismatches = Vec::new();
        let mut below_alphabet = Vec::new();
        for n in 1..=n_max {
            let brute = BigInt::from(brute_force_max_distinct(sigma, n, limit)?);
            if brute != max_distinct_attained(sigma, n)? {
                mismatches.push(format!("max({sigma},{n}) = {brute}"));
            }
            let formula = max_distinct(sigma, n)?;
            if n >= sigma && brute != formula {
                mismatches.push(format!("D({sigma},{n}) = {formula}, enumeration {brute}"));
            }
            if n < sigma && brute != formula {
                below_alphabet.push(format!("D({sigma},{n}) = {formula} vs {brute}"));
            }
            let (extremal, _) = lyndon_counts(&extremal_word(sigma, n)?)?;
            if BigInt::from(extremal) != brute {
                mismatches.push(format!("extremal word for ({sigma},{n}) has {extremal}"));
            }
        }
        let mut detail = describe(&mismatches, n_max as usize, "lengths");
        if !below_alphabet.is_empty() {
            detail += &format!(
                " (formula credits absent letters when n < sigma: {})",
                below_alphabet.join(", ")
            );
        }
        v.push(
            format!("enumeration maximum matches D for sigma={sigma}, n<={n_max}"),
            mismatches.is_empty(),
            detail,
        );
    }
    Ok(v)
}

pub fn christoffel() -> Result<Verdict> {
    let mut v = Verdict::default();
    let mut mismatches = Vec::new();
    let mut slopes = 0;
    for slope in ChristoffelSlope::all_up_to(60) {
        slopes += 1;
        let word = christoffel_word(slope)?;
        let (distinct, _) = lyndon_counts(&word)?;
        if distinct as u64 != christoffel_lyndon_count(slope) {
            mismatches.push(format!("{slope}: {distinct}"));
        }
        if !is_lyndon(&word)?
            || word.len() as u64 != slope.q()
            || word.count_letter(2) as u64 != slope.p()
        {
            mismatches.push(format!("{slope}: shape"));
        }
        let directive = directive_of(slope).extended(1)?;
        let standard = standard_sequence(&directive)?;
        if lyndon_of_standard(standard.last())? != word {
            mismatches.push(format!("{slope}: standard word conjugate"));
        }
    }
    v.push(
        "Christoffel count theorem, q <= 60",
        mismatches.is_empty(),
        describe(&mismatches, slopes, "slopes"),
    );
    for (p, q, word) in [
        (2, 5, "aabab"),
        (1, 6, "aaaaab"),
        (3, 8, "aabaabab"),
        (11, 28, "aabaababaababaababaababaabab"),
        (5, 11, "aababababab"),
        (3, 11, "aaabaaabaab"),
    ] {
        let got = christoffel_word(ChristoffelSlope::new(p, q)?)?;
        v.push(
            format!("Christoffel word of slope {p}/{q}"),
            got.to_string() == word,
            got.to_string(),
        );
    }
    for check in christoffel_non_minimal_check()?.checks {
        v.checks.push(check);
    }
    Ok(v)
}

/// Fibonacci Lyndon word of length `F_k`.
fn fibonacci_lyndon(k: i64) -> Result<crate::word::Word> {
    lyndon_conjugate(&fibonacci_word(k)?)
}

pub fn saari() -> Result<Verdict> {
    let mut v = Verdict::default();
    let mut violations = Vec::new();
    for n in 1..=20usize {
        let r = min_distinct_search(n, Some(2), SearchMode::Exhaustive)?;
        let bound = saari_bound(n as u64) as usize;
        if r.minimum < bound {
            violations.push(format!("n={n}: minimum {} < bound {bound}", r.minimum));
        }
    }
    v.push(
        "binary minimum is at least ceil(log_phi(n) + 1) for n <= 20",
        violations.is_empty(),
        describe(&violations, 20, "lengths"),
    );
    for (k, n) in [(3i64, 5usize), (4, 8), (5, 13)] {
        let r = min_distinct_search(n, Some(2), SearchMode::Exhaustive)?;
        let fib = fibonacci_lyndon(k)?;
        let ok = r.minimum as u64 == saari_bound(n as u64)
            && r.witnesses.contains(&fib)
            && BigInt::from(n) == fibonacci_number(k)?;
        v.push(
            format!("bound attained at n={n} by the Fibonacci Lyndon word"),
            ok,
            format!(
                "minimum {}, bound {}, witnesses {}",
                r.minimum,
                saari_bound(n as u64),
                join_words(&r.witnesses)
            ),
        );
    }
    Ok(v)
}
