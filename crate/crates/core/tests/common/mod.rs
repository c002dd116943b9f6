//! Randomised invariants shared by the `properties` and `acceptance` targets.
//!
//! Each property runs its own `TestRunner` so callers choose the case count.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lyndonlab::cli;
use lyndonlab::counting::{
    binomial, block_word_lyndon_count, expected_distinct, expected_total, lyndon_count,
    max_distinct, max_distinct_attained, max_distinct_multiple, primitive_count, words_containing,
    ExponentComposition,
};
use lyndonlab::lyndon::{
    enumerate_lyndon_words, is_lyndon, is_lyndon_by_conjugates, is_lyndon_by_suffixes,
    lyndon_conjugate, lyndon_counts, lyndon_profile,
};
use lyndonlab::search::{min_distinct_search, saari_bound, SearchMode};
use lyndonlab::sturmian::{
    cf_expansions, christoffel_lyndon_count, christoffel_word, convergents, directive_of,
    fibonacci_number, fibonacci_word, is_christoffel, iterated_pal, iterated_pal_by_closure,
    lyndon_of_standard, palindromic_closure, standard_sequence, ChristoffelSlope,
    DirectiveSequence,
};
use lyndonlab::table::{build_table, Format, JsonTable, OutputFormat, TableKind};
use lyndonlab::word::{
    borders, compare_lex, conjugates, factors, is_primitive, reverse, Alphabet, Letter, Word,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub type Outcome = Result<(), String>;

pub struct Property {
    pub module: &'static str,
    pub name: &'static str,
    pub run: fn(u32) -> Outcome,
}

pub const CASES: u32 = 1000;

fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

fn fail<E: std::fmt::Display>(e: E) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

fn words(sigma_max: Letter, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    (1..=sigma_max).prop_flat_map(move |s| vec(1..=s, len.clone()).prop_map(Word::from_letters))
}

/// Words biased towards repetition: a random root raised to a random power.
fn powers(sigma_max: Letter) -> impl Strategy<Value = Word> {
    prop_oneof![
        words(sigma_max, 1..=12),
        (words(sigma_max, 1..=4), 1..=4usize).prop_map(|(w, k)| w.pow(k)),
    ]
}

fn slopes(max_q: u64) -> impl Strategy<Value = ChristoffelSlope> {
    (2..=max_q)
        .prop_flat_map(|q| (1..q, Just(q)))
        .prop_filter_map("coprime", |(p, q)| ChristoffelSlope::new(p, q).ok())
}

/// Directives with term sum at most 12.
fn directives() -> impl Strategy<Value = DirectiveSequence> {
    (0..=4u64, vec(1..=4u64, 0..=5)).prop_filter_map("sum <= 12", |(d1, rest)| {
        let mut d = vec![d1];
        d.extend(rest);
        (d.iter().sum::<u64>() <= 12)
            .then(|| DirectiveSequence::new(d).ok())
            .flatten()
    })
}

fn is_sorted_subset(small: &[Word], large: &[Word]) -> bool {
    small.iter().all(|w| large.binary_search(w).is_ok())
}

// words

pub fn lex_order_is_total(cases: u32) -> Outcome {
    check(
        cases,
        (words(3, 0..=6), words(3, 0..=6), words(3, 0..=6)),
        |(u, v, w)| {
            prop_assert_eq!(compare_lex(&u, &v), compare_lex(&v, &u).reverse());
            if compare_lex(&u, &v).is_le() && compare_lex(&v, &w).is_le() {
                prop_assert!(compare_lex(&u, &w).is_le());
            }
            let uv = u.concat(&v);
            prop_assert!(compare_lex(&u, &uv).is_le());
            prop_assert_eq!(compare_lex(&u, &uv).is_eq(), v.is_empty());
            Ok(())
        },
    )
}

pub fn primitive_iff_distinct_conjugates(cases: u32) -> Outcome {
    check(cases, powers(3), |w| {
        let primitive = is_primitive(&w).map_err(fail)?;
        let distinct = conjugates(&w).map_err(fail)?.distinct_count;
        prop_assert_eq!(primitive, distinct == w.len());
        Ok(())
    })
}

pub fn reverse_is_involution(cases: u32) -> Outcome {
    check(cases, words(4, 0..=16), |w| {
        prop_assert_eq!(reverse(&reverse(&w)), w);
        Ok(())
    })
}

pub fn factor_occurrences_are_triangular(cases: u32) -> Outcome {
    check(cases, words(3, 0..=16), |w| {
        let n = w.len();
        let f = factors(&w);
        prop_assert_eq!(f.occurrences.len(), n * (n + 1) / 2);
        let listed: BTreeSet<Word> = f
            .occurrences
            .iter()
            .map(|&(start, len)| w.slice(start, len))
            .collect();
        prop_assert_eq!(listed.into_iter().collect::<Vec<_>>(), f.distinct);
        Ok(())
    })
}

pub fn borders_are_proper_prefix_suffixes(cases: u32) -> Outcome {
    check(cases, powers(2), |w| {
        let b = borders(&w).map_err(fail)?;
        let n = w.len();
        let expected = (1..n).filter(|&k| w[..k] == w[n - k..]).count();
        prop_assert_eq!(b.len(), expected);
        for x in &b {
            prop_assert!(x.len() < n);
            prop_assert!(x.is_prefix_of(&w) && x.is_suffix_of(&w));
        }
        Ok(())
    })
}

// lyndon

pub fn lyndon_iff_own_conjugate(cases: u32) -> Outcome {
    check(cases, powers(3), |w| {
        if !is_primitive(&w).map_err(fail)? {
            prop_assert!(lyndon_conjugate(&w).is_err());
            prop_assert!(!is_lyndon(&w).map_err(fail)?);
            return Ok(());
        }
        let conj = lyndon_conjugate(&w).map_err(fail)?;
        prop_assert_eq!(is_lyndon(&w).map_err(fail)?, conj == w);
        prop_assert!(is_lyndon(&conj).map_err(fail)?);
        Ok(())
    })
}

pub fn lyndon_characterisations_agree(cases: u32) -> Outcome {
    check(cases, powers(4), |w| {
        let scan = is_lyndon(&w).map_err(fail)?;
        prop_assert_eq!(scan, is_lyndon_by_suffixes(&w).map_err(fail)?);
        prop_assert_eq!(scan, is_lyndon_by_conjugates(&w).map_err(fail)?);
        Ok(())
    })
}

pub fn lyndon_words_are_borderless(cases: u32) -> Outcome {
    check(cases, words(3, 2..=16), |w| {
        if let Ok(l) = lyndon_conjugate(&w) {
            prop_assert!(borders(&l).map_err(fail)?.is_empty(), "{} has a border", l);
        }
        Ok(())
    })
}

pub fn profile_grows_with_prefix(cases: u32) -> Outcome {
    check(
        cases,
        words(4, 1..=18).prop_flat_map(|w| {
            let n = w.len();
            (Just(w), 1..=n)
        }),
        |(w, cut)| {
            let u = w.slice(0, cut);
            let small = lyndon_profile(&u).map_err(fail)?;
            let large = lyndon_profile(&w).map_err(fail)?;
            prop_assert!(is_sorted_subset(&small.distinct, &large.distinct));
            prop_assert!(small.total_count <= large.total_count);
            Ok(())
        },
    )
}

pub fn letter_powers_have_one_factor(cases: u32) -> Outcome {
    check(cases, (1..=26 as Letter, 1..=60usize), |(x, n)| {
        let p = lyndon_profile(&Word::power_of_letter(x, n)).map_err(fail)?;
        prop_assert_eq!(p.distinct_count, 1);
        prop_assert_eq!(p.total_count, n);
        Ok(())
    })
}

pub fn enumeration_matches_lyndon_count(cases: u32) -> Outcome {
    check(cases, (1..=4usize, 1..=10usize), |(sigma, n)| {
        let alphabet = Alphabet::new(sigma).map_err(fail)?;
        let listed: Vec<Word> = enumerate_lyndon_words(alphabet, n).map_err(fail)?.collect();
        let expected = lyndon_count(sigma as u64, n as u64).map_err(fail)?;
        prop_assert_eq!(BigInt::from(listed.len()), expected);
        prop_assert!(listed.windows(2).all(|p| p[0] < p[1]));
        for w in &listed {
            prop_assert!(w.len() == n && is_lyndon(w).map_err(fail)?);
        }
        Ok(())
    })
}

// counting

pub fn multiple_length_formula(cases: u32) -> Outcome {
    check(cases, (1..=10u64, 1..=30u64), |(sigma, m)| {
        let closed = binomial(sigma, 2) * m * m + sigma;
        prop_assert_eq!(
            max_distinct(sigma, m * sigma).map_err(fail)?,
            closed.clone()
        );
        prop_assert_eq!(max_distinct_multiple(sigma, m), closed);
        Ok(())
    })
}

pub fn balanced_composition_is_maximal(cases: u32) -> Outcome {
    check(cases, (1..=4u64, 1..=12u64), |(sigma, n)| {
        let balanced = ExponentComposition::balanced(sigma, n).map_err(fail)?;
        let best = block_word_lyndon_count(&balanced);
        for comp in ExponentComposition::all(sigma, n) {
            prop_assert!(block_word_lyndon_count(&comp) <= best, "{:?}", comp);
        }
        prop_assert_eq!(best, max_distinct(sigma, n).map_err(fail)?);
        Ok(())
    })
}

pub fn expected_distinct_is_bounded(cases: u32) -> Outcome {
    check(cases, (1..=20u64, 1..=30u64), |(sigma, n)| {
        let ed = expected_distinct(sigma, n).map_err(fail)?;
        prop_assert!(ed <= expected_total(sigma, n).map_err(fail)?);
        let d = max_distinct_attained(sigma, n).map_err(fail)?;
        prop_assert!(ed <= num_rational::BigRational::from_integer(d));
        Ok(())
    })
}

pub fn lyndon_count_divides_primitive_count(cases: u32) -> Outcome {
    check(cases, (1..=10u64, 1..=30u64), |(sigma, m)| {
        let primitive = primitive_count(sigma, m).map_err(fail)?;
        prop_assert_eq!(&primitive % m, BigInt::from(0));
        prop_assert_eq!(lyndon_count(sigma, m).map_err(fail)? * m, primitive);
        Ok(())
    })
}

pub fn containment_matches_enumeration(cases: u32) -> Outcome {
    let lyndon = words(2, 1..=4).prop_filter("Lyndon", |w| is_lyndon(w).unwrap_or(false));
    check(cases, (lyndon, 1..=8usize), |(l, n)| {
        let mut count = 0u64;
        for index in 0..1u64 << n {
            let w: Vec<Letter> = (0..n).map(|i| ((index >> i) & 1) as Letter + 1).collect();
            if w.windows(l.len()).any(|f| f == &l[..]) {
                count += 1;
            }
        }
        prop_assert_eq!(
            words_containing(&l, n as u64, 2).map_err(fail)?,
            BigInt::from(count)
        );
        Ok(())
    })
}

pub fn profile_within_maximum(cases: u32) -> Outcome {
    check(
        cases,
        (1..=4 as Letter).prop_flat_map(|s| (Just(s), words(s, 1..=16))),
        |(sigma, w)| {
            let (distinct, total) = lyndon_counts(&w).map_err(fail)?;
            let n = w.len() as u64;
            prop_assert!(
                BigInt::from(distinct) <= max_distinct_attained(sigma as u64, n).map_err(fail)?
            );
            prop_assert!(BigInt::from(total) <= binomial(n + 1, 2));
            Ok(())
        },
    )
}

// sturmian

pub fn christoffel_is_lyndon_conjugate_of_standard(cases: u32) -> Outcome {
    check(cases, directives(), |d| {
        let slope = d.slope().map_err(fail)?;
        let seq = standard_sequence(&d.extended(1).map_err(fail)?).map_err(fail)?;
        let w = christoffel_word(slope).map_err(fail)?;
        prop_assert_eq!(&lyndon_of_standard(seq.last()).map_err(fail)?, &w);
        prop_assert_eq!(&lyndon_conjugate(seq.last()).map_err(fail)?, &w);
        prop_assert_eq!(directive_of(slope), d);
        Ok(())
    })
}

pub fn christoffel_shape_and_count(cases: u32) -> Outcome {
    check(cases, slopes(60), |slope| {
        let w = christoffel_word(slope).map_err(fail)?;
        prop_assert!(is_lyndon(&w).map_err(fail)?);
        prop_assert_eq!(w.len() as u64, slope.q());
        prop_assert_eq!(w.count_letter(2) as u64, slope.p());
        let (distinct, _) = lyndon_counts(&w).map_err(fail)?;
        prop_assert_eq!(distinct as u64, christoffel_lyndon_count(slope));
        prop_assert_eq!(is_christoffel(&w).map_err(fail)?, Some(slope));
        let cf = cf_expansions(slope);
        prop_assert_eq!(cf.long.value().map_err(fail)?, (slope.p(), slope.q()));
        prop_assert_eq!(cf.short.value().map_err(fail)?, (slope.p(), slope.q()));
        Ok(())
    })
}

pub fn pal_is_palindrome(cases: u32) -> Outcome {
    check(cases, words(3, 0..=12), |v| {
        let pal = iterated_pal(&v);
        prop_assert!(pal.is_palindrome());
        prop_assert_eq!(pal, iterated_pal_by_closure(&v));
        Ok(())
    })
}

/// Whether some palindrome of length `len` starts with `u`.
fn palindrome_of_length_extends(u: &Word, len: usize) -> bool {
    (0..u.len()).all(|i| len - 1 - i >= u.len() || u[len - 1 - i] == u[i])
}

pub fn closure_is_shortest_palindrome(cases: u32) -> Outcome {
    check(cases, words(3, 0..=10), |u| {
        let c = palindromic_closure(&u);
        prop_assert!(c.is_palindrome() && u.is_prefix_of(&c));
        for len in u.len()..c.len() {
            prop_assert!(!palindrome_of_length_extends(&u, len), "length {}", len);
        }
        Ok(())
    })
}

pub fn standard_sequence_invariants(cases: u32) -> Outcome {
    check(cases, directives(), |d| {
        let seq = standard_sequence(&d).map_err(fail)?;
        let conv = convergents(&d.long_cf()).map_err(fail)?;
        for i in 0..=seq.last_index() as i64 {
            let s = seq.word(i).map_err(fail)?;
            prop_assert_eq!(s.len() as u64, conv[i as usize].1);
            prop_assert!(is_primitive(s).map_err(fail)?);
            let rotations = conjugates(s).map_err(fail)?.rotations;
            prop_assert!(rotations.contains(&reverse(s)));
            if i >= 1 && s.len() >= 2 {
                let tail: &[Letter] = if i % 2 == 1 { &[1, 2] } else { &[2, 1] };
                prop_assert!(s.ends_with(tail), "s_{} = {}", i, s);
            }
            if i < seq.last_index() as i64 && (i >= 1 || d.terms()[0] >= 1) {
                prop_assert!(s.is_prefix_of(seq.word(i + 1).map_err(fail)?));
            }
        }
        Ok(())
    })
}

pub fn christoffel_factors_are_christoffel(cases: u32) -> Outcome {
    check(cases, slopes(40), |slope| {
        let w = christoffel_word(slope).map_err(fail)?;
        for f in lyndon_profile(&w).map_err(fail)?.distinct {
            if f.len() >= 2 && f.len() < w.len() {
                prop_assert!(is_christoffel(&f).map_err(fail)?.is_some(), "{}", f);
                prop_assert!(f.is_prefix_of(&w) || f.is_suffix_of(&w), "{}", f);
            }
        }
        Ok(())
    })
}

pub fn fibonacci_lyndon_is_christoffel(cases: u32) -> Outcome {
    check(cases, 1..=10i64, |n| {
        let p = fibonacci_number(n - 2).map_err(fail)?.to_u64().unwrap();
        let q = fibonacci_number(n).map_err(fail)?.to_u64().unwrap();
        let slope = ChristoffelSlope::new(p, q).map_err(fail)?;
        let fib = fibonacci_word(n).map_err(fail)?;
        prop_assert_eq!(
            christoffel_word(slope).map_err(fail)?,
            lyndon_conjugate(&fib).map_err(fail)?
        );
        Ok(())
    })
}

// search

pub fn pruned_search_matches_exhaustive(cases: u32) -> Outcome {
    check(cases, (1..=11usize, 1..=3usize), |(n, sigma)| {
        let pruned = min_distinct_search(n, Some(sigma), SearchMode::Pruned);
        let exhaustive = min_distinct_search(n, Some(sigma), SearchMode::Exhaustive);
        match (pruned, exhaustive) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.minimum, b.minimum);
                prop_assert_eq!(a.witnesses, b.witnesses);
            }
            (a, b) => prop_assert_eq!(a.err(), b.err()),
        }
        Ok(())
    })
}

pub fn witnesses_are_minimal_lyndon(cases: u32) -> Outcome {
    check(
        cases,
        (1..=3 as Letter).prop_flat_map(|s| (Just(s), words(s, 2..=14))),
        |(sigma, w)| {
            let n = w.len();
            let report = match min_distinct_search(n, Some(sigma as usize), SearchMode::Pruned) {
                Ok(r) => r,
                Err(_) => {
                    prop_assert_eq!(sigma, 1);
                    return Ok(());
                }
            };
            for x in &report.witnesses {
                prop_assert!(is_lyndon(x).map_err(fail)?);
                prop_assert_eq!(
                    lyndon_profile(x).map_err(fail)?.distinct_count,
                    report.minimum
                );
            }
            if let Ok(l) = lyndon_conjugate(&w) {
                prop_assert!(lyndon_counts(&l).map_err(fail)?.0 >= report.minimum);
            }
            Ok(())
        },
    )
}

pub fn extension_keeps_factors(cases: u32) -> Outcome {
    check(cases, (words(4, 1..=20), 1..=4 as Letter), |(w, x)| {
        let mut longer = w.clone();
        longer.push(x);
        let before = lyndon_profile(&w).map_err(fail)?.distinct;
        let after = lyndon_profile(&longer).map_err(fail)?.distinct;
        prop_assert!(is_sorted_subset(&before, &after));
        Ok(())
    })
}

pub fn saari_bound_is_log_phi(cases: u32) -> Outcome {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    check(cases, 1..=1_000_000u64, move |n| {
        let m = saari_bound(n);
        let exact = (n as f64).ln() / phi.ln() + 1.0;
        if (exact - exact.round()).abs() > 1e-9 {
            prop_assert_eq!(m, exact.ceil() as u64);
        }
        Ok(())
    })
}

// cli

fn table_kinds() -> impl Strategy<Value = TableKind> {
    prop_oneof![
        Just(TableKind::MaxDistinct),
        Just(TableKind::TotalAppearances),
        Just(TableKind::ExpectedTotal),
        Just(TableKind::ExpectedDistinct),
    ]
}

pub fn json_tables_round_trip(cases: u32) -> Outcome {
    check(
        cases,
        (
            table_kinds(),
            vec(1..=8u64, 1..=3),
            vec(1..=14u64, 1..=4),
            0..=6u32,
        ),
        |(kind, sigmas, ns, places)| {
            let table = build_table(kind, &sigmas, &ns).map_err(fail)?;
            let text = table.render(OutputFormat {
                format: Format::Json,
                decimal_places: places,
            });
            let parsed: JsonTable = serde_json::from_str(&text).map_err(fail)?;
            prop_assert_eq!(&parsed, &table.to_json(places));
            let again = serde_json::to_string_pretty(&parsed).map_err(fail)? + "\n";
            prop_assert_eq!(again, text);
            Ok(())
        },
    )
}

pub fn table_output_is_deterministic(cases: u32) -> Outcome {
    check(
        cases,
        (table_kinds(), vec(1..=8u64, 1..=3), vec(1..=14u64, 1..=4)),
        |(kind, sigmas, ns)| {
            let render = |format| {
                build_table(kind, &sigmas, &ns).map(|t| {
                    t.render(OutputFormat {
                        format,
                        decimal_places: 2,
                    })
                })
            };
            let tsv = render(Format::Tsv).map_err(fail)?;
            prop_assert_eq!(&tsv, &render(Format::Tsv).map_err(fail)?);
            prop_assert_eq!(tsv.replace('\t', ","), render(Format::Csv).map_err(fail)?);
            Ok(())
        },
    )
}

fn run_cli(args: &[String]) -> i32 {
    let argv = std::iter::once("lyndonlab".to_string()).chain(args.iter().cloned());
    cli::run(argv, &mut std::io::sink(), &mut std::io::sink())
}

pub fn exit_codes_are_stable(cases: u32) -> Outcome {
    check(
        cases,
        ("[a-dA-D0-9]{1,8}", 0..=30u64, 0..=30u64),
        |(word, p, q)| {
            let valid = word.chars().all(|c| c.is_ascii_lowercase());
            let code = run_cli(&["count".into(), word.clone(), "--total".into()]);
            prop_assert_eq!(code, if valid { 0 } else { 2 });
            let coprime = ChristoffelSlope::new(p, q).is_ok();
            let code = run_cli(&["christoffel".into(), p.to_string(), q.to_string()]);
            prop_assert_eq!(code, if coprime { 0 } else { 2 });
            Ok(())
        },
    )
}

pub const PROPERTIES: &[Property] = &[
    Property {
        module: "words",
        name: "lex order is total",
        run: lex_order_is_total,
    },
    Property {
        module: "words",
        name: "primitive iff distinct conjugates",
        run: primitive_iff_distinct_conjugates,
    },
    Property {
        module: "words",
        name: "reverse is an involution",
        run: reverse_is_involution,
    },
    Property {
        module: "words",
        name: "factor occurrences are triangular",
        run: factor_occurrences_are_triangular,
    },
    Property {
        module: "words",
        name: "borders are proper prefix suffixes",
        run: borders_are_proper_prefix_suffixes,
    },
    Property {
        module: "lyndon",
        name: "Lyndon iff own conjugate",
        run: lyndon_iff_own_conjugate,
    },
    Property {
        module: "lyndon",
        name: "characterisations agree",
        run: lyndon_characterisations_agree,
    },
    Property {
        module: "lyndon",
        name: "Lyndon words are borderless",
        run: lyndon_words_are_borderless,
    },
    Property {
        module: "lyndon",
        name: "profile grows with prefix",
        run: profile_grows_with_prefix,
    },
    Property {
        module: "lyndon",
        name: "letter powers have one factor",
        run: letter_powers_have_one_factor,
    },
    Property {
        module: "lyndon",
        name: "enumeration matches Lyndon count",
        run: enumeration_matches_lyndon_count,
    },
    Property {
        module: "counting",
        name: "multiple-length formula",
        run: multiple_length_formula,
    },
    Property {
        module: "counting",
        name: "balanced composition is maximal",
        run: balanced_composition_is_maximal,
    },
    Property {
        module: "counting",
        name: "ED bounded by ET and maximum",
        run: expected_distinct_is_bounded,
    },
    Property {
        module: "counting",
        name: "m divides primitive count",
        run: lyndon_count_divides_primitive_count,
    },
    Property {
        module: "counting",
        name: "containment matches enumeration",
        run: containment_matches_enumeration,
    },
    Property {
        module: "counting",
        name: "profile within maximum",
        run: profile_within_maximum,
    },
    Property {
        module: "sturmian",
        name: "Christoffel word is Lyndon conjugate of standard word",
        run: christoffel_is_lyndon_conjugate_of_standard,
    },
    Property {
        module: "sturmian",
        name: "Christoffel shape and count",
        run: christoffel_shape_and_count,
    },
    Property {
        module: "sturmian",
        name: "Pal is a palindrome",
        run: pal_is_palindrome,
    },
    Property {
        module: "sturmian",
        name: "closure is shortest palindrome",
        run: closure_is_shortest_palindrome,
    },
    Property {
        module: "sturmian",
        name: "standard sequence invariants",
        run: standard_sequence_invariants,
    },
    Property {
        module: "sturmian",
        name: "Christoffel factors are Christoffel",
        run: christoffel_factors_are_christoffel,
    },
    Property {
        module: "sturmian",
        name: "Fibonacci Lyndon word is Christoffel",
        run: fibonacci_lyndon_is_christoffel,
    },
    Property {
        module: "search",
        name: "pruned matches exhaustive",
        run: pruned_search_matches_exhaustive,
    },
    Property {
        module: "search",
        name: "witnesses are minimal Lyndon words",
        run: witnesses_are_minimal_lyndon,
    },
    Property {
        module: "search",
        name: "extension keeps factors",
        run: extension_keeps_factors,
    },
    Property {
        module: "search",
        name: "Saari bound is ceil(log_phi n + 1)",
        run: saari_bound_is_log_phi,
    },
    Property {
        module: "cli",
        name: "json tables round-trip",
        run: json_tables_round_trip,
    },
    Property {
        module: "cli",
        name: "table output is deterministic",
        run: table_output_is_deterministic,
    },
    Property {
        module: "cli",
        name: "exit codes are stable",
        run: exit_codes_are_stable,
    },
];
