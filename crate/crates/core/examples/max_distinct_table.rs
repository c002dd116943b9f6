//! Maximum number of distinct Lyndon factors, and words attaining it.

use lyndonlab::counting::{extremal_word, max_distinct, max_distinct_attained};
use lyndonlab::lyndon_counts;
use lyndonlab::table::{build_table, OutputFormat, TableKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kind = TableKind::MaxDistinct;
    let table = build_table(kind, &kind.default_sigmas(), &kind.default_ns())?;
    print!("{}", table.render(OutputFormat::default()));

    println!();
    for (sigma, n) in [(2, 7), (3, 10), (5, 12)] {
        let w = extremal_word(sigma, n)?;
        let (distinct, _) = lyndon_counts(&w)?;
        println!(
            "D({sigma},{n}) = {} attained by {w} ({distinct})",
            max_distinct(sigma, n)?
        );
    }

    // Shorter than the alphabet, a word cannot use every letter.
    for (sigma, n) in [(2, 1), (3, 2), (10, 4)] {
        println!(
            "sigma={sigma}, n={n}: formula {}, attainable {}",
            max_distinct(sigma, n)?,
            max_distinct_attained(sigma, n)?
        );
    }
    Ok(())
}
