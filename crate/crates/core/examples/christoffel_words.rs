//! Christoffel words, their continued fractions and directive sequences.

use lyndonlab::lyndon_counts;
use lyndonlab::sturmian::{
    cf_expansions, christoffel_lyndon_count, christoffel_word, directive_of, is_christoffel,
    ChristoffelSlope,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("slope\tlong cf\tshort cf\tdirective\tword\tL");
    for (p, q) in [(2, 5), (1, 6), (3, 8), (5, 11), (3, 11), (11, 28)] {
        let slope = ChristoffelSlope::new(p, q)?;
        let cf = cf_expansions(slope);
        let word = christoffel_word(slope)?;
        let (counted, _) = lyndon_counts(&word)?;
        assert_eq!(counted as u64, christoffel_lyndon_count(slope));
        println!(
            "{slope}\t{}\t{}\t{}\t{word}\t{counted}",
            cf.long,
            cf.short,
            directive_of(slope)
        );
    }

    for text in ["aabab", "aabb", "aabaababaabaabababaabaababab"] {
        let slope = is_christoffel(&text.parse()?)?;
        println!(
            "{text}: {}",
            slope.map_or("not Christoffel".into(), |s| s.to_string())
        );
    }

    if let Err(e) = ChristoffelSlope::new(4, 6) {
        println!("4/6: {e}");
    }
    Ok(())
}
