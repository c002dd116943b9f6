//! Lyndon factors of a word: `cargo run --example lyndon_factors -- aabaabab`

use lyndonlab::lyndon::enumerate_lyndon_words;
use lyndonlab::{is_lyndon, lyndon_conjugate, lyndon_profile, Alphabet, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "aabaabab".into());
    let word: Word = text.parse()?;
    let profile = lyndon_profile(&word)?;
    println!("word            {word}");
    println!("is Lyndon       {}", is_lyndon(&word)?);
    match lyndon_conjugate(&word) {
        Ok(c) => println!("Lyndon conjugate {c}"),
        Err(e) => println!("Lyndon conjugate none ({e})"),
    }
    println!("distinct        {}", profile.distinct_count);
    println!("total           {}", profile.total_count);
    for f in &profile.distinct {
        println!("  {f}");
    }

    let binary: Vec<String> = enumerate_lyndon_words(Alphabet::binary(), 6)?
        .map(|w| w.to_string())
        .collect();
    println!("binary Lyndon words of length 6: {}", binary.join(" "));
    Ok(())
}
