//! Standard sequences, Fibonacci words and iterated palindromic closure.

use lyndonlab::sturmian::{
    fibonacci_number, fibonacci_word, iterated_pal, lyndon_of_standard, palindromic_closure,
    standard_decomposition, standard_sequence, DirectiveSequence,
};
use lyndonlab::Word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let directive = DirectiveSequence::new(vec![1, 1, 1, 4])?;
    let seq = standard_sequence(&directive)?;
    println!("directive {directive}, slope {}", directive.slope()?);
    for i in -1..=seq.last_index() as i64 {
        let s = seq.word(i)?;
        print!("s_{i} = {s}");
        if let Ok((pal, tail)) = standard_decomposition(s) {
            let pal = if pal.is_empty() {
                "ε".to_string()
            } else {
                pal.to_string()
            };
            print!(
                "  = {pal}·{tail}, Lyndon conjugate {}",
                lyndon_of_standard(s)?
            );
        }
        println!();
    }

    for n in 0..=6 {
        println!(
            "f_{n} = {} (F_{n} = {})",
            fibonacci_word(n)?,
            fibonacci_number(n)?
        );
    }

    for v in ["ab", "aba", "abab", "aabbb"] {
        let v: Word = v.parse()?;
        println!(
            "{v}+ = {}, Pal({v}) = {}",
            palindromic_closure(&v),
            iterated_pal(&v)
        );
    }
    Ok(())
}
