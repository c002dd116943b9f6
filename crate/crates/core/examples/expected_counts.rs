//! Exact expected total and distinct Lyndon factor counts, checked by enumeration.

use lyndonlab::counting::{
    brute_force_aggregates, expected_distinct, expected_total, render_exact, round_half_even,
    total_appearances,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("sigma\tn\tM\tET\tED");
    for sigma in [2, 3] {
        for n in 1..=8 {
            let et = expected_total(sigma, n)?;
            let ed = expected_distinct(sigma, n)?;
            let brute = brute_force_aggregates(sigma, n)?;
            assert_eq!(brute.expected_total(), et);
            assert_eq!(brute.expected_distinct(), ed);
            println!(
                "{sigma}\t{n}\t{}\t{} ({})\t{} ({})",
                total_appearances(sigma, n)?,
                render_exact(&et),
                round_half_even(&et, 2),
                render_exact(&ed),
                round_half_even(&ed, 2),
            );
        }
    }
    let big = expected_distinct(20, 30)?;
    println!("ED(20,30) = {}", round_half_even(&big, 4));
    Ok(())
}
