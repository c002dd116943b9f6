//! Lyndon words with the fewest distinct Lyndon factors:
//! `cargo run --release --example min_search -- 12 2`

use lyndonlab::search::{min_distinct_search, saari_bound, SearchMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(6), |a| a.parse())?;
    let sigma_max: Option<usize> = args.next().map(|a| a.parse()).transpose()?;

    let report = min_distinct_search(n, sigma_max, SearchMode::Pruned)?;
    println!(
        "n = {n}, sigma_max = {}: minimum {} ({} nodes, {} pruned, {} ms)",
        report.sigma_max, report.minimum, report.nodes_explored, report.pruned, report.elapsed_ms
    );
    if report.sigma_max == 2 {
        println!(
            "lower bound ceil(log_phi(n) + 1) = {}",
            saari_bound(n as u64)
        );
    }
    for w in &report.witnesses {
        println!("  {w}");
    }
    Ok(())
}
