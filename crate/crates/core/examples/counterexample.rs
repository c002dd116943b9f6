//! The length-28 Lyndon word with as few Lyndon factors as any, that is not Christoffel.

use lyndonlab::search::{
    christoffel_findings, christoffel_non_minimal_check, counterexample_check,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for verdict in [counterexample_check()?, christoffel_non_minimal_check()?] {
        for check in &verdict.checks {
            let mark = if check.passed { "ok  " } else { "FAIL" };
            println!("{mark} {}: {}", check.name, check.detail);
        }
    }

    println!();
    println!("n\tminimum\tbest Christoffel\tattaining slopes");
    for f in christoffel_findings(16)? {
        println!(
            "{}\t{}\t{}\t{}",
            f.n,
            f.minimum,
            f.christoffel_minimum,
            f.attaining.join(" ")
        );
    }
    Ok(())
}
