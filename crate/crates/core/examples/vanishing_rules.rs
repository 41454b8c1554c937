//! Which zero multiplicities the vanishing rules explain, partition by
//! partition, plus a full check of every rule against the computed table.
//!
//! ```text
//! cargo run --release --example vanishing_rules -- 3 4
//! ```

use foulkes::foulkes::{decompose, FoulkesShape};
use foulkes::partitions::{enum_partitions, to_hook_coords};
use foulkes::theorems::{predictions, two_row_formula, verify_all};

fn main() -> foulkes::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 4),
    };
    let s = FoulkesShape::new(a, b)?;
    let table = decompose(s, None);

    println!("{:<14} {:<12} {:>4}  rules", "lambda", "[k:α]", "mult");
    for lambda in enum_partitions(s.degree(), Some(b), None) {
        let rules: Vec<&str> = predictions(s, &lambda).iter().map(|p| p.rule.id()).collect();
        let h = to_hook_coords(&lambda)?;
        println!(
            "{:<14} {:<12} {:>4}  {}",
            lambda.to_string(),
            h.to_string(),
            table.multiplicity(&lambda),
            rules.join(" ")
        );
    }

    println!("\ntwo-row multiplicities |P(r)| − |P(r−1)|:");
    for r in 0..=s.degree() / 2 {
        let (young, chi) = two_row_formula(a, b, r)?;
        println!("  r={r:<2} ({})  π: {}  χ: {}", chi.lambda, young.verdict, chi.verdict);
    }

    let found = verify_all(a, b)?;
    println!("\n{} discrepancies", found.len());
    for d in found {
        println!("  {d}");
    }
    Ok(())
}
