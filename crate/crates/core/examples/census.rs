//! How much of the zero set of a Foulkes character the main vanishing
//! criterion explains.
//!
//! ```text
//! cargo run --release --example census -- 3 10
//! ```

use foulkes::theorems::census;

fn main() -> foulkes::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 8),
    };
    let report = census(a, b)?;
    println!("shape ({a}^{b}), partitions of {} with at most {b} parts", a * b);
    println!("  considered  {}", report.total_considered);
    println!("  zero        {}", report.zero_count);
    println!("  predicted   {}", report.predicted_count);
    println!("  elapsed     {:?}", report.elapsed);
    Ok(())
}
