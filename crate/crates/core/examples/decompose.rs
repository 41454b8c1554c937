//! Decompose Foulkes characters `φ^(a^b)` and compare `(a^b)` with `(b^a)`.
//!
//! ```text
//! cargo run --release --example decompose -- 3 4
//! ```

use foulkes::characters::dimension;
use foulkes::foulkes::{decompose, multiplicity, omega_size, FoulkesShape};

fn main() -> foulkes::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 4),
    };
    let s = FoulkesShape::new(a, b)?;
    let table = decompose(s, None);
    println!("φ^{s}: {} constituents", table.len());
    for (lambda, m) in table.entries() {
        println!("  {:<14} {m:>3}   dim {}", lambda.to_string(), dimension(lambda));
    }
    println!("dimension sum {} = |Ω| {}", table.dimension_sum(), omega_size(s));

    // Foulkes' conjecture: for a ≥ b every multiplicity of φ^(a^b) is at most
    // the one in φ^(b^a).
    let (small, large) = if a >= b { (s, s.transpose()) } else { (s.transpose(), s) };
    let mut strict = 0;
    for lambda in foulkes::partitions::enum_partitions(s.degree(), None, None) {
        let x = multiplicity(small, &lambda)?;
        let y = multiplicity(large, &lambda)?;
        assert!(x <= y, "{lambda}: {x} > {y}");
        strict += usize::from(x < y);
    }
    println!("{small} ≤ {large} everywhere; strictly smaller at {strict} partitions");
    Ok(())
}
