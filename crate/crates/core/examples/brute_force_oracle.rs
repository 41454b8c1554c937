//! The plethysm route against direct fixed-point counting on explicitly
//! enumerated set partitions.
//!
//! ```text
//! cargo run --release --example brute_force_oracle
//! ```

use foulkes::foulkes::{foulkes_series, FoulkesShape};
use foulkes::oracle::{brute_foulkes_char, enum_omega};
use foulkes::symfunc::to_class_function;

fn main() -> foulkes::Result<()> {
    for (a, b) in [(1, 5), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5), (5, 2)] {
        let s = FoulkesShape::new(a, b)?;
        let brute = brute_foulkes_char(a, b)?;
        let series = to_class_function(&foulkes_series(s))?;
        let agree = brute == series;
        println!(
            "{s:<7} |Ω| = {:<6} classes = {:<3} agree: {agree}",
            enum_omega(&vec![a; b])?.len(),
            series.support_len()
        );
        assert!(agree);
    }
    let omega = enum_omega(&[2, 2])?;
    let shown: Vec<String> = omega.iter().map(|p| p.to_string()).collect();
    println!("Ω^(2^2) = {{{}}}", shown.join(", "));
    Ok(())
}
