//! Character table of `S_n` from the Murnaghan–Nakayama rule, with the
//! row orthogonality check.
//!
//! ```text
//! cargo run --example character_table -- 5
//! ```

use foulkes::characters::{char_row, dimension, inner_cf};
use foulkes::partitions::enum_partitions;

fn main() -> foulkes::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let classes = enum_partitions(n, None, None);

    print!("{:>12} |", "λ \\ μ");
    for mu in &classes {
        print!(" {:>8}", mu.to_string());
    }
    println!();
    let rows: Vec<_> = classes.iter().map(|l| (l, char_row(l))).collect();
    for (lambda, row) in &rows {
        print!("{:>12} |", lambda.to_string());
        for mu in &classes {
            print!(" {:>8}", row.value(mu));
        }
        println!();
        assert_eq!(row.value(&foulkes::partitions::Partition::column(n)), dimension(lambda).into());
    }

    let mut off_diagonal = 0;
    for (i, (_, x)) in rows.iter().enumerate() {
        for (j, (_, y)) in rows.iter().enumerate() {
            let ip = inner_cf(x, y)?;
            let expected = num_bigint::BigInt::from(i64::from(i == j));
            assert_eq!(ip, expected.into());
            off_diagonal += usize::from(i != j);
        }
    }
    println!("\northonormal: {} rows, {off_diagonal} vanishing cross terms", rows.len());
    Ok(())
}
