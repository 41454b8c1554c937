//! Partitions of `n` in `[k:α]` coordinates: first row, a column of `k`
//! boxes, and the inside-partition `α` one column to the right.
//!
//! ```text
//! cargo run --example hook_coordinates -- 8
//! ```

use foulkes::partitions::{enum_partitions, to_hook_coords, HookCoordinates, Partition};

fn main() -> foulkes::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);

    println!("{:<16} {:<10} t  m", "lambda", "[k:α]");
    for lambda in enum_partitions(n, None, None) {
        let h = to_hook_coords(&lambda)?;
        println!("{:<16} {:<10} {}  {}", lambda.to_string(), h.to_string(), h.t(), h.inside_weight());
    }

    // The other direction, including a rejected input.
    let h = HookCoordinates::new(12, 3, "2".parse::<Partition>()?)?;
    println!("\n{h} with n = 12 is ({})", h.to_partition());
    match HookCoordinates::new(9, 3, "3".parse()?) {
        Ok(h) => println!("{h} is ({})", h.to_partition()),
        Err(e) => println!("[3:3] with n = 9: {e}"),
    }
    Ok(())
}
