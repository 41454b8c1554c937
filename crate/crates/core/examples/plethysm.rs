//! Symmetric functions in the power-sum basis: products, the plethysm
//! `h_b[h_a]`, and the Schur expansion of the result.
//!
//! ```text
//! cargo run --example plethysm -- 2 3
//! ```

use foulkes::control::Control;
use foulkes::schur::to_schur;
use foulkes::symfunc::{h_series, inner, multiply, plethysm_h, schur_series, to_class_function};

fn main() -> foulkes::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (2, 3),
    };

    let f = plethysm_h(b, &h_series(a));
    println!("h_{b}[h_{a}] has {} power-sum terms:", f.len());
    for (mu, c) in f.terms().take(12) {
        println!("  {c:>12} p_({mu})");
    }
    if f.len() > 12 {
        println!("  ...");
    }

    // As a class function it counts fixed set partitions.
    let cf = to_class_function(&f)?;
    let identity = foulkes::partitions::Partition::column(a * b);
    println!("value at the identity: {}", cf.value(&identity));

    let schur = to_schur(&f, None, &Control::none())?;
    println!("Schur expansion:");
    for (lambda, c) in schur.terms().rev() {
        let check = inner(&f, &schur_series(lambda))?;
        assert_eq!(check, c.clone().into());
        println!("  {c} s_({lambda})");
    }

    let pieri = to_schur(&multiply(&schur_series(&"2,1".parse()?), &h_series(2)), None, &Control::none())?;
    let shapes: Vec<String> = pieri.terms().rev().map(|(l, _)| format!("({l})")).collect();
    println!("s_(2,1) h_2 = {}", shapes.join(" + "));
    Ok(())
}
