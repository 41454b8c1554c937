//! Generalized Foulkes characters `ψ^η`: set partitions with several block
//! sizes. Hooks with leg at least the number of distinct sizes vanish.
//!
//! ```text
//! cargo run --example generalized -- 3,3,2
//! ```

use foulkes::foulkes::{gen_multiplicity, GeneralizedShape};
use foulkes::partitions::{enum_partitions, hook_leg};
use foulkes::theorems::predict_gen_hooks;
use num_traits::Zero;

fn main() -> foulkes::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3^2,2".into());
    let g: GeneralizedShape = text.parse()?;
    println!("ψ^{g}, degree {}, t = {}", g.degree(), g.t());
    for lambda in enum_partitions(g.degree(), None, None) {
        let m = gen_multiplicity(&g, &lambda)?;
        let leg = hook_leg(&lambda)?;
        let claim = predict_gen_hooks(&g, &lambda)?.verdict;
        if m.is_zero() && leg.is_none() {
            continue;
        }
        let note = if claim.is_claim() { format!("  rule says {claim}") } else { String::new() };
        println!("  {:<12} {m}{note}", lambda.to_string());
    }
    Ok(())
}
