//! Orbits of `S_r × S_{ab−r}` on set partitions into `b` blocks of size
//! `a`: one orbit per partition of `r` fitting in `(a^b)`, with a closed
//! formula for its size. Checked here against brute-force enumeration.
//!
//! ```text
//! cargo run --release --example restriction -- 2 4
//! ```

use foulkes::foulkes::{omega_size, orbit_size, FoulkesShape};
use foulkes::oracle::{brute_restriction_orbits, restriction_orbits, verify_trivial_quotient};
use foulkes::partitions::enum_p;

fn main() -> foulkes::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (2, 4),
    };
    let s = FoulkesShape::new(a, b)?;
    println!("|Ω^{s}| = {}", omega_size(s));
    for r in 0..s.degree() {
        let brute = brute_restriction_orbits(a, b, r)?;
        let orbits = restriction_orbits(a, b, r)?;
        let keys = enum_p(r, a, b);
        assert_eq!(brute.keys().cloned().collect::<Vec<_>>().len(), keys.len());
        assert_eq!(orbits.len(), keys.len());
        let mut row = Vec::new();
        for lambda in &keys {
            let size = orbit_size(s, r, lambda)?;
            assert_eq!(size, brute[lambda].into());
            row.push(format!("({lambda}):{size}"));
        }
        println!("r={r:<2} {}", row.join("  "));
    }

    let lambda = "2,1".parse()?;
    let ok = verify_trivial_quotient(a, b, 3, &lambda)?;
    println!("S_3 orbits on O((2,1)) match Ω^(2,1): {ok}");
    Ok(())
}
