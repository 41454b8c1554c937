//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use foulkes::characters::{char_row, dimension, inner_cf, mn_char};
use foulkes::foulkes::{
    exterior_pairing, foulkes_series, gen_multiplicity, multiplicity_with, omega_size, orbit_size, FoulkesShape,
    GeneralizedShape, MultiplicityOptions,
};
use foulkes::oracle::{brute_foulkes_char, brute_restriction_orbits, restriction_orbits};
use foulkes::partitions::{count_p, enum_p, enum_partitions, pieri_add, HookCoordinates, Partition};
use foulkes::symfunc::{h_series, multiply, schur_series, to_class_function, PSeries};
use foulkes::theorems::{census, predict_main, verify_all, Verdict};

type Outcome = Result<(), String>;

fn shape(a: usize, b: usize) -> FoulkesShape {
    FoulkesShape::new(a, b).unwrap()
}

/// Multiplicity without the shortcut answers, so vanishing is computed
/// rather than assumed.
fn computed(s: FoulkesShape, lambda: &Partition) -> BigUint {
    multiplicity_with(s, lambda, MultiplicityOptions { fast_paths: false }).unwrap()
}

fn shapes_up_to(max_ab: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab / a {
            out.push((a, b));
        }
    }
    out
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn oracle_equivalence() -> Outcome {
    let mut shapes: Vec<(usize, usize)> = (1..=6).map(|b| (1, b)).collect();
    shapes.extend([(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5), (5, 2)]);
    for (a, b) in shapes {
        let series = to_class_function(&foulkes_series(shape(a, b))).unwrap();
        let brute = brute_foulkes_char(a, b).unwrap();
        for mu in enum_partitions(a * b, None, None) {
            check(series.value(&mu) == brute.value(&mu), || {
                format!("({a}^{b}) at class {mu}: {} vs {}", series.value(&mu), brute.value(&mu))
            })?;
        }
    }
    Ok(())
}

fn hook_vanishing() -> Outcome {
    let mut shapes = shapes_up_to(16);
    shapes.extend([(3, 6), (6, 3)]);
    for (a, b) in shapes {
        let n = a * b;
        for r in 1..n {
            let hook = Partition::hook(n, r).unwrap();
            let m = computed(shape(a, b), &hook);
            check(m.is_zero(), || format!("({a}^{b}) hook {hook}: {m}"))?;
        }
    }
    Ok(())
}

fn two_row_corollary() -> Outcome {
    for (a, b) in shapes_up_to(16) {
        let n = a * b;
        for r in 0..=n / 2 {
            let lambda = Partition::from_unsorted_lossy([n - r, r]);
            let formula = if r == 0 {
                BigUint::one()
            } else {
                count_p(r, a, b) - count_p(r - 1, a, b)
            };
            let here = computed(shape(a, b), &lambda);
            let swapped = computed(shape(b, a), &lambda);
            check(here == formula && swapped == formula, || {
                format!("({a}^{b}) ({lambda}): {here}, transposed {swapped}, formula {formula}")
            })?;
        }
    }
    Ok(())
}

fn exterior_pairings() -> Outcome {
    for (a, b) in shapes_up_to(16) {
        for k in 0..=12.min(a * b) {
            let v = exterior_pairing(shape(a, b), k).unwrap();
            let expected = BigUint::from(u8::from(k <= 1));
            check(v == expected, || format!("({a}^{b}) k={k}: {v}"))?;
        }
    }
    Ok(())
}

fn main_theorem_soundness() -> Outcome {
    for (a, b) in [(3, 4), (4, 3), (2, 6), (6, 2), (2, 7), (3, 5), (5, 3)] {
        let s = shape(a, b);
        for lambda in enum_partitions(a * b, Some(b), None) {
            if predict_main(&lambda).verdict == Verdict::Zero {
                let m = computed(s, &lambda);
                check(m.is_zero(), || format!("({a}^{b}) {lambda}: predicted 0, computed {m}"))?;
            }
        }
        let found = verify_all(a, b).unwrap();
        check(found.is_empty(), || format!("({a}^{b}): {}", found[0]))?;
    }
    Ok(())
}

fn census_reproduction() -> Outcome {
    let r = census(3, 10).unwrap();
    check(r.zero_count == 1909 && r.predicted_count == 492, || {
        format!("zero={} predicted={}", r.zero_count, r.predicted_count)
    })
}

fn column_inside() -> Outcome {
    for (a, b) in [(2, 4), (3, 4), (2, 5), (3, 5), (4, 4)] {
        for k in 1..b {
            let lambda = HookCoordinates::new(a * b, k, Partition::column(k)).unwrap().to_partition();
            let m = computed(shape(a, b), &lambda);
            check(m.is_one(), || format!("({a}^{b}) [{k}:(1^{k})] = {lambda}: {m}"))?;
        }
    }
    Ok(())
}

fn restriction_structure() -> Outcome {
    for (a, b) in shapes_up_to(10) {
        let s = shape(a, b);
        for r in 0..a * b {
            let brute = brute_restriction_orbits(a, b, r).unwrap();
            let orbits = restriction_orbits(a, b, r).unwrap();
            let keys = enum_p(r, a, b);
            check(brute.keys().eq(keys.iter().rev()), || format!("({a}^{b}) r={r}: keys differ"))?;
            check(orbits.len() == keys.len(), || format!("({a}^{b}) r={r}: orbit count"))?;
            let mut total = BigUint::zero();
            for (lambda, size) in &orbits {
                let formula = orbit_size(s, r, lambda).unwrap();
                check(formula == BigUint::from(*size) && formula == BigUint::from(brute[lambda]), || {
                    format!("({a}^{b}) r={r} {lambda}: formula {formula}, orbit {size}")
                })?;
                total += formula;
            }
            check(total == omega_size(s), || format!("({a}^{b}) r={r}: sizes sum to {total}"))?;
        }
    }
    Ok(())
}

fn character_engine() -> Outcome {
    for n in 0..=10 {
        let rows: Vec<_> = enum_partitions(n, None, None).iter().map(char_row).collect();
        for (i, x) in rows.iter().enumerate() {
            for (j, y) in rows.iter().enumerate() {
                let ip = inner_cf(x, y).unwrap();
                let expected = BigRational::from(BigInt::from(u8::from(i == j)));
                check(ip == expected, || format!("n={n}: rows {i},{j} pair to {ip}"))?;
            }
        }
    }
    for n in 1..=14 {
        for lambda in enum_partitions(n, None, None) {
            let at_identity = mn_char(&lambda, &Partition::column(n)).unwrap();
            check(at_identity == BigInt::from(dimension(&lambda)), || format!("dimension of {lambda}"))?;
        }
    }
    for w in 0..=9 {
        for k in 0..=w {
            for lambda in enum_partitions(w - k, None, None) {
                let product = multiply(&schur_series(&lambda), &h_series(k));
                let sum = pieri_add(&lambda, k)
                    .iter()
                    .fold(PSeries::zero(w), |acc, mu| acc.add(&schur_series(mu)).unwrap());
                check(product == sum, || format!("s_({lambda}) h_{k}"))?;
            }
        }
    }
    Ok(())
}

fn generalized_hooks() -> Outcome {
    for eta in ["2,1,1", "3,1,1", "3,3,2", "2,2,1"] {
        let g: GeneralizedShape = eta.parse().unwrap();
        let n = g.degree();
        for leg in g.t()..n {
            let hook = Partition::hook(n, leg).unwrap();
            let m = gen_multiplicity(&g, &hook).unwrap();
            check(m.is_zero(), || format!("η=({eta}) hook {hook}: {m}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("hook vanishing", hook_vanishing),
        ("two-row corollary", two_row_corollary),
        ("exterior pairing", exterior_pairings),
        ("main-theorem soundness", main_theorem_soundness),
        ("census reproduction (3^10)", census_reproduction),
        ("column-inside claim", column_inside),
        ("restriction structure", restriction_structure),
        ("character-engine health", character_engine),
        ("generalized hook vanishing", generalized_hooks),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  {:>2}. {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
