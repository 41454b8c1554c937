//! Vanishing rules and closed formulas for Foulkes multiplicities, as
//! predicates that can be checked against computed values.
//!
//! Each predicate inspects a partition `λ` (and the shape where needed) and
//! returns a [`Prediction`]: a claimed multiplicity, or [`Verdict::NoClaim`].
//! [`verify_all`] compares every claim with an independent computation;
//! [`census`] counts how much of the zero set the main criterion explains.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::control::Control;
use crate::error::{Error, Result};
use crate::foulkes::{decompose_with, DecomposeOptions, Engine, FoulkesShape, GeneralizedShape};
use crate::partitions::{count_p, enum_partitions, hook_leg, to_hook_coords, HookCoordinates, Partition};
use crate::schur::plethysm_schur;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Zero,
    One,
    Value(BigUint),
    NoClaim,
}

impl Verdict {
    /// The claimed multiplicity, if any.
    pub fn claimed(&self) -> Option<BigUint> {
        match self {
            Verdict::Zero => Some(BigUint::zero()),
            Verdict::One => Some(BigUint::one()),
            Verdict::Value(v) => Some(v.clone()),
            Verdict::NoClaim => None,
        }
    }

    pub fn is_claim(&self) -> bool {
        !matches!(self, Verdict::NoClaim)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Zero => f.write_str("0"),
            Verdict::One => f.write_str("1"),
            Verdict::Value(v) => write!(f, "{v}"),
            Verdict::NoClaim => f.write_str("no claim"),
        }
    }
}

/// The implemented rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// More than `b` parts.
    ManyParts,
    /// Hooks `(ab−r, 1^r)` with `r ≥ 1`.
    Hook,
    /// `k > n` and `α₁ < (k−n)(k−n+1)/2` in `[k:α]` coordinates.
    Main,
    /// Inside-partition of weight `m ≤ k` other than `(1^k)`.
    SmallInside,
    /// Two-row multiplicities from the counts `|P(r)_a^b|`.
    TwoRow,
    /// Hooks with leg at least the number of distinct block sizes of `η`.
    GeneralizedHook,
    /// `[k:(1^k)]` with `k < b` has multiplicity 1.
    ColumnInside,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::ManyParts => "many-parts",
            Rule::Hook => "hook-theorem",
            Rule::Main => "main-theorem",
            Rule::SmallInside => "small-inside",
            Rule::TwoRow => "two-row",
            Rule::GeneralizedHook => "generalized-hook",
            Rule::ColumnInside => "column-inside",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub lambda: Partition,
    pub verdict: Verdict,
    pub rule: Rule,
}

impl Prediction {
    fn new(lambda: &Partition, verdict: Verdict, rule: Rule) -> Self {
        Self {
            lambda: lambda.clone(),
            verdict,
            rule,
        }
    }
}

pub fn predict_many_parts(lambda: &Partition, b: usize) -> Prediction {
    let verdict = if lambda.len() > b { Verdict::Zero } else { Verdict::NoClaim };
    Prediction::new(lambda, verdict, Rule::ManyParts)
}

pub fn predict_hook(lambda: &Partition) -> Prediction {
    let verdict = match hook_leg(lambda) {
        Ok(Some(leg)) if leg >= 1 => Verdict::Zero,
        _ => Verdict::NoClaim,
    };
    Prediction::new(lambda, verdict, Rule::Hook)
}

/// Whether `[k:α]` satisfies `k > n` and `α₁ < (k−n)(k−n+1)/2`, where
/// `n = α₂ + … + α_t` and `α₁ = 0` for an empty inside-partition.
pub fn main_hypotheses(h: &HookCoordinates) -> bool {
    let k = h.k();
    let n = h.tail_weight();
    if k <= n {
        return false;
    }
    let d = k - n;
    2 * h.inside().first() < d * (d + 1)
}

pub fn predict_main(lambda: &Partition) -> Prediction {
    let verdict = match to_hook_coords(lambda) {
        Ok(h) if main_hypotheses(&h) => Verdict::Zero,
        _ => Verdict::NoClaim,
    };
    Prediction::new(lambda, verdict, Rule::Main)
}

pub fn predict_small_inside(lambda: &Partition) -> Prediction {
    let verdict = match to_hook_coords(lambda) {
        Ok(h) => {
            let m = h.inside_weight();
            let column = *h.inside() == Partition::column(h.k());
            if m >= 1 && m <= h.k() && !column {
                Verdict::Zero
            } else {
                Verdict::NoClaim
            }
        }
        Err(_) => Verdict::NoClaim,
    };
    Prediction::new(lambda, verdict, Rule::SmallInside)
}

/// Claimed multiplicities of the Young character `π^(ab−r,r)` and of the
/// irreducible `χ^(ab−r,r)` in `φ^(a^b)`.
pub fn two_row_formula(a: usize, b: usize, r: usize) -> Result<(Prediction, Prediction)> {
    let n = a * b;
    if 2 * r > n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: format!("0..={}", n / 2),
        });
    }
    let lambda = Partition::from_unsorted_lossy([n - r, r]);
    let young = count_p(r, a, b);
    let irreducible = if r == 0 {
        BigUint::one()
    } else {
        young.clone() - count_p(r - 1, a, b)
    };
    Ok((
        Prediction::new(&lambda, Verdict::Value(young), Rule::TwoRow),
        Prediction::new(&lambda, Verdict::Value(irreducible), Rule::TwoRow),
    ))
}

pub fn predict_gen_hooks(g: &GeneralizedShape, lambda: &Partition) -> Result<Prediction> {
    if lambda.weight() != g.degree() {
        return Err(Error::WeightMismatch {
            expected: g.degree(),
            found: lambda.weight(),
        });
    }
    let verdict = match hook_leg(lambda)? {
        Some(leg) if leg >= g.t() => Verdict::Zero,
        _ => Verdict::NoClaim,
    };
    Ok(Prediction::new(lambda, verdict, Rule::GeneralizedHook))
}

/// The claim that `[k:(1^k)]` has multiplicity one for `k < b`. It is only
/// made for `a ≥ 2`: when `a = 1` the Foulkes character is trivial.
pub fn claim_column_inside(a: usize, b: usize, k: usize) -> Result<Prediction> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            range: "1..".into(),
        });
    }
    let h = HookCoordinates::new(a * b, k, Partition::column(k))?;
    let verdict = if k < b && a >= 2 { Verdict::One } else { Verdict::NoClaim };
    Ok(Prediction::new(&h.to_partition(), verdict, Rule::ColumnInside))
}

/// Every claim (verdict other than no-claim) the rules make about `λ ⊢ ab`.
pub fn predictions(s: FoulkesShape, lambda: &Partition) -> Vec<Prediction> {
    let (a, b) = (s.a(), s.b());
    let mut out = vec![
        predict_many_parts(lambda, b),
        predict_hook(lambda),
        predict_main(lambda),
        predict_small_inside(lambda),
    ];
    if lambda.len() <= 2 {
        if let Ok((_, chi)) = two_row_formula(a, b, lambda.part(2)) {
            out.push(chi);
        }
    }
    if let Ok(h) = to_hook_coords(lambda) {
        if h.k() >= 1 && *h.inside() == Partition::column(h.k()) {
            if let Ok(claim) = claim_column_inside(a, b, h.k()) {
                out.push(claim);
            }
        }
    }
    out.retain(|p| p.verdict.is_claim());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub lambda: Partition,
    pub rule: Rule,
    pub claimed: Verdict,
    pub actual: BigUint,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} claims {} but the multiplicity is {}",
            self.lambda, self.rule, self.claimed, self.actual
        )
    }
}

/// Checks every claim for every `λ ⊢ ab` against multiplicities computed
/// without any fast path. Empty means full agreement.
pub fn verify_all(a: usize, b: usize) -> Result<Vec<Discrepancy>> {
    verify_all_with(a, b, &Control::none())
}

pub fn verify_all_with(a: usize, b: usize, control: &Control) -> Result<Vec<Discrepancy>> {
    let s = FoulkesShape::new(a, b)?;
    let opts = DecomposeOptions {
        fast_paths: false,
        engine: Engine::Bulk,
    };
    let table = decompose_with(s, None, opts, control)?;
    let mut found = Vec::new();
    for lambda in enum_partitions(s.degree(), None, None) {
        let actual = table.multiplicity(&lambda);
        for p in predictions(s, &lambda) {
            if p.verdict.claimed().as_ref() != Some(&actual) {
                found.push(Discrepancy {
                    lambda: lambda.clone(),
                    rule: p.rule,
                    claimed: p.verdict,
                    actual: actual.clone(),
                });
            }
        }
    }
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub a: usize,
    pub b: usize,
    /// Partitions of `ab` with at most `b` parts.
    #[serde(rename = "total")]
    pub total_considered: usize,
    /// Of those, how many have multiplicity 0.
    #[serde(rename = "zero")]
    pub zero_count: usize,
    /// Of the zeros, how many satisfy the main criterion.
    #[serde(rename = "predicted")]
    pub predicted_count: usize,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

pub fn census(a: usize, b: usize) -> Result<CensusReport> {
    census_with(a, b, &Control::none())
}

pub fn census_with(a: usize, b: usize, control: &Control) -> Result<CensusReport> {
    let started = Instant::now();
    FoulkesShape::new(a, b)?;
    // Rim-hook products never remove rows, so truncating to b rows is exact here.
    let expansion = plethysm_schur(a, b, Some(b), control)?;
    let considered = enum_partitions(a * b, Some(b), None);
    control.check()?;
    let (zero_count, predicted_count) = considered
        .par_iter()
        .filter(|l| expansion.coeff(l).is_zero())
        .map(|l| (1usize, usize::from(predict_main(l).verdict == Verdict::Zero)))
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(CensusReport {
        a,
        b,
        total_considered: considered.len(),
        zero_count,
        predicted_count,
        elapsed: started.elapsed(),
    })
}
