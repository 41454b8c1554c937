//! Bulk conversion into the Schur basis.
//!
//! Multiplying a Schur expansion by `p_m` adds every possible rim hook of
//! length `m` with sign `(−1)^height`. Rim hooks only ever add boxes, so rows
//! never disappear and an expansion can be truncated to shapes with at most
//! `max_rows` rows at every intermediate step without changing the surviving
//! coefficients. Both routes here rely on that.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::add_rim_hooks;
use crate::control::Control;
use crate::error::{Error, Result};
use crate::partitions::{enum_partitions, factorial, z_order, Partition};
use crate::symfunc::PSeries;

/// `Σ_λ c_λ s_λ` with integer coefficients; zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Non-zero terms in ascending key order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

type Vector<T> = HashMap<Partition, T>;

fn times_power<T>(v: &Vector<T>, m: usize, max_rows: usize) -> Vector<T>
where
    T: Clone + Zero + std::ops::Neg<Output = T> + std::ops::AddAssign,
{
    let mut out: Vector<T> = HashMap::with_capacity(v.len() * 2);
    for (shape, c) in v {
        for (bigger, height) in add_rim_hooks(shape, m) {
            if bigger.len() > max_rows {
                continue;
            }
            let term = if height % 2 == 0 { c.clone() } else { -c.clone() };
            *out.entry(bigger).or_insert_with(T::zero) += term;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Schur expansion of `f`, keeping only shapes with at most `max_rows` rows
/// (all shapes when `None`). Fails if a coefficient is not an integer.
pub fn to_schur(f: &PSeries, max_rows: Option<usize>, control: &Control) -> Result<SchurExpansion> {
    let max_rows = max_rows.unwrap_or(f.degree());
    let denom = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let keys: Vec<(&[usize], BigInt)> = f
        .terms()
        .map(|(l, c)| (l.parts(), c.numer() * (&denom / c.denom())))
        .collect();
    let mut start: Vector<i128> = HashMap::new();
    start.insert(Partition::empty(), 1);

    // Keys that share leading parts share the corresponding rim-hook products.
    let groups = group_by_part(&keys, 0);
    let partials: Vec<Result<Vector<BigInt>>> = groups
        .par_iter()
        .map(|&(lo, hi)| {
            let mut out = HashMap::new();
            descend(&keys[lo..hi], 0, &start, max_rows, &mut out, control)?;
            Ok(out)
        })
        .collect();

    let mut total: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (parts, weight) in &keys {
        if parts.is_empty() {
            total.insert(Partition::empty(), weight.clone());
        }
    }
    for partial in partials {
        for (shape, c) in partial? {
            *total.entry(shape).or_insert_with(BigInt::zero) += c;
        }
    }
    let mut coeffs = BTreeMap::new();
    for (shape, c) in total {
        let (q, r) = c.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::NonIntegral(shape.to_string()));
        }
        if !q.is_zero() {
            coeffs.insert(shape, q);
        }
    }
    Ok(SchurExpansion {
        degree: f.degree(),
        coeffs,
    })
}

// Ranges of `keys` (sorted by parts) that agree on the part at `depth`.
// Keys with fewer parts than `depth + 1` are skipped.
fn group_by_part(keys: &[(&[usize], BigInt)], depth: usize) -> Vec<(usize, usize)> {
    let mut groups = Vec::new();
    let mut i = 0;
    while i < keys.len() {
        if keys[i].0.len() <= depth {
            i += 1;
            continue;
        }
        let part = keys[i].0[depth];
        let mut j = i + 1;
        while j < keys.len() && keys[j].0.len() > depth && keys[j].0[depth] == part {
            j += 1;
        }
        groups.push((i, j));
        i = j;
    }
    groups
}

fn descend(
    keys: &[(&[usize], BigInt)],
    depth: usize,
    prefix: &Vector<i128>,
    max_rows: usize,
    out: &mut Vector<BigInt>,
    control: &Control,
) -> Result<()> {
    control.check()?;
    let part = keys[0].0[depth];
    let here = times_power(prefix, part, max_rows);
    for (parts, weight) in keys {
        if parts.len() == depth + 1 {
            for (shape, c) in &here {
                *out.entry(shape.clone()).or_insert_with(BigInt::zero) += weight * BigInt::from(*c);
            }
        }
    }
    for (lo, hi) in group_by_part(keys, depth + 1) {
        descend(&keys[lo..hi], depth + 1, &here, max_rows, out, control)?;
    }
    Ok(())
}

/// Schur expansion of `h_b[h_a]` truncated to `max_rows` rows, computed by the
/// Newton recursion `j·g_j = Σ_k p_k[h_a] · g_{j−k}` directly in the Schur
/// basis.
pub fn plethysm_schur(a: usize, b: usize, max_rows: Option<usize>, control: &Control) -> Result<SchurExpansion> {
    let max_rows = max_rows.unwrap_or(a * b);
    // a!·p_k[h_a] = Σ_{ν⊢a} (a!/z_ν) p_{kν} has integer coefficients.
    let fa = BigInt::from(factorial(a));
    let h_terms: Vec<(Partition, BigInt)> = enum_partitions(a, None, None)
        .into_iter()
        .map(|nu| {
            let w = &fa / BigInt::from(z_order(&nu));
            (nu, w)
        })
        .collect();

    let mut g: Vec<Vector<BigInt>> = Vec::with_capacity(b + 1);
    let mut g0 = HashMap::new();
    g0.insert(Partition::empty(), BigInt::one());
    g.push(g0);
    for j in 1..=b {
        let contributions: Vec<Result<Vector<BigInt>>> = (1..=j)
            .into_par_iter()
            .map(|k| {
                let mut acc: Vector<BigInt> = HashMap::new();
                for (nu, w) in &h_terms {
                    control.check()?;
                    let mut v = g[j - k].clone();
                    for &part in nu.parts() {
                        v = times_power(&v, k * part, max_rows);
                    }
                    for (shape, c) in v {
                        *acc.entry(shape).or_insert_with(BigInt::zero) += c * w;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for part in contributions {
            for (shape, c) in part? {
                *acc.entry(shape).or_insert_with(BigInt::zero) += c;
            }
        }
        let scale = &fa * BigInt::from(j);
        let mut next = HashMap::with_capacity(acc.len());
        for (shape, c) in acc {
            let (q, r) = c.div_rem(&scale);
            assert!(r.is_zero(), "h_j[h_a] has integral Schur coefficients");
            if !q.is_zero() {
                next.insert(shape, q);
            }
        }
        g.push(next);
    }
    let coeffs = g.pop().expect("g_b").into_iter().collect();
    Ok(SchurExpansion { degree: a * b, coeffs })
}
