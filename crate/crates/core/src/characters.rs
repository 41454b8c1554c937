//! Irreducible characters of symmetric groups.
//!
//! Values come from the Murnaghan–Nakayama rule: strip a border strip
//! (rim hook) whose length is the largest remaining cycle, with sign
//! `(−1)^height`, and recurse. Rim hooks are located through beta-sets, where
//! removing a strip of length `m` is moving one bead from `β` to `β − m`.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::{Mutex, RwLock};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enum_partitions, factorial, z_order, Partition};
use crate::symfunc::{h_series, multiply, to_class_function, PSeries};

/// A class function of `S_n`, stored by cycle type. Absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            values: BTreeMap::new(),
        }
    }

    /// The trivial character.
    pub fn ones(degree: usize) -> Self {
        let values = enum_partitions(degree, None, None)
            .into_iter()
            .map(|l| (l, BigInt::one()))
            .collect();
        Self { degree, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, mu: &Partition) -> BigInt {
        self.values.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Panics if `mu` has the wrong weight.
    pub fn set(&mut self, mu: Partition, v: BigInt) {
        assert_eq!(mu.weight(), self.degree, "cycle type {mu} is not a class of S_{}", self.degree);
        if v.is_zero() {
            self.values.remove(&mu);
        } else {
            self.values.insert(mu, v);
        }
    }

    /// Non-zero values in ascending key order.
    pub fn values(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }
}

#[derive(Serialize, Deserialize)]
struct WireValue {
    mu: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct WireClassFunction {
    degree: usize,
    terms: Vec<WireValue>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WireClassFunction {
            degree: self.degree,
            terms: self
                .values
                .iter()
                .rev()
                .map(|(l, v)| WireValue {
                    mu: if l.is_empty() { String::new() } else { l.to_string() },
                    value: v.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = WireClassFunction::deserialize(deserializer)?;
        let mut cf = ClassFunction::zero(wire.degree);
        for t in wire.terms {
            let mu: Partition = if t.mu.is_empty() {
                Partition::empty()
            } else {
                t.mu.parse().map_err(D::Error::custom)?
            };
            if mu.weight() != wire.degree {
                return Err(D::Error::custom(format!("class {mu} has the wrong weight")));
            }
            cf.set(mu, t.value.parse().map_err(D::Error::custom)?);
        }
        Ok(cf)
    }
}

fn beta_set(lambda: &Partition, rows: usize) -> Vec<usize> {
    (0..rows).map(|i| lambda.part(i + 1) + rows - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|x, y| y.cmp(x));
    let rows = beta.len();
    Partition::from_unsorted_lossy(beta.iter().enumerate().map(|(i, b)| b - (rows - 1 - i)))
}

/// Border strips of length `m` removable from `λ`, as `(λ minus strip, height)`.
pub fn remove_rim_hooks(lambda: &Partition, m: usize) -> Vec<(Partition, usize)> {
    let rows = lambda.len();
    let beta = beta_set(lambda, rows);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - m && x < b).count();
        let mut next = beta.clone();
        next[i] = b - m;
        out.push((from_beta_set(next), height));
    }
    out
}

/// Border strips of length `m` addable to `λ`, as `(λ plus strip, height)`.
pub fn add_rim_hooks(lambda: &Partition, m: usize) -> Vec<(Partition, usize)> {
    let rows = lambda.len() + m;
    let beta = beta_set(lambda, rows);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if beta.contains(&(b + m)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b && x < b + m).count();
        let mut next = beta.clone();
        next[i] = b + m;
        out.push((from_beta_set(next), height));
    }
    out
}

type MnKey = (Partition, Partition);

enum MnCache {
    Unbounded(DashMap<MnKey, i128>),
    Bounded(Mutex<lru::LruCache<MnKey, i128>>),
}

impl MnCache {
    fn get(&self, key: &MnKey) -> Option<i128> {
        match self {
            MnCache::Unbounded(m) => m.get(key).map(|v| *v),
            MnCache::Bounded(m) => m.lock().get(key).copied(),
        }
    }

    fn insert(&self, key: MnKey, v: i128) {
        match self {
            MnCache::Unbounded(m) => {
                m.insert(key, v);
            }
            MnCache::Bounded(m) => {
                m.lock().put(key, v);
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            MnCache::Unbounded(m) => m.len(),
            MnCache::Bounded(m) => m.lock().len(),
        }
    }
}

static MN_CACHE: Lazy<RwLock<MnCache>> = Lazy::new(|| RwLock::new(MnCache::Unbounded(DashMap::new())));

/// Replaces the global character-value cache. `None` means unbounded;
/// `Some(n)` keeps at most `n` entries with least-recently-used eviction.
/// Existing entries are dropped.
pub fn configure_char_cache(capacity: Option<NonZeroUsize>) {
    let cache = match capacity {
        None => MnCache::Unbounded(DashMap::new()),
        Some(n) => MnCache::Bounded(Mutex::new(lru::LruCache::new(n))),
    };
    *MN_CACHE.write() = cache;
}

/// Number of memoized `(shape, cycle type)` values.
pub fn char_cache_len() -> usize {
    MN_CACHE.read().len()
}

/// `χ^λ(μ)`.
pub fn mn_char(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            found: mu.weight(),
        });
    }
    Ok(BigInt::from(mn_value(lambda, mu)))
}

// i128 holds every value up to n ≈ 56 since |χ^λ(μ)| ≤ sqrt(n!).
pub(crate) fn mn_value(lambda: &Partition, mu: &Partition) -> i128 {
    if lambda.len() <= 1 {
        return 1;
    }
    if lambda.first() == 1 {
        return if (mu.weight() - mu.len()).is_multiple_of(2) { 1 } else { -1 };
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = MN_CACHE.read().get(&key) {
        return v;
    }
    let m = mu.first();
    let rest = Partition::from_sorted(mu.parts()[1..].to_vec());
    let mut total: i128 = 0;
    for (shape, height) in remove_rim_hooks(lambda, m) {
        let v = mn_value(&shape, &rest);
        let v = if height % 2 == 0 { v } else { -v };
        total = total.checked_add(v).expect("character value overflows i128");
    }
    MN_CACHE.read().insert(key, total);
    total
}

/// All values `χ^λ(μ)`, `μ ⊢ |λ|`.
pub fn char_row(lambda: &Partition) -> ClassFunction {
    let classes = enum_partitions(lambda.weight(), None, None);
    char_row_on(lambda, classes.iter())
}

/// `χ^λ` evaluated only on the given classes; every other class reads as 0.
pub fn char_row_on<'a>(lambda: &Partition, classes: impl Iterator<Item = &'a Partition>) -> ClassFunction {
    let classes: Vec<&Partition> = classes.filter(|mu| mu.weight() == lambda.weight()).collect();
    let values: Vec<(Partition, i128)> = classes
        .par_iter()
        .map(|mu| ((*mu).clone(), mn_value(lambda, mu)))
        .collect();
    let mut cf = ClassFunction::zero(lambda.weight());
    for (mu, v) in values {
        cf.set(mu, BigInt::from(v));
    }
    cf
}

/// Hook-length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j + 1) - i - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(lambda.weight()) / hooks
}

/// Permutation character of the Young module `M^μ`.
pub fn young_perm_char(mu: &Partition) -> ClassFunction {
    let series = young_series(mu);
    to_class_function(&series).expect("permutation characters are integral")
}

pub(crate) fn young_series(mu: &Partition) -> PSeries {
    mu.parts()
        .iter()
        .fold(PSeries::one(), |acc, &part| multiply(&acc, &h_series(part)))
}

/// `Σ_μ f(μ) g(μ) / z_μ`.
pub fn inner_cf(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch {
            left: f.degree,
            right: g.degree,
        });
    }
    let mut total = BigRational::zero();
    for (mu, v) in &f.values {
        if let Some(w) = g.values.get(mu) {
            total += BigRational::new(v * w, BigInt::from(z_order(mu)));
        }
    }
    Ok(total)
}
