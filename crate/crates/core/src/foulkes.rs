//! Foulkes characters `φ^(a^b)`, generalized Foulkes characters `ψ^η`, and
//! their decompositions into irreducible characters.
//!
//! `φ^(a^b)` is the permutation character of `S_ab` acting on set partitions
//! of `{1..ab}` into `b` blocks of size `a`; its power-sum form is the
//! plethysm `h_b[h_a]`. Multiplicities `⟨φ^(a^b), χ^λ⟩` are inner products
//! evaluated only over the cycle types where the Foulkes series is non-zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{dimension, mn_value, ClassFunction};
use crate::control::Control;
use crate::error::{Error, Result};
use crate::partitions::{dominates, enum_partitions, factorial, Partition};
use crate::schur::plethysm_schur;
use crate::symfunc::{as_multiplicity, e_series, h_series, inner, multiply, plethysm_h, PSeries};

/// The rectangle `(a^b)`: `b` blocks of size `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoulkesShape {
    a: usize,
    b: usize,
}

impl FoulkesShape {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Shape(format!("a = {a} and b = {b} must both be at least 1")));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn degree(&self) -> usize {
        self.a * self.b
    }

    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.a, self.b)
    }

    /// `(b^a)`.
    pub fn transpose(&self) -> Self {
        Self { a: self.b, b: self.a }
    }
}

impl fmt::Display for FoulkesShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^{})", self.a, self.b)
    }
}

/// `η = (a_1^{b_1}, …, a_t^{b_t})` with `a_1 > … > a_t ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedShape {
    pairs: Vec<(usize, usize)>,
}

impl GeneralizedShape {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::Shape("block sizes and counts must be positive".into()));
        }
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::Shape("block sizes must be strictly decreasing".into()));
        }
        Ok(Self { pairs })
    }

    /// Groups equal parts of `η`.
    pub fn from_partition(eta: &Partition) -> Self {
        let pairs = eta.multiplicities().into_iter().rev().collect();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of distinct block sizes `t`.
    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    pub fn degree(&self) -> usize {
        self.pairs.iter().map(|(a, b)| a * b).sum()
    }

    pub fn as_partition(&self) -> Partition {
        Partition::from_unsorted_lossy(
            self.pairs
                .iter()
                .flat_map(|&(a, b)| std::iter::repeat_n(a, b)),
        )
    }
}

impl fmt::Display for GeneralizedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}^{b}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for GeneralizedShape {
    type Err = Error;

    /// Accepts partition text such as `2^2,1` and groups equal parts.
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_partition(&s.parse()?))
    }
}

/// A power-sum series with its coefficients over a common denominator, so an
/// inner product against a character is one integer sum and one division.
struct IntegralSupport {
    denom: BigInt,
    terms: Vec<(Partition, BigInt)>,
}

impl IntegralSupport {
    fn new(series: &PSeries) -> Self {
        let denom = series.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = series
            .terms()
            .map(|(mu, c)| (mu.clone(), c.numer() * (&denom / c.denom())))
            .collect();
        Self { denom, terms }
    }

    fn pair_with_irreducible(&self, lambda: &Partition) -> Result<BigUint> {
        let mut total = BigInt::zero();
        for (mu, w) in &self.terms {
            let chi = mn_value(lambda, mu);
            if chi != 0 {
                total += w * BigInt::from(chi);
            }
        }
        let (q, r) = total.div_rem(&self.denom);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NotAMultiplicity(format!("{total}/{}", self.denom)));
        }
        Ok(q.to_biguint().expect("non-negative"))
    }
}

static SUPPORT_CACHE: Lazy<Mutex<BTreeMap<FoulkesShape, Arc<IntegralSupport>>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

fn foulkes_support(s: FoulkesShape) -> Arc<IntegralSupport> {
    if let Some(found) = SUPPORT_CACHE.lock().get(&s) {
        return found.clone();
    }
    let built = Arc::new(IntegralSupport::new(&foulkes_series(s)));
    SUPPORT_CACHE.lock().entry(s).or_insert(built).clone()
}

/// `h_b[h_a]`, the power-sum form of `φ^(a^b)`.
pub fn foulkes_series(s: FoulkesShape) -> PSeries {
    plethysm_h(s.b, &h_series(s.a))
}

/// `∏_i h_{b_i}[h_{a_i}]`, the power-sum form of `ψ^η`.
pub fn gen_foulkes_series(g: &GeneralizedShape) -> PSeries {
    g.pairs
        .iter()
        .fold(PSeries::one(), |acc, &(a, b)| multiply(&acc, &plethysm_h(b, &h_series(a))))
}

/// `|Ω^(a^b)| = (ab)! / ((a!)^b · b!)`.
pub fn omega_size(s: FoulkesShape) -> BigUint {
    factorial(s.degree()) / (factorial(s.a).pow(s.b as u32) * factorial(s.b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplicityOptions {
    /// Answer 0 without computing when `p(λ) > b` or `λ` does not dominate `(a^b)`.
    pub fast_paths: bool,
}

impl Default for MultiplicityOptions {
    fn default() -> Self {
        Self { fast_paths: true }
    }
}

/// Why a fast path answered 0, if one applies.
pub fn fast_path_zero(s: FoulkesShape, lambda: &Partition) -> Option<&'static str> {
    if lambda.len() > s.b {
        return Some("more than b parts");
    }
    if lambda.weight() == s.degree() && !dominates(lambda, &s.rectangle()).unwrap_or(true) {
        return Some("does not dominate (a^b)");
    }
    None
}

/// `⟨φ^(a^b), χ^λ⟩` with the default options.
pub fn multiplicity(s: FoulkesShape, lambda: &Partition) -> Result<BigUint> {
    multiplicity_with(s, lambda, MultiplicityOptions::default())
}

pub fn multiplicity_with(s: FoulkesShape, lambda: &Partition, opts: MultiplicityOptions) -> Result<BigUint> {
    if lambda.weight() != s.degree() {
        return Err(Error::WeightMismatch {
            expected: s.degree(),
            found: lambda.weight(),
        });
    }
    if opts.fast_paths && fast_path_zero(s, lambda).is_some() {
        return Ok(BigUint::zero());
    }
    foulkes_support(s).pair_with_irreducible(lambda)
}

/// `⟨φ^(a^b), χ⟩` for a character `χ` given by its values on classes.
pub fn multiplicity_from_row(s: FoulkesShape, row: &ClassFunction) -> Result<BigUint> {
    if row.degree() != s.degree() {
        return Err(Error::DegreeMismatch {
            left: s.degree(),
            right: row.degree(),
        });
    }
    let support = foulkes_support(s);
    let mut total = BigInt::zero();
    for (mu, w) in &support.terms {
        total += w * row.value(mu);
    }
    let (q, r) = total.div_rem(&support.denom);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::NotAMultiplicity(format!("{total}/{}", support.denom)));
    }
    Ok(q.to_biguint().expect("non-negative"))
}

/// `⟨ψ^η, χ^λ⟩`.
pub fn gen_multiplicity(g: &GeneralizedShape, lambda: &Partition) -> Result<BigUint> {
    if lambda.weight() != g.degree() {
        return Err(Error::WeightMismatch {
            expected: g.degree(),
            found: lambda.weight(),
        });
    }
    IntegralSupport::new(&gen_foulkes_series(g)).pair_with_irreducible(lambda)
}

/// `⟨φ^(a^b), (ε_k × 1_{ab−k})↑^{S_ab}⟩`, the pairing with the `k`-th exterior
/// power of the natural permutation character.
pub fn exterior_pairing(s: FoulkesShape, k: usize) -> Result<BigUint> {
    let n = s.degree();
    if k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            range: format!("0..={n}"),
        });
    }
    let wedge = multiply(&e_series(k), &h_series(n - k));
    as_multiplicity(&inner(&foulkes_series(s), &wedge)?)
}

/// Size of the `S_r × S_{ab−r}` orbit `O(λ)` of set partitions whose blocks
/// meet `{1..r}` in sizes given by `λ`:
///
/// `r!/(∏λ_i! ∏_s m_s(λ)!) · (ab−r)!/(∏(a−λ_i)! (a!)^{b−p(λ)} (b−p(λ))!)`.
pub fn orbit_size(s: FoulkesShape, r: usize, lambda: &Partition) -> Result<BigUint> {
    let n = s.degree();
    if r >= n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: format!("0..{n}"),
        });
    }
    if lambda.weight() != r || lambda.len() > s.b || lambda.first() > s.a {
        return Err(Error::Shape(format!("{lambda:?} is not in P({r}) for {s}")));
    }
    let inside_blocks = lambda.parts().iter().map(|&p| factorial(p)).product::<BigUint>()
        * lambda
            .multiplicities()
            .values()
            .map(|&m| factorial(m))
            .product::<BigUint>();
    let empty = s.b - lambda.len();
    let outside_blocks = lambda.parts().iter().map(|&p| factorial(s.a - p)).product::<BigUint>()
        * factorial(s.a).pow(empty as u32)
        * factorial(empty);
    Ok(factorial(r) / inside_blocks * factorial(n - r) / outside_blocks)
}

/// Which route computes a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Newton recursion for `h_b[h_a]` carried out in the Schur basis.
    #[default]
    Bulk,
    /// One sparse inner product per partition.
    PerPartition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub fast_paths: bool,
    pub engine: Engine,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            fast_paths: true,
            engine: Engine::Bulk,
        }
    }
}

/// Multiplicities `⟨φ^(a^b), χ^λ⟩`. Only non-zero values are stored; every
/// other `λ` reads as 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    shape: FoulkesShape,
    entries: BTreeMap<Partition, BigUint>,
}

impl DecompositionTable {
    pub fn shape(&self) -> FoulkesShape {
        self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.degree()
    }

    pub fn multiplicity(&self, lambda: &Partition) -> BigUint {
        self.entries.get(lambda).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Constituents in descending lexicographic order of `λ`.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.entries.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ mult(λ) · dim χ^λ`.
    pub fn dimension_sum(&self) -> BigUint {
        self.entries().map(|(l, m)| m * dimension(l)).sum()
    }

    /// Rows for `rows` in the given order, zeros included.
    fn rows<'a>(&'a self, rows: Option<&'a [Partition]>) -> Vec<(&'a Partition, BigUint)> {
        match rows {
            Some(rows) => rows.iter().map(|l| (l, self.multiplicity(l))).collect(),
            None => self.entries().map(|(l, m)| (l, m.clone())).collect(),
        }
    }

    /// `{"a":2,"b":2,"entries":[{"lambda":"4","mult":1},…]}` over the
    /// constituents, or over `rows` when given.
    pub fn to_json(&self, rows: Option<&[Partition]>) -> String {
        #[derive(Serialize)]
        struct Row {
            lambda: String,
            mult: serde_json::Value,
        }
        #[derive(Serialize)]
        struct Doc {
            a: usize,
            b: usize,
            entries: Vec<Row>,
        }
        let entries = self
            .rows(rows)
            .into_iter()
            .map(|(l, m)| Row {
                lambda: l.to_string(),
                mult: big_to_json(&m),
            })
            .collect();
        serde_json::to_string(&Doc {
            a: self.shape.a,
            b: self.shape.b,
            entries,
        })
        .expect("serializable")
    }

    /// Columns `lambda,mult,dimension`.
    pub fn to_csv(&self, rows: Option<&[Partition]>) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["lambda", "mult", "dimension"]).expect("in-memory write");
        for (l, m) in self.rows(rows) {
            w.write_record([l.to_string(), m.to_string(), dimension(l).to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

pub(crate) fn big_to_json(v: &BigUint) -> serde_json::Value {
    match u64::try_from(v) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

/// Decomposes `φ^(a^b)` over every `λ ⊢ ab` accepted by `filter`.
pub fn decompose(s: FoulkesShape, filter: Option<&(dyn Fn(&Partition) -> bool + Sync)>) -> DecompositionTable {
    decompose_with(s, filter, DecomposeOptions::default(), &Control::none()).expect("no cancellation")
}

pub fn decompose_with(
    s: FoulkesShape,
    filter: Option<&(dyn Fn(&Partition) -> bool + Sync)>,
    opts: DecomposeOptions,
    control: &Control,
) -> Result<DecompositionTable> {
    let candidates: Vec<Partition> = enum_partitions(s.degree(), None, None)
        .into_iter()
        .filter(|l| filter.is_none_or(|f| f(l)))
        .collect();
    let entries = match opts.engine {
        Engine::Bulk => {
            let rows = opts.fast_paths.then_some(s.b);
            let expansion = plethysm_schur(s.a, s.b, rows, control)?;
            candidates
                .into_iter()
                .map(|l| {
                    let m = if opts.fast_paths && fast_path_zero(s, &l).is_some() {
                        BigUint::zero()
                    } else {
                        let c = expansion.coeff(&l);
                        c.to_biguint().ok_or_else(|| Error::NotAMultiplicity(c.to_string()))?
                    };
                    Ok((l, m))
                })
                .collect::<Result<BTreeMap<_, _>>>()?
        }
        Engine::PerPartition => {
            let mopts = MultiplicityOptions {
                fast_paths: opts.fast_paths,
            };
            candidates
                .into_par_iter()
                .map(|l| {
                    control.check()?;
                    let m = multiplicity_with(s, &l, mopts)?;
                    Ok((l, m))
                })
                .collect::<Result<BTreeMap<_, _>>>()?
        }
    };
    let entries = entries.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    Ok(DecompositionTable { shape: s, entries })
}
