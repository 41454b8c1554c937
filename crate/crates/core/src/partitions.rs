//! Integer partitions and the combinatorics built on them.
//!
//! A [`Partition`] is always stored in canonical form: strictly positive parts
//! in non-increasing order. The empty partition is the unique partition of 0.
//! Besides the usual operations (conjugation, dominance, Young-diagram
//! containment) this module provides the `[k:α]` hook coordinates, the bounded
//! families `P(r)_a^b` and horizontal-strip (Pieri) box adding.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition in canonical (non-increasing, strictly positive) form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                text: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts that may contain zeros; zeros are dropped.
    pub fn from_unsorted_lossy(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Self::from_sorted(parts)
    }

    /// Caller guarantees `parts` is non-increasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The rectangle `(a^b)`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![a; b])
    }

    /// The hook `(n-k, 1^k)`. Requires `k < n`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::OutOfRange {
                what: "leg",
                value: k,
                range: format!("0..{n}"),
            });
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Ok(Self::from_sorted(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts, `p(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based index; 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Part value → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn distinct_parts(&self) -> usize {
        self.multiplicities().len()
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Self {
        assert!(k >= 1);
        Self::from_sorted(self.parts.iter().map(|&p| p * k).collect())
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                out.push(self.parts[i]);
                i += 1;
            } else {
                out.push(other.parts[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.parts[i..]);
        out.extend_from_slice(&other.parts[j..]);
        Self::from_sorted(out)
    }

    pub fn conjugate(&self) -> Self {
        conjugate(self)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `part(,part)*` where `part` is `INT` or `INT^INT`, all integers ≥ 1
/// and no whitespace. Parts are re-sorted into canonical order. The literal
/// `()` denotes the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let fail = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if text == "()" {
        return Ok(Partition::empty());
    }
    if text.is_empty() {
        return Err(fail("empty input"));
    }
    let int = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(fail(&format!("{s:?} is not a positive integer")));
        }
        let v: usize = s.parse().map_err(|_| fail(&format!("{s:?} is too large")))?;
        if v == 0 {
            return Err(fail("zero is not allowed"));
        }
        Ok(v)
    };
    let mut parts = Vec::new();
    for term in text.split(',') {
        match term.split_once('^') {
            Some((base, exp)) => {
                let base = int(base)?;
                let exp = int(exp)?;
                parts.extend(std::iter::repeat_n(base, exp));
            }
            None => parts.push(int(term)?),
        }
    }
    Partition::new(parts)
}

/// `λ'_j = |{ i : λ_i ≥ j }|`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let cols = lambda.first();
    let parts = (1..=cols)
        .map(|j| lambda.parts.iter().take_while(|&&p| p >= j).count())
        .collect();
    Partition::from_sorted(parts)
}

/// Dominance order on partitions of the same weight.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.weight != mu.weight {
        return Err(Error::WeightMismatch {
            expected: lambda.weight,
            found: mu.weight,
        });
    }
    let upto = lambda.len().min(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for j in 0..upto {
        sl += lambda.parts[j];
        sm += mu.parts[j];
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `λ_j ≤ μ_j` for every row both partitions have. Rows beyond the shorter
/// partition are not compared, so `(1,1,1)` counts as a subpartition of
/// `(2,2)`. See [`contains_diagram`] for Young-diagram containment.
pub fn is_subpartition(lambda: &Partition, mu: &Partition) -> bool {
    lambda.parts.iter().zip(&mu.parts).all(|(l, m)| l <= m)
}

/// Young-diagram containment: `p(λ) ≤ p(μ)` and `λ_j ≤ μ_j` for all rows.
pub fn contains_diagram(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && is_subpartition(inner, outer)
}

/// Leg length `k` if `λ = (n-k, 1^k)`.
pub fn hook_leg(lambda: &Partition) -> Result<Option<usize>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("leg length"));
    }
    if lambda.part(2) > 1 {
        return Ok(None);
    }
    Ok(Some(lambda.len() - 1))
}

/// The `[k:α]` coordinates of a partition of `total`: a first row, a column of
/// `k` boxes below it, and the inside-partition `α` shifted one column right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookCoordinates {
    total: usize,
    k: usize,
    inside: Partition,
}

impl HookCoordinates {
    /// Validates `t ≤ k` and `total - k - m ≥ α₁ + 1`.
    pub fn new(total: usize, k: usize, inside: Partition) -> Result<Self> {
        if inside.len() > k {
            return Err(Error::HookCoordinates(format!(
                "inside-partition {inside} has {} parts, more than k = {k}",
                inside.len()
            )));
        }
        let used = k + inside.weight();
        if total < used || total - used < inside.first() + 1 {
            return Err(Error::HookCoordinates(format!(
                "first row {} is shorter than {} (total {total}, k {k}, inside {inside})",
                total as i64 - used as i64,
                inside.first() + 1
            )));
        }
        Ok(Self { total, k, inside })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Leg: number of rows below the first.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn inside(&self) -> &Partition {
        &self.inside
    }

    /// Number of parts `t` of the inside-partition.
    pub fn t(&self) -> usize {
        self.inside.len()
    }

    /// `m`, the weight of the inside-partition.
    pub fn inside_weight(&self) -> usize {
        self.inside.weight()
    }

    /// `α₂ + … + α_t`.
    pub fn tail_weight(&self) -> usize {
        self.inside.weight() - self.inside.first()
    }

    pub fn to_partition(&self) -> Partition {
        from_hook_coords(self)
    }
}

impl fmt::Display for HookCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.k, self.inside)
    }
}

pub fn to_hook_coords(lambda: &Partition) -> Result<HookCoordinates> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("hook coordinates"));
    }
    let k = lambda.len() - 1;
    let inside = Partition::from_sorted(
        lambda.parts[1..]
            .iter()
            .filter(|&&p| p >= 2)
            .map(|&p| p - 1)
            .collect(),
    );
    Ok(HookCoordinates {
        total: lambda.weight,
        k,
        inside,
    })
}

/// `(total − k − m, α₁+1, …, α_t+1, 1^{k−t})`.
pub fn from_hook_coords(h: &HookCoordinates) -> Partition {
    let mut parts = Vec::with_capacity(h.k + 1);
    parts.push(h.total - h.k - h.inside.weight());
    parts.extend(h.inside.parts.iter().map(|&p| p + 1));
    parts.extend(std::iter::repeat_n(1, h.k - h.inside.len()));
    Partition::from_sorted(parts)
}

/// All partitions of `n` with at most `max_parts` parts, each at most
/// `max_part`, in descending lexicographic order.
pub fn enum_partitions(n: usize, max_parts: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let max_parts = max_parts.unwrap_or(n);
    let max_part = max_part.unwrap_or(n).min(n);
    fill(n, max_part, max_parts, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max_part: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if parts_left == 0 || max_part * parts_left < rest {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, parts_left - 1, cur, out);
        cur.pop();
    }
}

/// `P(r)_a^b`: partitions of `r` with at most `b` parts and first part at
/// most `a`, in descending lexicographic order.
pub fn enum_p(r: usize, a: usize, b: usize) -> Vec<Partition> {
    enum_partitions(r, Some(b), Some(a))
}

/// `|P(r)_a^b|` by a bounded-partition recurrence over
/// (remaining weight, parts still allowed, largest part allowed).
pub fn count_p(r: usize, a: usize, b: usize) -> BigUint {
    if r > a.saturating_mul(b) {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    count_bounded(r, b, a, &mut memo)
}

fn count_bounded(
    rest: usize,
    parts_left: usize,
    max_part: usize,
    memo: &mut HashMap<(usize, usize, usize), BigUint>,
) -> BigUint {
    if rest == 0 {
        return BigUint::one();
    }
    if parts_left == 0 || max_part == 0 || max_part * parts_left < rest {
        return BigUint::zero();
    }
    let max_part = max_part.min(rest);
    if let Some(v) = memo.get(&(rest, parts_left, max_part)) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for p in 1..=max_part {
        total += count_bounded(rest - p, parts_left - 1, p, memo);
    }
    memo.insert((rest, parts_left, max_part), total.clone());
    total
}

/// Partitions obtained from `λ` by adding `k` boxes, no two in the same
/// column (horizontal strips).
pub fn pieri_add(lambda: &Partition, k: usize) -> BTreeSet<Partition> {
    let rows = lambda.len() + 1;
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(rows);
    strip_rows(lambda, 0, k, &mut cur, &mut out);
    out
}

fn strip_rows(
    lambda: &Partition,
    row: usize,
    rest: usize,
    cur: &mut Vec<usize>,
    out: &mut BTreeSet<Partition>,
) {
    if row == lambda.len() + 1 || rest == 0 {
        if rest == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda.parts[row.min(lambda.len())..]);
            out.insert(Partition::from_unsorted_lossy(parts));
        }
        return;
    }
    let base = lambda.part(row + 1);
    // Row i may grow up to the old length of row i-1.
    let cap = if row == 0 { rest } else { (lambda.part(row) - base).min(rest) };
    for add in (0..=cap).rev() {
        cur.push(base + add);
        strip_rows(lambda, row + 1, rest - add, cur, out);
        cur.pop();
    }
}

/// Centralizer order `z_λ = ∏ i^{m_i} · m_i!`.
pub fn z_order(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in lambda.multiplicities() {
        for j in 1..=mult {
            z *= BigUint::from(part) * BigUint::from(j);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("7,3,1,1").parts(), &[7, 3, 1, 1]);
        assert_eq!(p("3^10").parts(), &[3; 10]);
        assert_eq!(p("1,3").parts(), &[3, 1]);
        assert_eq!(p("2^2,5").parts(), &[5, 2, 2]);
        assert_eq!(p("7,3,1,1").to_string(), "7,3,1,1");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "0", "3,0", "3^0", "a", "3,,1", "3 ,1", "-1", "2^", "^2", "3^2^1"] {
            assert!(parse_partition(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p("3,1")), p("2,1,1"));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p("4,2,1")), p("3,2,1,1"));
    }

    #[test]
    fn conjugation_is_an_involution_and_swaps_first_row_and_length() {
        for n in 0..=18 {
            for lambda in enum_partitions(n, None, None) {
                let c = conjugate(&lambda);
                assert_eq!(c.weight(), n);
                assert_eq!(conjugate(&c), lambda);
                assert_eq!(lambda.first(), c.len());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("4"), &p("2,2")).unwrap());
        assert!(dominates(&p("3,1"), &p("2,2")).unwrap());
        assert!(!dominates(&p("2,2,2"), &p("3,2,1")).unwrap());
        assert!(dominates(&p("3"), &p("2,1,1")).is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=12 {
            let all = enum_partitions(n, None, None);
            for x in &all {
                assert!(dominates(x, x).unwrap());
                for y in &all {
                    if x != y && dominates(x, y).unwrap() {
                        assert!(!dominates(y, x).unwrap(), "{x:?} {y:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn subpartition_variants() {
        assert!(is_subpartition(&p("2,1"), &p("3,2")));
        assert!(!is_subpartition(&p("4"), &p("3,3")));
        assert!(is_subpartition(&p("1,1,1"), &p("2,2")));
        assert!(!contains_diagram(&p("2,2"), &p("1,1,1")));
        assert!(contains_diagram(&p("3,2"), &p("2,1")));
    }

    #[test]
    fn hook_legs() {
        assert_eq!(hook_leg(&p("5,1,1")).unwrap(), Some(2));
        assert_eq!(hook_leg(&p("4")).unwrap(), Some(0));
        assert_eq!(hook_leg(&p("3,2")).unwrap(), None);
        assert!(hook_leg(&Partition::empty()).is_err());
    }

    #[test]
    fn hook_coordinate_examples() {
        let h = to_hook_coords(&p("7,3,1,1")).unwrap();
        assert_eq!((h.k(), h.inside().clone(), h.total()), (3, p("2"), 12));
        let h = to_hook_coords(&p("9")).unwrap();
        assert_eq!((h.k(), h.inside().is_empty()), (0, true));
        let h = to_hook_coords(&p("23,4,1,1,1")).unwrap();
        assert_eq!((h.k(), h.inside().clone(), h.tail_weight()), (4, p("3"), 0));

        let h = HookCoordinates::new(12, 3, p("2")).unwrap();
        assert_eq!(from_hook_coords(&h), p("7,3,1,1"));
        assert_eq!(from_hook_coords(&HookCoordinates::new(5, 0, Partition::empty()).unwrap()), p("5"));
        assert_eq!(from_hook_coords(&HookCoordinates::new(10, 3, p("3")).unwrap()), p("4,4,1,1"));
        assert!(HookCoordinates::new(9, 3, p("3")).is_err());
        assert!(HookCoordinates::new(20, 1, p("1,1")).is_err());
        assert!(to_hook_coords(&Partition::empty()).is_err());
    }

    #[test]
    fn hook_coordinates_round_trip() {
        for n in 1..=20 {
            for lambda in enum_partitions(n, None, None) {
                let h = to_hook_coords(&lambda).unwrap();
                let rebuilt = HookCoordinates::new(n, h.k(), h.inside().clone()).unwrap();
                assert_eq!(rebuilt, h);
                assert_eq!(from_hook_coords(&h), lambda);
            }
        }
    }

    #[test]
    fn bounded_families() {
        assert_eq!(enum_p(2, 2, 2), vec![p("2"), p("1,1")]);
        assert_eq!(enum_p(0, 3, 3), vec![Partition::empty()]);
        assert_eq!(enum_p(3, 1, 3), vec![p("1,1,1")]);
        assert!(enum_p(7, 2, 3).is_empty());
        assert_eq!(count_p(2, 2, 2), BigUint::from(2u32));
        assert_eq!(count_p(7, 2, 3), BigUint::zero());
        assert_eq!(count_p(4, 2, 2), BigUint::from(1u32));
    }

    #[test]
    fn count_matches_enumeration_and_is_symmetric() {
        for a in 1..=20 {
            for b in 1..=20 / a {
                for r in 0..=a * b {
                    let n = enum_p(r, a, b).len();
                    assert_eq!(count_p(r, a, b), BigUint::from(n));
                    assert_eq!(n, enum_p(r, b, a).len());
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        let s: Vec<_> = pieri_add(&p("2"), 1).into_iter().collect();
        assert_eq!(s, vec![p("2,1"), p("3")]);
        let s: Vec<_> = pieri_add(&Partition::empty(), 5).into_iter().collect();
        assert_eq!(s, vec![p("5")]);
        let s: BTreeSet<_> = pieri_add(&p("2,1"), 2);
        let want: BTreeSet<_> = ["4,1", "3,2", "3,1,1", "2,2,1"].iter().map(|t| p(t)).collect();
        assert_eq!(s, want);
        assert_eq!(pieri_add(&p("2,1"), 0).into_iter().collect::<Vec<_>>(), vec![p("2,1")]);
    }

    #[test]
    fn adding_one_box() {
        for n in 0..=12 {
            for lambda in enum_partitions(n, None, None) {
                let grown = pieri_add(&lambda, 1);
                assert_eq!(grown.len(), lambda.distinct_parts() + 1);
                for g in grown {
                    assert_eq!(g.weight(), n + 1);
                    assert!(contains_diagram(&g, &lambda));
                }
            }
        }
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_order(&p("1,1,1,1")), BigUint::from(24u32));
        assert_eq!(z_order(&p("7")), BigUint::from(7u32));
        assert_eq!(z_order(&p("2,1,1")), BigUint::from(4u32));
        assert_eq!(z_order(&Partition::empty()), BigUint::one());
        // Class sizes sum to n!.
        for n in 0..=10 {
            let total: num_rational::BigRational = enum_partitions(n, None, None)
                .iter()
                .map(|l| num_rational::BigRational::new(1.into(), z_order(l).into()))
                .sum();
            assert!(total.is_one());
        }
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(enum_partitions(4, None, None).len(), 5);
        assert_eq!(enum_partitions(0, None, None), vec![Partition::empty()]);
        let bounded = enum_partitions(30, Some(10), None);
        assert_eq!(BigUint::from(bounded.len()), count_p(30, 30, 10));
        let all = enum_partitions(8, None, None);
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert_eq!(all.len(), 22);
    }
}
