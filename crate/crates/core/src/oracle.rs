//! Brute-force ground truth at small scale.
//!
//! Everything here works on explicit set partitions and explicit permutations:
//! no symmetric functions, no characters beyond fixed-point counting. It is
//! deliberately naive and slow, and it is what the algebraic routes are
//! checked against.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::partitions::{enum_partitions, Partition};

/// Default limit on the number of points an enumeration may use.
pub const DEFAULT_CAP: usize = 12;

/// A set partition of `{1..n}`, each block a bitmask over 0-based points,
/// blocks sorted by their least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl SetPartition {
    /// Blocks are given as lists of 1-based points.
    pub fn new(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        let mut seen = 0u64;
        for block in blocks {
            let mut mask = 0u64;
            for &x in *block {
                if x == 0 || x > n || n > 64 {
                    return Err(Error::Shape(format!("point {x} is outside 1..={n}")));
                }
                let bit = 1u64 << (x - 1);
                if seen & bit != 0 {
                    return Err(Error::Shape(format!("point {x} appears twice")));
                }
                seen |= bit;
                mask |= bit;
            }
            if mask == 0 {
                return Err(Error::Shape("empty block".into()));
            }
            masks.push(mask);
        }
        if seen != full_mask(n) {
            return Err(Error::Shape("blocks do not cover 1..n".into()));
        }
        Ok(Self::from_masks(n, masks))
    }

    fn from_masks(n: usize, mut blocks: Vec<u64>) -> Self {
        blocks.sort_unstable_by_key(|m| m.trailing_zeros());
        Self { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks as sorted lists of 1-based points.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&m| points(m)).collect()
    }

    pub fn block_sizes(&self) -> Partition {
        Partition::from_unsorted_lossy(self.blocks.iter().map(|m| m.count_ones() as usize))
    }

    /// Image under a permutation of 0-based points.
    fn permuted(&self, perm: &[usize]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|&m| {
                let mut image = 0u64;
                for x in points0(m) {
                    image |= 1u64 << perm[x];
                }
                image
            })
            .collect();
        Self::from_masks(self.n, blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n < 10 { "" } else { "," };
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn points0(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1u64 << i) != 0)
}

fn points(mask: u64) -> Vec<usize> {
    points0(mask).map(|i| i + 1).collect()
}

/// All set partitions of `{1..Σ sizes}` whose block sizes are the multiset
/// `sizes`, in canonical order. Refuses more than [`DEFAULT_CAP`] points.
pub fn enum_omega(sizes: &[usize]) -> Result<Vec<SetPartition>> {
    enum_omega_capped(sizes, DEFAULT_CAP)
}

pub fn enum_omega_capped(sizes: &[usize], cap: usize) -> Result<Vec<SetPartition>> {
    let n: usize = sizes.iter().sum();
    if n > cap || n > 64 {
        return Err(Error::CapExceeded { n, cap: cap.min(64) });
    }
    if sizes.contains(&0) {
        return Err(Error::Shape("block sizes must be positive".into()));
    }
    let mut remaining: BTreeMap<usize, usize> = BTreeMap::new();
    for &s in sizes {
        *remaining.entry(s).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    place(full_mask(n), &mut remaining, &mut blocks, &mut out, n);
    out.sort();
    Ok(out)
}

// The least unused point opens a new block; choose its size and companions.
fn place(
    free: u64,
    remaining: &mut BTreeMap<usize, usize>,
    blocks: &mut Vec<u64>,
    out: &mut Vec<SetPartition>,
    n: usize,
) {
    if free == 0 {
        out.push(SetPartition::from_masks(n, blocks.clone()));
        return;
    }
    let first = free.trailing_zeros() as usize;
    let rest: Vec<usize> = points0(free).filter(|&x| x != first).collect();
    let sizes: Vec<usize> = remaining.iter().filter(|(_, &c)| c > 0).map(|(&s, _)| s).collect();
    for size in sizes {
        if size - 1 > rest.len() {
            continue;
        }
        *remaining.get_mut(&size).expect("present") -= 1;
        for combo in combinations(&rest, size - 1) {
            let mask = combo.iter().fold(1u64 << first, |m, &x| m | (1u64 << x));
            blocks.push(mask);
            place(free & !mask, remaining, blocks, out, n);
            blocks.pop();
        }
        *remaining.get_mut(&size).expect("present") += 1;
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

/// The permutation of cycle type `μ` whose cycles fill `0..n` consecutively,
/// longest first.
pub fn canonical_permutation(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.weight());
    let mut start = 0;
    for &len in mu.parts() {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

/// Number of set partitions in `omega` fixed by a permutation of cycle type `μ`.
pub fn fixed_count(omega: &[SetPartition], mu: &Partition) -> Result<usize> {
    if let Some(sp) = omega.iter().find(|sp| sp.n != mu.weight()) {
        return Err(Error::WeightMismatch {
            expected: sp.n,
            found: mu.weight(),
        });
    }
    let perm = canonical_permutation(mu);
    Ok(omega.iter().filter(|sp| sp.permuted(&perm) == **sp).count())
}

/// Permutation character of `S_ab` on `Ω^(a^b)`, by counting fixed points.
pub fn brute_foulkes_char(a: usize, b: usize) -> Result<ClassFunction> {
    let omega = enum_omega(&vec![a; b])?;
    let n = a * b;
    let mut cf = ClassFunction::zero(n);
    for mu in enum_partitions(n, None, None) {
        let fixed = fixed_count(&omega, &mu)?;
        cf.set(mu, BigInt::from(fixed));
    }
    Ok(cf)
}

fn intersection_partition(sp: &SetPartition, r: usize) -> Partition {
    let window = full_mask(r);
    Partition::from_unsorted_lossy(sp.blocks.iter().map(|m| (m & window).count_ones() as usize))
}

/// The partition underlying the composition `(|{1..r} ∩ A_i|)_i`.
pub fn linked_partition(sp: &SetPartition, r: usize) -> Result<Partition> {
    if r == 0 || r >= sp.n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: format!("1..{}", sp.n),
        });
    }
    Ok(intersection_partition(sp, r))
}

// Generators of Sym(lo..hi): a transposition and a full cycle.
fn symmetric_generators(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    if hi - lo < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(lo, lo + 1);
    let mut cycle: Vec<usize> = (0..n).collect();
    for x in lo..hi {
        cycle[x] = if x + 1 == hi { lo } else { x + 1 };
    }
    vec![swap, cycle]
}

fn orbits(items: &[SetPartition], generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let index: HashMap<&SetPartition, usize> = items.iter().enumerate().map(|(i, sp)| (sp, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut out = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let image = items[i].permuted(g);
                let j = *index.get(&image).expect("the set is closed under the group");
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                    queue.push_back(j);
                }
            }
        }
        out.push(orbit);
    }
    out
}

/// Orbits of `S_r × S_{ab−r}` on `Ω^(a^b)`, found by closing under
/// generators, each reported with the intersection partition of its members
/// (checked to be constant along the orbit) and its size.
pub fn restriction_orbits(a: usize, b: usize, r: usize) -> Result<Vec<(Partition, usize)>> {
    let n = a * b;
    if r >= n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: format!("0..{n}"),
        });
    }
    let omega = enum_omega(&vec![a; b])?;
    let mut gens = symmetric_generators(n, 0, r);
    gens.extend(symmetric_generators(n, r, n));
    let mut out = Vec::new();
    for orbit in orbits(&omega, &gens) {
        let key = intersection_partition(&omega[orbit[0]], r);
        if orbit.iter().any(|&i| intersection_partition(&omega[i], r) != key) {
            return Err(Error::Shape(format!("orbit of {} mixes linked partitions", omega[orbit[0]])));
        }
        out.push((key, orbit.len()));
    }
    Ok(out)
}

/// Groups `Ω^(a^b)` by linked partition (`()` when `r = 0`).
pub fn brute_restriction_orbits(a: usize, b: usize, r: usize) -> Result<BTreeMap<Partition, usize>> {
    let n = a * b;
    if r >= n {
        return Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: format!("0..{n}"),
        });
    }
    let mut groups = BTreeMap::new();
    for sp in enum_omega(&vec![a; b])? {
        *groups.entry(intersection_partition(&sp, r)).or_insert(0) += 1;
    }
    Ok(groups)
}

/// Counts the `S_β`-orbits on the set partitions linked to `λ` and compares
/// with `|Ω^η|`, `η = (a^{b−r}, a−λ_r, …, a−λ_1)` with zero parts dropped, the
/// set partitions of the remaining `ab − β` points.
pub fn verify_trivial_quotient(a: usize, b: usize, beta: usize, lambda: &Partition) -> Result<bool> {
    let n = a * b;
    if lambda.weight() != beta || lambda.len() > b || lambda.first() > a || beta >= n {
        return Err(Error::Shape(format!("{lambda:?} is not in P({beta}) for ({a}^{b})")));
    }
    let linked: Vec<SetPartition> = enum_omega(&vec![a; b])?
        .into_iter()
        .filter(|sp| intersection_partition(sp, beta) == *lambda)
        .collect();
    let gens = symmetric_generators(n, 0, beta);
    let orbit_count = orbits(&linked, &gens).len();

    let mut eta: Vec<usize> = vec![a; b - lambda.len()];
    eta.extend(lambda.parts().iter().map(|&p| a - p).filter(|&s| s > 0));
    let quotient = enum_omega(&eta)?.len();
    Ok(orbit_count == quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let pairs = enum_omega(&[2, 2]).unwrap();
        assert_eq!(pairs.len(), 3);
        assert_eq!(pairs.iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["12|34", "13|24", "14|23"]);
        assert_eq!(enum_omega(&[5]).unwrap().len(), 1);
        let mixed = enum_omega(&[2, 1]).unwrap();
        assert_eq!(mixed.iter().map(|s| s.to_string()).collect::<Vec<_>>(), ["1|23", "12|3", "13|2"]);
        assert!(matches!(enum_omega(&[3; 5]), Err(Error::CapExceeded { .. })));
        assert_eq!(enum_omega_capped(&[5, 5, 5], 15).unwrap().len(), 126126);
    }

    #[test]
    fn display_uses_commas_from_ten_points() {
        let sp = SetPartition::new(10, &[&[1, 10], &[2, 3, 4, 5, 6, 7, 8, 9]]).unwrap();
        assert_eq!(sp.to_string(), "1,10|2,3,4,5,6,7,8,9");
        assert!(SetPartition::new(3, &[&[1, 2]]).is_err());
        assert!(SetPartition::new(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn fixed_points() {
        let omega = enum_omega(&[2, 2]).unwrap();
        assert_eq!(fixed_count(&omega, &p("1,1,1,1")).unwrap(), 3);
        assert_eq!(fixed_count(&omega, &p("2,2")).unwrap(), 3);
        assert_eq!(fixed_count(&omega, &p("3,1")).unwrap(), 0);
        assert!(fixed_count(&omega, &p("3")).is_err());
    }

    #[test]
    fn brute_characters() {
        let cf = brute_foulkes_char(2, 2).unwrap();
        let vals: Vec<_> = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"]
            .iter()
            .map(|c| cf.value(&p(c)))
            .collect();
        assert_eq!(vals, [3, 1, 3, 0, 1].map(BigInt::from));
        assert_eq!(brute_foulkes_char(1, 5).unwrap(), ClassFunction::ones(5));
        assert_eq!(brute_foulkes_char(3, 2).unwrap().value(&Partition::column(6)), BigInt::from(10));
    }

    #[test]
    fn linked_partitions() {
        let sp = SetPartition::new(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(linked_partition(&sp, 2).unwrap(), p("2"));
        let sp = SetPartition::new(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(linked_partition(&sp, 2).unwrap(), p("1,1"));
        let sp = SetPartition::new(6, &[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        assert_eq!(linked_partition(&sp, 4).unwrap(), p("3,1"));
        assert!(linked_partition(&sp, 0).is_err());
        assert!(linked_partition(&sp, 6).is_err());
    }

    #[test]
    fn restriction_examples() {
        let g = brute_restriction_orbits(2, 2, 2).unwrap();
        assert_eq!(g, BTreeMap::from([(p("2"), 1), (p("1,1"), 2)]));
        let g = brute_restriction_orbits(2, 2, 1).unwrap();
        assert_eq!(g, BTreeMap::from([(p("1"), 3)]));
        let g = brute_restriction_orbits(2, 3, 0).unwrap();
        assert_eq!(g, BTreeMap::from([(Partition::empty(), 15)]));
        let mut orbits = restriction_orbits(2, 2, 2).unwrap();
        orbits.sort();
        assert_eq!(orbits, vec![(p("1,1"), 2), (p("2"), 1)]);
    }

    #[test]
    fn trivial_quotients() {
        assert!(verify_trivial_quotient(2, 2, 2, &p("1,1")).unwrap());
        assert!(verify_trivial_quotient(2, 2, 2, &p("2")).unwrap());
        assert!(verify_trivial_quotient(2, 3, 1, &p("1")).unwrap());
        assert!(verify_trivial_quotient(2, 2, 2, &p("3")).is_err());
    }
}
