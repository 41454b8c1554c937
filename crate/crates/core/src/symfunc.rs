//! Homogeneous symmetric functions in the power-sum basis.
//!
//! Every symmetric function the crate touches (complete and elementary
//! generators, Schur functions, plethysms `h_b[h_a]` and their products) is
//! stored as a sparse map `λ ↦ c_λ` meaning `Σ c_λ p_λ`, with exact rational
//! coefficients. In this basis multiplication is multiset union of keys, the
//! power-sum plethysm `p_k[·]` scales every key by `k`, and the Hall inner
//! product is diagonal with weights `z_λ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use crate::characters::{mn_char, ClassFunction};
use crate::error::{Error, Result};
use crate::partitions::{enum_partitions, z_order, Partition};

/// `Σ_λ c_λ p_λ`, homogeneous of degree `n`, with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PSeries {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl PSeries {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant `1` in degree 0.
    pub fn one() -> Self {
        Self::power(&Partition::empty())
    }

    /// The single power sum `p_λ`.
    pub fn power(lambda: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda.clone(), BigRational::one());
        Self {
            degree: lambda.weight(),
            coeffs,
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Result<Self> {
        let mut s = Self::zero(degree);
        for (lambda, c) in terms {
            if lambda.weight() != degree {
                return Err(Error::WeightMismatch {
                    expected: degree,
                    found: lambda.weight(),
                });
            }
            s.add_term(lambda, c);
        }
        Ok(s)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    /// Cycle types with a non-zero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }
}

/// `h_n = Σ_{λ⊢n} p_λ / z_λ`.
pub fn h_series(n: usize) -> PSeries {
    let coeffs = enum_partitions(n, None, None)
        .into_iter()
        .map(|l| {
            let z = BigInt::from(z_order(&l));
            (l, BigRational::new(BigInt::one(), z))
        })
        .collect();
    PSeries { degree: n, coeffs }
}

/// `e_n = Σ_{λ⊢n} (−1)^{n−p(λ)} p_λ / z_λ`.
pub fn e_series(n: usize) -> PSeries {
    let coeffs = enum_partitions(n, None, None)
        .into_iter()
        .map(|l| {
            let z = BigInt::from(z_order(&l));
            let sign = if (n - l.len()).is_multiple_of(2) { 1 } else { -1 };
            (l, BigRational::new(BigInt::from(sign), z))
        })
        .collect();
    PSeries { degree: n, coeffs }
}

/// `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
pub fn schur_series(lambda: &Partition) -> PSeries {
    let n = lambda.weight();
    let coeffs = enum_partitions(n, None, None)
        .into_iter()
        .filter_map(|mu| {
            let chi = mn_char(lambda, &mu).expect("weights agree");
            if chi.is_zero() {
                return None;
            }
            let z = BigInt::from(z_order(&mu));
            Some((mu, BigRational::new(chi, z)))
        })
        .collect();
    PSeries { degree: n, coeffs }
}

pub fn multiply(f: &PSeries, g: &PSeries) -> PSeries {
    let mut out = PSeries::zero(f.degree + g.degree);
    for (lf, cf) in &f.coeffs {
        for (lg, cg) in &g.coeffs {
            out.add_term(lf.union(lg), cf * cg);
        }
    }
    out
}

/// `p_k[f]`: every key `λ` becomes `kλ`.
pub fn plethysm_power(k: usize, f: &PSeries) -> PSeries {
    assert!(k >= 1, "plethysm_power needs k ≥ 1");
    PSeries {
        degree: k * f.degree,
        coeffs: f.coeffs.iter().map(|(l, c)| (l.scaled(k), c.clone())).collect(),
    }
}

type NewtonPrefix = Arc<Vec<PSeries>>;

static PLETHYSM_CACHE: Lazy<Mutex<HashMap<PSeries, NewtonPrefix>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `h_b[f]` via `g_b = (1/b) Σ_{k=1..b} p_k[f] · g_{b−k}`, `g_0 = 1`.
///
/// The partial results `g_0..g_b` are memoized per `f`. Concurrent callers may
/// compute the same prefix twice; whichever finishes last wins, and both
/// values are identical.
pub fn plethysm_h(b: usize, f: &PSeries) -> PSeries {
    newton_prefix(b, f)[b].clone()
}

fn newton_prefix(b: usize, f: &PSeries) -> NewtonPrefix {
    let cached = PLETHYSM_CACHE.lock().get(f).cloned();
    if let Some(prefix) = &cached {
        if prefix.len() > b {
            return prefix.clone();
        }
    }
    let mut terms: Vec<PSeries> = match cached {
        Some(prefix) => prefix.as_ref().clone(),
        None => vec![PSeries::one()],
    };
    let powers: Vec<PSeries> = (1..=b).map(|k| plethysm_power(k, f)).collect();
    for j in terms.len()..=b {
        let mut acc = PSeries::zero(j * f.degree);
        for k in 1..=j {
            let prod = multiply(&powers[k - 1], &terms[j - k]);
            for (l, c) in prod.coeffs {
                acc.add_term(l, c);
            }
        }
        terms.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(j))));
    }
    let prefix = Arc::new(terms);
    let mut cache = PLETHYSM_CACHE.lock();
    let keep = match cache.get(f) {
        Some(existing) if existing.len() >= prefix.len() => existing.clone(),
        _ => {
            cache.insert(f.clone(), prefix.clone());
            prefix
        }
    };
    keep
}

/// Hall inner product `Σ_λ z_λ f_λ g_λ`.
pub fn inner(f: &PSeries, g: &PSeries) -> Result<BigRational> {
    if f.degree != g.degree {
        return Err(Error::DegreeMismatch {
            left: f.degree,
            right: g.degree,
        });
    }
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut total = BigRational::zero();
    for (l, c) in &small.coeffs {
        if let Some(d) = large.coeffs.get(l) {
            total += c * d * BigRational::from_integer(BigInt::from(z_order(l)));
        }
    }
    Ok(total)
}

/// Class-function values `χ(μ) = z_μ · c_μ`; fails unless every value is an integer.
pub fn to_class_function(f: &PSeries) -> Result<ClassFunction> {
    let mut cf = ClassFunction::zero(f.degree);
    for (l, c) in &f.coeffs {
        let v = c * BigRational::from_integer(BigInt::from(z_order(l)));
        if !v.is_integer() {
            return Err(Error::NonIntegral(l.to_string()));
        }
        cf.set(l.clone(), v.to_integer());
    }
    Ok(cf)
}

pub fn from_class_function(c: &ClassFunction) -> PSeries {
    let coeffs = c
        .values()
        .map(|(l, v)| (l.clone(), BigRational::new(v.clone(), BigInt::from(z_order(l)))))
        .collect();
    PSeries {
        degree: c.degree(),
        coeffs,
    }
}

/// Converts an integer-valued rational into a non-negative multiplicity.
pub(crate) fn as_multiplicity(q: &BigRational) -> Result<BigUint> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotAMultiplicity(q.to_string()));
    }
    Ok(q.to_integer().to_biguint().expect("non-negative"))
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    mu: String,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct WireSeries {
    degree: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for PSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WireSeries {
            degree: self.degree,
            terms: self
                .coeffs
                .iter()
                .rev()
                .map(|(l, c)| WireTerm {
                    mu: if l.is_empty() { String::new() } else { l.to_string() },
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = WireSeries::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for t in wire.terms {
            let mu = if t.mu.is_empty() {
                Partition::empty()
            } else {
                t.mu.parse().map_err(D::Error::custom)?
            };
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((mu, BigRational::new(num, den)));
        }
        PSeries::from_terms(wire.degree, terms).map_err(D::Error::custom)
    }
}
