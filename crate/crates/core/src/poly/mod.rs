//! Univariate polynomials over `Q` and `F_p`: gcd, resultants,
//! discriminants, Cantor-Zassenhaus factorization and irreducibility
//! certificates.

mod fp;
mod q;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use fp::PolyFp;
pub use q::{resultant, PolyQ};

use crate::exact::primes_from;
use crate::{Error, Result};

/// Default seed for the equal-degree splitting step.
pub const DEFAULT_SPLIT_SEED: u64 = 0x5eed;

/// Number of good primes tried before an irreducibility check gives up.
pub const DEFAULT_PRIME_BUDGET: usize = 200;

/// Sorted (nonincreasing) multiset of irreducible factor degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreePattern(Vec<usize>);

impl DegreePattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self(degrees)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Checks the good-prime conditions and returns the reduction of the
/// primitive integer multiple of `f` modulo `p`.
pub fn good_reduction(f: &PolyQ, p: u64) -> Result<PolyFp> {
    let fp = f.reduce_mod(p)?;
    if fp.degree() != f.degree() {
        return Err(Error::BadPrime { p, reason: "divides the leading coefficient" });
    }
    if !fp.is_squarefree() {
        return Err(Error::BadPrime { p, reason: "reduction is not squarefree" });
    }
    Ok(fp)
}

pub fn is_good_prime(f: &PolyQ, p: u64) -> bool {
    good_reduction(f, p).is_ok()
}

/// Factor-degree pattern of `f mod p` using the default splitting seed.
pub fn factor_degrees_mod_p(f: &PolyQ, p: u64) -> Result<DegreePattern> {
    factor_degrees_mod_p_seeded(f, p, DEFAULT_SPLIT_SEED)
}

pub fn factor_degrees_mod_p_seeded(f: &PolyQ, p: u64, seed: u64) -> Result<DegreePattern> {
    let fp = good_reduction(f, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17));
    let factors = fp.factor_squarefree(&mut rng);
    Ok(DegreePattern::new(factors.iter().map(|g| g.degree().unwrap_or(0)).collect()))
}

/// Monic irreducible factors of `f mod p` (full-factorization mode).
pub fn factor_mod_p(f: &PolyQ, p: u64, seed: u64) -> Result<Vec<PolyFp>> {
    let fp = good_reduction(f, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(fp.factor_squarefree(&mut rng))
}

/// Outcome of an irreducibility check over `Q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Irreducibility {
    /// Good primes whose factor-degree patterns leave no room for a
    /// rational factor of any proper degree.
    Certified { primes: Vec<u64> },
    /// An exact rational root exhibits a linear factor.
    Reducible { rational_root: String },
    Inconclusive { primes_tried: usize },
}

impl Irreducibility {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

/// Degrees `1..n` reachable as sums of a sub-multiset of `parts`.
pub fn proper_subset_sums(parts: &[usize], n: usize) -> BTreeSet<usize> {
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for &part in parts {
        for s in (part..=n).rev() {
            sums[s] |= sums[s - part];
        }
    }
    (1..n).filter(|&s| sums[s]).collect()
}

/// Factor degrees of a squarefree `f mod p` from the distinct-degree split.
fn ddf_pattern(fp: &PolyFp) -> Vec<usize> {
    let mut parts = Vec::new();
    for (d, g) in fp.distinct_degree() {
        let total = g.degree().unwrap_or(0);
        parts.extend(std::iter::repeat(d).take(total / d));
    }
    parts
}

pub fn irreducible_over_q(f: &PolyQ) -> Irreducibility {
    irreducible_over_q_with_budget(f, DEFAULT_PRIME_BUDGET)
}

/// Certificate search over good primes.
///
/// A rational factor of degree `d` reduces to a product of irreducible
/// factors mod every good prime, so `d` must be a subset sum of every
/// observed pattern. Once no proper degree survives, `f` is irreducible.
/// Failing that, an exact rational root is a reducibility witness.
pub fn irreducible_over_q_with_budget(f: &PolyQ, budget: usize) -> Irreducibility {
    let n = f.degree().unwrap_or(0);
    let mut possible: BTreeSet<usize> = (1..n).collect();
    let mut witnesses = Vec::new();
    let mut tried = 0;
    if n >= 1 && f.is_squarefree() {
        // bounded by the budget; a polynomial whose bad primes are all small
        // exhausts the budget quickly
        for p in primes_from(2).take(budget * 20) {
            if possible.is_empty() {
                return Irreducibility::Certified { primes: witnesses };
            }
            if tried == budget {
                break;
            }
            let Ok(fp) = good_reduction(f, p) else { continue };
            tried += 1;
            let sums = proper_subset_sums(&ddf_pattern(&fp), n);
            let before = possible.len();
            possible.retain(|d| sums.contains(d));
            if possible.len() < before {
                witnesses.push(p);
            }
        }
        if possible.is_empty() {
            return Irreducibility::Certified { primes: witnesses };
        }
    }
    if let Some(roots) = f.rational_roots() {
        if let Some(r) = roots.first() {
            return Irreducibility::Reducible { rational_root: crate::exact::format_rational(r) };
        }
    }
    Irreducibility::Inconclusive { primes_tried: tried }
}

/// Coefficients as `"num/den"` strings, lowest degree first.
pub fn coefficient_strings(f: &PolyQ) -> Vec<String> {
    f.coeffs().iter().map(crate::exact::format_rational).collect()
}

pub fn from_coefficient_strings(c: &[String]) -> Result<PolyQ> {
    let coeffs: Result<Vec<BigRational>> = c.iter().map(|s| crate::exact::parse_rational(s)).collect();
    Ok(PolyQ::new(coeffs?))
}
