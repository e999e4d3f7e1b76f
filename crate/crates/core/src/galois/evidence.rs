use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::primes_from;
use crate::poly::{
    coefficient_strings, factor_degrees_mod_p_seeded, is_good_prime, proper_subset_sums, DegreePattern, PolyQ,
};
use crate::psl2::{cycle_type_census, Census, CycleType, EXHAUSTIVE_Q_CAP};
use crate::{Error, Result};

pub const DEFAULT_SAMPLE_SIZE: usize = 500;
pub const DEFAULT_TV_THRESHOLD: f64 = 0.15;
pub const DEFAULT_PRIME_BOUND: u64 = 10_000_000;

#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct EvidenceConfig {
    pub sample_size: usize,
    pub tv_threshold: f64,
    pub seed: u64,
    /// Sampling stops with an error if this many good primes are not found
    /// below the bound.
    pub prime_bound: u64,
}

impl Default for EvidenceConfig {
    fn default() -> Self {
        Self {
            sample_size: DEFAULT_SAMPLE_SIZE,
            tv_threshold: DEFAULT_TV_THRESHOLD,
            seed: crate::poly::DEFAULT_SPLIT_SEED,
            prime_bound: DEFAULT_PRIME_BOUND,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EvidenceVerdict {
    Consistent,
    /// A Frobenius pattern that no element of the group can produce.
    Inconsistent { prime: u64, pattern: DegreePattern },
    Inconclusive { reason: String },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PatternCount {
    pub pattern: DegreePattern,
    pub count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub prime: u64,
    pub pattern: DegreePattern,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub polynomial: Vec<String>,
    pub q: u64,
    pub seed: u64,
    pub sample_size: usize,
    pub tv_threshold: f64,
    pub primes_sampled: usize,
    pub first_prime: u64,
    pub last_prime: u64,
    /// Primes below `last_prime` skipped as bad (dividing a denominator,
    /// the leading coefficient or the discriminant).
    pub bad_primes: Vec<u64>,
    pub patterns: Vec<PatternCount>,
    pub verdict: EvidenceVerdict,
    pub tv_distance: Option<f64>,
    pub witnesses: Vec<Witness>,
    /// Census types never seen in the sample (the identity among them is
    /// not required for a consistent verdict).
    pub unobserved_types: Vec<CycleType>,
    pub transitivity_witnessed: bool,
}

impl EvidenceReport {
    pub fn pattern_count(&self, pattern: &[usize]) -> usize {
        self.patterns.iter().find(|p| p.pattern.parts() == pattern).map_or(0, |p| p.count)
    }
}

/// Census counts normalized by the group order.
pub fn chebotarev_expected(q: u64) -> Result<BTreeMap<CycleType, BigRational>> {
    let census = cycle_type_census(q)?;
    Ok(expected_from_census(&census))
}

fn expected_from_census(census: &Census) -> BTreeMap<CycleType, BigRational> {
    let order: u64 = census.values().sum();
    census
        .iter()
        .map(|(t, &c)| (t.clone(), BigRational::new(BigInt::from(c), BigInt::from(order))))
        .collect()
}

/// Whether the observed patterns rule out a rational factor of every
/// proper degree: for a reducible polynomial with a factor of degree `d`,
/// every pattern would contain parts summing to `d`.
pub fn transitivity_witnessed<'a>(patterns: impl IntoIterator<Item = &'a DegreePattern>, degree: usize) -> bool {
    let mut common: Option<BTreeSet<usize>> = None;
    for pat in patterns {
        let proper = proper_subset_sums(pat.parts(), degree);
        common = Some(match common {
            None => proper,
            Some(c) => c.intersection(&proper).copied().collect(),
        });
        if common.as_ref().is_some_and(BTreeSet::is_empty) {
            return true;
        }
    }
    false
}

/// Samples the first `sample_size` good primes and compares the Frobenius
/// degree patterns of `f` with the cycle-type census of `PSL2(F_q)`.
pub fn galois_evidence(f: &PolyQ, q: u64, config: &EvidenceConfig) -> Result<EvidenceReport> {
    let degree = f.degree().unwrap_or(0);
    if degree as u64 != q + 1 {
        return Err(Error::DegreeMismatch { expected: (q + 1) as usize, found: degree });
    }
    if !f.is_squarefree() {
        return Err(Error::Precondition("polynomial has repeated roots".into()));
    }
    if config.sample_size == 0 {
        return Err(Error::Precondition("sample size must be positive".into()));
    }
    let census = if q <= EXHAUSTIVE_Q_CAP { Some(cycle_type_census(q)?) } else { None };

    let mut good = Vec::with_capacity(config.sample_size);
    let mut bad_primes = Vec::new();
    for p in primes_from(2).take_while(|&p| p < config.prime_bound) {
        if is_good_prime(f, p) {
            good.push(p);
            if good.len() == config.sample_size {
                break;
            }
        } else {
            bad_primes.push(p);
        }
    }
    if good.len() < config.sample_size {
        return Err(Error::InsufficientPrimes { found: good.len(), wanted: config.sample_size, bound: config.prime_bound });
    }

    let observed: Vec<DegreePattern> = good
        .par_iter()
        .map(|&p| factor_degrees_mod_p_seeded(f, p, config.seed))
        .collect::<Result<Vec<_>>>()?;

    let mut counts: BTreeMap<DegreePattern, usize> = BTreeMap::new();
    for pat in &observed {
        *counts.entry(pat.clone()).or_insert(0) += 1;
    }
    let patterns: Vec<PatternCount> =
        counts.iter().map(|(p, &c)| PatternCount { pattern: p.clone(), count: c }).collect();
    let transitivity = transitivity_witnessed(counts.keys(), degree);

    let report = |verdict, tv_distance, witnesses, unobserved_types| EvidenceReport {
        polynomial: coefficient_strings(f),
        q,
        seed: config.seed,
        sample_size: config.sample_size,
        tv_threshold: config.tv_threshold,
        primes_sampled: good.len(),
        first_prime: good[0],
        last_prime: *good.last().unwrap(),
        bad_primes: bad_primes.clone(),
        patterns: patterns.clone(),
        verdict,
        tv_distance,
        witnesses,
        unobserved_types,
        transitivity_witnessed: transitivity,
    };

    let Some(census) = census else {
        let reason = format!("no exhaustive census for q = {q} > {EXHAUSTIVE_Q_CAP}");
        return Ok(report(EvidenceVerdict::Inconclusive { reason }, None, Vec::new(), Vec::new()));
    };

    let as_type = |p: &DegreePattern| CycleType::new(p.parts().to_vec());
    let witnesses: Vec<Witness> = good
        .iter()
        .zip(&observed)
        .filter(|(_, pat)| !census.contains_key(&as_type(pat)))
        .map(|(&prime, pat)| Witness { prime, pattern: pat.clone() })
        .collect();

    let expected = expected_from_census(&census);
    let n = good.len() as f64;
    let mut tv = 0.0;
    for (t, prob) in &expected {
        let seen = counts.iter().filter(|(p, _)| &as_type(p) == t).map(|(_, &c)| c).sum::<usize>() as f64;
        tv += (seen / n - prob.to_f64().unwrap_or(0.0)).abs();
    }
    for (p, &c) in &counts {
        if !expected.contains_key(&as_type(p)) {
            tv += c as f64 / n;
        }
    }
    let tv = tv / 2.0;

    let unobserved: Vec<CycleType> =
        census.keys().filter(|t| !counts.keys().any(|p| &as_type(p) == *t)).cloned().collect();

    let verdict = if let Some(w) = witnesses.first() {
        EvidenceVerdict::Inconsistent { prime: w.prime, pattern: w.pattern.clone() }
    } else if unobserved.iter().any(|t| !t.is_identity()) {
        let missing: Vec<String> = unobserved.iter().filter(|t| !t.is_identity()).map(ToString::to_string).collect();
        EvidenceVerdict::Inconclusive { reason: format!("census types not observed: {}", missing.join(" ")) }
    } else if tv > config.tv_threshold {
        EvidenceVerdict::Inconclusive { reason: format!("total variation {tv:.4} exceeds {}", config.tv_threshold) }
    } else if !transitivity {
        EvidenceVerdict::Inconclusive { reason: "no pattern set witnessing transitivity".into() }
    } else {
        EvidenceVerdict::Consistent
    };
    Ok(report(verdict, Some(tv), witnesses, unobserved))
}
