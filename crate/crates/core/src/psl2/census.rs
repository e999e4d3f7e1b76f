use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CycleType, Psl2};
use crate::Result;

/// Cycle type → number of group elements with that type.
pub type Census = BTreeMap<CycleType, u64>;

/// JSON row of an exported census.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusEntry {
    pub cycle_type: CycleType,
    pub count: u64,
}

/// Exhaustive cycle-type census of `PSL2(F_q)` on `P^1(F_q)`.
pub fn cycle_type_census(q: u64) -> Result<Census> {
    let g = Psl2::new(q)?;
    let perms = g.permutations()?;
    Ok(perms
        .par_iter()
        .fold(Census::new, |mut acc, p| {
            *acc.entry(CycleType::of_permutation(p)).or_insert(0) += 1;
            acc
        })
        .reduce(Census::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        }))
}

/// Number of orbits on ordered pairs of points (diagonal included), by
/// Burnside's lemma: the mean of `fix(g)^2`.
pub fn burnside_pair_orbits(census: &Census) -> u64 {
    let order: u64 = census.values().sum();
    let total: u64 = census.iter().map(|(t, &c)| c * (t.fixed_points() as u64).pow(2)).sum();
    assert_eq!(total % order, 0, "Burnside sum not divisible by group order");
    total / order
}

pub fn census_json(census: &Census) -> Vec<CensusEntry> {
    census.iter().map(|(t, &count)| CensusEntry { cycle_type: t.clone(), count }).collect()
}
