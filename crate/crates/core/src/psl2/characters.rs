use crate::{Error, Result};

/// Irreducible complex character degrees of `SL2(F_q)`, `q` odd, ascending.
///
/// Closed form: `1`, `q`, `(q+1)/2` and `(q-1)/2` twice each, `q+1` with
/// multiplicity `(q-3)/2` and `q-1` with multiplicity `(q-1)/2`. The census
/// is checked against the class count `q+4`, the order `q(q²-1)` as sum of
/// squares, and the minimal nontrivial degree `(q-1)/2`.
pub fn sl2_degree_census(q: u64) -> Result<Vec<u64>> {
    if q % 2 == 0 {
        return Err(Error::NotOddPrimePower(q));
    }
    if q < 5 || crate::finitefield::prime_power(q).is_none() {
        return Err(Error::Precondition(format!("sl2_degree_census needs an odd prime power q >= 5, got {q}")));
    }
    let mut degrees = vec![1, q, (q + 1) / 2, (q + 1) / 2, (q - 1) / 2, (q - 1) / 2];
    degrees.extend(std::iter::repeat_n(q + 1, ((q - 3) / 2) as usize));
    degrees.extend(std::iter::repeat_n(q - 1, ((q - 1) / 2) as usize));
    degrees.sort_unstable();

    let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
    let min_nontrivial = degrees.iter().copied().filter(|&d| d > 1).min();
    if degrees.len() as u64 != q + 4 || sum_sq != q * (q * q - 1) || min_nontrivial != Some((q - 1) / 2) {
        return Err(Error::Precondition(format!("character census identities fail at q = {q}")));
    }
    Ok(degrees)
}
