//! The mod-2 permutation module `Q_R = (F_2^R)^0 / F_2·1` of the
//! `PSL2(F_q)` action on `R = P^1(F_q)`, and its endomorphism commutant.

use serde::{Deserialize, Serialize};

use crate::finitefield::{f2_solve_kernel, F2Matrix};
use crate::psl2::Psl2;
use crate::{Error, Result};

/// A group action on `F_2^d` given by generator matrices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct F2Module {
    pub label: String,
    pub dimension: usize,
    pub generators: Vec<F2Matrix>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutantClass {
    F2,
    F4,
    F2xF2,
    F2DualNumbers,
    Other(usize),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CommutantStructure {
    pub dimension: usize,
    pub classification: CommutantClass,
    pub basis: Vec<F2Matrix>,
}

impl F2Module {
    pub fn new(label: impl Into<String>, generators: Vec<F2Matrix>) -> Self {
        let dimension = generators.first().map_or(0, F2Matrix::rows);
        assert!(generators.iter().all(|g| g.rows() == dimension && g.cols() == dimension));
        Self { label: label.into(), dimension, generators }
    }
}

/// Matrix of a permutation on the module attached to an `n`-point set.
///
/// Even `n`: basis `δ_i + δ_∞` for `i < n-2`, where `∞ = n-1` and the
/// point `n-2` is normalized away using the all-ones vector. Odd `n`: the
/// sum-zero module itself with basis `δ_i + δ_{n-1}`, `i < n-1`.
fn permutation_action(perm: &[u32]) -> F2Matrix {
    let n = perm.len();
    let inf = n - 1;
    let even = n % 2 == 0;
    let d = if even { n - 2 } else { n - 1 };
    let mut m = F2Matrix::zeros(d, d);
    for j in 0..d {
        let mut v = vec![false; n];
        v[perm[j] as usize] ^= true;
        v[perm[inf] as usize] ^= true;
        if even && v[n - 2] {
            v.iter_mut().for_each(|b| *b = !*b);
        }
        for (i, &bit) in v.iter().take(d).enumerate() {
            m.set(i, j, bit);
        }
    }
    m
}

/// `Q_R` for a permutation group given by generating permutations of an
/// `n`-point set, `n ≥ 3`.
pub fn permutation_module(label: impl Into<String>, generators: &[Vec<u32>]) -> F2Module {
    F2Module::new(label, generators.iter().map(|g| permutation_action(g)).collect())
}

/// `Q_R` for `PSL2(F_q)` on the projective line; dimension `q - 1`.
pub fn build_q_module(q: u64) -> Result<F2Module> {
    let g = Psl2::new(q)?;
    if q > crate::psl2::EXHAUSTIVE_Q_CAP {
        return Err(Error::EnumerationCap { q, cap: crate::psl2::EXHAUSTIVE_Q_CAP });
    }
    let perms: Vec<Vec<u32>> = g.generators().iter().map(|e| g.permutation(e)).collect();
    Ok(permutation_module(format!("Q(P1(F_{q}))"), &perms))
}

/// Matrix of a permutation of `P^1(F_q)` on [`build_q_module`]'s basis.
pub fn q_module_matrix(perm: &[u32]) -> F2Matrix {
    permutation_action(perm)
}

/// The algebra `{X : X A = A X}` over all generators `A`.
pub fn commutant(m: &F2Module) -> CommutantStructure {
    let d = m.dimension;
    let mut system = F2Matrix::zeros(d * d * m.generators.len().max(1), d * d);
    for (g, a) in m.generators.iter().enumerate() {
        let base = g * d * d;
        for i in 0..d {
            for j in 0..d {
                let row = base + i * d + j;
                // (XA - AX)_{ij} = sum_k X_{ik} A_{kj} + A_{ik} X_{kj}
                for k in 0..d {
                    if a.get(k, j) {
                        system.flip(row, i * d + k);
                    }
                    if a.get(i, k) {
                        system.flip(row, k * d + j);
                    }
                }
            }
        }
    }
    let basis: Vec<F2Matrix> = f2_solve_kernel(&system)
        .into_iter()
        .map(|v| {
            let mut x = F2Matrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    x.set(i, j, v.get(i * d + j));
                }
            }
            x
        })
        .collect();
    let classification = classify(&basis, d);
    CommutantStructure { dimension: basis.len(), classification, basis }
}

fn classify(basis: &[F2Matrix], d: usize) -> CommutantClass {
    match basis.len() {
        1 => CommutantClass::F2,
        2 => {
            let id = F2Matrix::identity(d);
            let elems = [basis[0].clone(), basis[1].clone(), basis[0].add(&basis[1])];
            let nontrivial: Vec<&F2Matrix> = elems.iter().filter(|x| **x != id).collect();
            let sq = |x: &F2Matrix| x.mul(x);
            if nontrivial.iter().any(|x| sq(x) == **x) {
                CommutantClass::F2xF2
            } else if nontrivial.iter().any(|x| sq(x).is_zero()) {
                CommutantClass::F2DualNumbers
            } else if nontrivial.iter().any(|x| sq(x).add(x).add(&id).is_zero()) {
                CommutantClass::F4
            } else {
                CommutantClass::Other(2)
            }
        }
        n => CommutantClass::Other(n),
    }
}

/// For `q ≡ ±3 (mod 8)`, `q ≥ 5`: whether the commutant of `Q_R` is `F_4`.
pub fn verify_f4(q: u64) -> Result<bool> {
    if q < 5 || !matches!(q % 8, 3 | 5) {
        return Err(Error::Precondition(format!("verify_f4 needs q = ±3 mod 8 and q >= 5, got {q}")));
    }
    let m = build_q_module(q)?;
    Ok(commutant(&m).classification == CommutantClass::F4)
}
