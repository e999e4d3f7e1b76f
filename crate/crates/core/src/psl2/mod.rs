//! `PSL2(F_q)` acting on the projective line by fractional-linear maps:
//! exhaustive element lists, cycle-type census, transitivity, perfectness,
//! `SL2` character-degree census and the FTKL-exceptional predicate.

mod census;
mod characters;
mod ftkl;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use census::{burnside_pair_orbits, census_json, cycle_type_census, CensusEntry, Census};
pub use characters::sl2_degree_census;
pub use ftkl::{is_ftkl_exceptional, GroupDescriptor, GroupFamily};

use crate::finitefield::{prime_power, ExtField};
use crate::{Error, Result};

/// Largest `q` for which the group is enumerated element by element.
pub const EXHAUSTIVE_Q_CAP: u64 = 31;

/// A point of `P^1(F_q)`; finite points carry their field-element code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ProjPoint {
    Finite(u64),
    Infinity,
}

impl ProjPoint {
    /// Index in `0..=q`, with `∞ ↦ q`.
    pub fn index(self, q: u64) -> usize {
        match self {
            ProjPoint::Finite(x) => x as usize,
            ProjPoint::Infinity => q as usize,
        }
    }

    pub fn from_index(i: usize, q: u64) -> Self {
        if i as u64 == q {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(i as u64)
        }
    }
}

/// `x ↦ (a x + b)/(c x + d)`, stored with the first nonzero entry of
/// `(a, b, c, d)` equal to 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjElement {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl fmt::Display for ProjElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Cycle lengths of a permutation, nonincreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self(lengths)
    }

    pub fn of_permutation(perm: &[u32]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut lengths = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Self::new(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().filter(|&&l| l == 1).count()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&l| l == 1)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `PSL2(F_q)` together with its field, for odd prime powers `q`.
#[derive(Clone, Debug)]
pub struct Psl2 {
    field: ExtField,
}

impl Psl2 {
    pub fn new(q: u64) -> Result<Self> {
        match prime_power(q) {
            Some((p, _)) if p != 2 => Ok(Self { field: ExtField::of_order(q)? }),
            _ => Err(Error::NotOddPrimePower(q)),
        }
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        psl2_order(self.q())
    }

    /// Number of points of the projective line.
    pub fn degree(&self) -> usize {
        self.q() as usize + 1
    }

    /// Canonical representative of the scalar class of `(a, b, c, d)`;
    /// `None` when singular.
    pub fn canonical(&self, a: u64, b: u64, c: u64, d: u64) -> Option<ProjElement> {
        let f = &self.field;
        if f.sub(f.mul(a, d), f.mul(b, c)) == 0 {
            return None;
        }
        let lead = [a, b, c, d].into_iter().find(|&v| v != 0)?;
        let s = f.inv(lead)?;
        Some(ProjElement { a: f.mul(a, s), b: f.mul(b, s), c: f.mul(c, s), d: f.mul(d, s) })
    }

    /// True iff the class lies in `PSL2`, i.e. its determinant is a square.
    pub fn contains(&self, g: &ProjElement) -> bool {
        let f = &self.field;
        let det = f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c));
        det != 0 && f.is_square(det)
    }

    pub fn identity(&self) -> ProjElement {
        ProjElement { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn compose(&self, g: &ProjElement, h: &ProjElement) -> ProjElement {
        // matrix product g·h, so (g∘h)(x) = g(h(x))
        let f = &self.field;
        let e = |x: u64, y: u64, z: u64, w: u64| f.add(f.mul(x, y), f.mul(z, w));
        self.canonical(e(g.a, h.a, g.b, h.c), e(g.a, h.b, g.b, h.d), e(g.c, h.a, g.d, h.c), e(g.c, h.b, g.d, h.d))
            .expect("product of invertible matrices")
    }

    pub fn act(&self, g: &ProjElement, x: ProjPoint) -> ProjPoint {
        let f = &self.field;
        match x {
            ProjPoint::Infinity => match f.inv(g.c) {
                None => ProjPoint::Infinity,
                Some(ci) => ProjPoint::Finite(f.mul(g.a, ci)),
            },
            ProjPoint::Finite(x) => {
                let den = f.add(f.mul(g.c, x), g.d);
                match f.inv(den) {
                    None => ProjPoint::Infinity,
                    Some(di) => ProjPoint::Finite(f.mul(f.add(f.mul(g.a, x), g.b), di)),
                }
            }
        }
    }

    /// The permutation of point indices induced by `g`.
    pub fn permutation(&self, g: &ProjElement) -> Vec<u32> {
        let q = self.q();
        (0..=q as usize).map(|i| self.act(g, ProjPoint::from_index(i, q)).index(q) as u32).collect()
    }

    /// `x ↦ x + 1`, `x ↦ -1/x`, and for non-prime `q` also `x ↦ z² x`
    /// with `z` primitive.
    pub fn generators(&self) -> Vec<ProjElement> {
        let f = &self.field;
        let mut gens = vec![
            self.canonical(1, 1, 0, 1).unwrap(),
            self.canonical(0, f.from_int(-1), 1, 0).unwrap(),
        ];
        if f.degree() > 1 {
            let z = f.primitive_element();
            gens.push(self.canonical(f.mul(z, z), 0, 0, 1).unwrap());
        }
        gens
    }

    /// Every element of the group, in canonical-code order.
    pub fn elements(&self) -> Vec<ProjElement> {
        let q = self.q();
        let mut out = Vec::with_capacity(self.order() as usize);
        // canonical forms: (1,b,c,d), (0,1,c,d)
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let g = ProjElement { a: 1, b, c, d };
                    if self.contains(&g) {
                        out.push(g);
                    }
                }
            }
        }
        for c in 1..q {
            for d in 0..q {
                let g = ProjElement { a: 0, b: 1, c, d };
                if self.contains(&g) {
                    out.push(g);
                }
            }
        }
        out
    }

    fn check_cap(&self) -> Result<()> {
        if self.q() > EXHAUSTIVE_Q_CAP {
            return Err(Error::EnumerationCap { q: self.q(), cap: EXHAUSTIVE_Q_CAP });
        }
        Ok(())
    }

    /// Permutations of all group elements on `P^1(F_q)`.
    pub fn permutations(&self) -> Result<Vec<Vec<u32>>> {
        self.check_cap()?;
        Ok(self.elements().par_iter().map(|g| self.permutation(g)).collect())
    }

    /// Orbit of the ordered pair `(∞, 0)` under the generators, over
    /// ordered pairs of distinct points.
    pub fn distinct_pair_orbit_size(&self) -> usize {
        let n = self.degree();
        let gens: Vec<Vec<u32>> = self.generators().iter().map(|g| self.permutation(g)).collect();
        let start = (n - 1, 0usize);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for g in &gens {
                let img = (g[x] as usize, g[y] as usize);
                if seen.insert(img) {
                    queue.push_back(img);
                }
            }
        }
        seen.len()
    }

    /// Order of the stabilizer of `∞` (the Borel subgroup).
    pub fn infinity_stabilizer_order(&self) -> Result<usize> {
        self.check_cap()?;
        Ok(self.elements().iter().filter(|g| self.act(g, ProjPoint::Infinity) == ProjPoint::Infinity).count())
    }
}

/// `|PSL2(F_q)| = q(q² - 1)/2` for odd `q`.
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / 2
}

/// All elements of `PSL2(F_q)`, `q` an odd prime power at most 31.
pub fn psl2_elements(q: u64) -> Result<Vec<ProjElement>> {
    let g = Psl2::new(q)?;
    g.check_cap()?;
    Ok(g.elements())
}

/// Double transitivity via the orbit of one ordered pair of distinct points.
pub fn is_doubly_transitive(q: u64) -> Result<bool> {
    let g = Psl2::new(q)?;
    g.check_cap()?;
    let n = g.degree();
    Ok(g.distinct_pair_orbit_size() == n * (n - 1))
}

/// Closure of a set of permutations under composition.
pub(crate) fn closure(gens: &[Vec<u32>], n: usize) -> HashSet<Vec<u32>> {
    let id: Vec<u32> = (0..n as u32).collect();
    let mut set = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

fn compose_perm(a: &[u32], b: &[u32]) -> Vec<u32> {
    // (a∘b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn invert_perm(a: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j as usize] = i as u32;
    }
    inv
}

/// Derived subgroup as the normal closure of commutators of generators.
fn derived_subgroup_order(gens: &[Vec<u32>], n: usize) -> usize {
    let mut normal_gens: Vec<Vec<u32>> = Vec::new();
    for x in gens {
        for y in gens {
            let c = compose_perm(&compose_perm(&invert_perm(x), &invert_perm(y)), &compose_perm(x, y));
            normal_gens.push(c);
        }
    }
    loop {
        let h = closure(&normal_gens, n);
        let mut grew = false;
        for g in gens {
            let gi = invert_perm(g);
            for k in normal_gens.clone() {
                let conj = compose_perm(&compose_perm(&gi, &k), g);
                if !h.contains(&conj) {
                    normal_gens.push(conj);
                    grew = true;
                }
            }
        }
        if !grew {
            return h.len();
        }
    }
}

/// True iff the commutator subgroup is the whole group.
pub fn is_perfect(q: u64) -> Result<bool> {
    let g = Psl2::new(q)?;
    g.check_cap()?;
    let gens: Vec<Vec<u32>> = g.generators().iter().map(|e| g.permutation(e)).collect();
    Ok(derived_subgroup_order(&gens, g.degree()) as u64 == g.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_counts() {
        assert_eq!(psl2_elements(5).unwrap().len(), 60);
        assert_eq!(psl2_elements(11).unwrap().len(), 660);
        assert_eq!(psl2_elements(13).unwrap().len(), 1092);
        assert_eq!(psl2_elements(9).unwrap().len(), 360);
    }

    #[test]
    fn elements_are_distinct_permutations() {
        for q in [5u64, 9, 13] {
            let g = Psl2::new(q).unwrap();
            let perms: HashSet<Vec<u32>> = g.permutations().unwrap().into_iter().collect();
            assert_eq!(perms.len() as u64, g.order());
        }
    }

    #[test]
    fn generators_generate() {
        for q in [3u64, 5, 7, 9, 25, 27] {
            let g = Psl2::new(q).unwrap();
            let gens: Vec<Vec<u32>> = g.generators().iter().map(|e| g.permutation(e)).collect();
            assert_eq!(closure(&gens, g.degree()).len() as u64, g.order(), "q = {q}");
        }
    }

    #[test]
    fn two_generators_miss_psl2_over_nonprime_fields() {
        let g = Psl2::new(27).unwrap();
        let gens: Vec<Vec<u32>> = g.generators()[..2].iter().map(|e| g.permutation(e)).collect();
        // only PSL2(F_3) ≅ A_4
        assert_eq!(closure(&gens, g.degree()).len(), 12);
    }

    #[test]
    fn errors() {
        assert_eq!(psl2_elements(8).unwrap_err(), Error::NotOddPrimePower(8));
        assert_eq!(psl2_elements(15).unwrap_err(), Error::NotOddPrimePower(15));
        assert!(matches!(psl2_elements(37), Err(Error::EnumerationCap { .. })));
    }

    #[test]
    fn double_transitivity() {
        for q in [5u64, 11, 13] {
            assert!(is_doubly_transitive(q).unwrap());
        }
    }

    #[test]
    fn perfectness() {
        assert!(is_perfect(5).unwrap());
        assert!(is_perfect(11).unwrap());
        assert!(!is_perfect(3).unwrap());
    }

    #[test]
    fn borel_stabilizer() {
        for q in [5u64, 9, 11] {
            let g = Psl2::new(q).unwrap();
            let stab = g.infinity_stabilizer_order().unwrap() as u64;
            assert_eq!(stab, q * (q - 1) / 2);
            assert_eq!(g.order() / stab, q + 1);
        }
    }
}
