use std::collections::{HashMap, HashSet, VecDeque};

use crate::{Error, Result};

/// Permutation of `0..n` as an image table.
pub type Perm = Vec<u8>;

/// Largest number of points a [`SmallGroup`] may act on.
pub const MAX_POINTS: usize = 12;

/// A permutation group on at most 12 points with its full element list.
///
/// Element 0 is always the identity; the rest follow breadth-first
/// discovery from the generators, so indices are deterministic.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

fn compose(a: &[u8], b: &[u8]) -> Perm {
    // apply b first, then a
    b.iter().map(|&i| a[i as usize]).collect()
}

fn invert(a: &[u8]) -> Perm {
    let mut inv = vec![0u8; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j as usize] = i as u8;
    }
    inv
}

impl SmallGroup {
    pub fn from_generators(name: impl Into<String>, degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree > MAX_POINTS {
            return Err(Error::Precondition(format!("small groups act on at most {MAX_POINTS} points")));
        }
        for g in &generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| (x as usize) >= degree || std::mem::replace(&mut seen[x as usize], true)) {
                return Err(Error::Precondition(format!("{g:?} is not a permutation of {degree} points")));
            }
        }
        let id: Perm = (0..degree as u8).collect();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id.clone(), 0usize)]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose(g, &x);
                if !index.contains_key(&y) {
                    if elements.len() >= 100_000 {
                        return Err(Error::GroupTooLarge(elements.len()));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self { name: name.into(), degree, generators, elements, index })
    }

    pub fn cyclic(n: usize) -> Self {
        let gen: Perm = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        Self::from_generators(format!("C{n}"), n, vec![gen]).expect("valid cyclic group")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n > 1 {
            gens.push((0..n).map(|i| ((i + 1) % n) as u8).collect());
            let mut t: Perm = (0..n as u8).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        Self::from_generators(format!("S{n}"), n, gens).expect("valid symmetric group")
    }

    pub fn alternating(n: usize) -> Self {
        // 3-cycles (0 1 k) generate A_n
        let gens = (2..n)
            .map(|k| {
                let mut p: Perm = (0..n as u8).collect();
                p[0] = 1;
                p[1] = k as u8;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_generators(format!("A{n}"), n, gens).expect("valid alternating group")
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let rot: Perm = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        let refl: Perm = (0..n).map(|i| ((n - i) % n) as u8).collect();
        Self::from_generators(format!("D{}", 2 * n), n, vec![rot, refl]).expect("valid dihedral group")
    }

    /// Parses `C<n>`, `S<n>`, `A<n>` or `D<2n>` (dihedral of order `2n`).
    pub fn from_name(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group {name:?}; expected C<n>, S<n>, A<n> or D<2n>"));
        let name = name.trim();
        let first = name.chars().next().ok_or_else(bad)?;
        let n: usize = name[first.len_utf8()..].parse().map_err(|_| bad())?;
        let kind = first.to_ascii_uppercase();
        let in_range = |d: usize| (1..=MAX_POINTS).contains(&d);
        match kind {
            'C' if in_range(n) => Ok(Self::cyclic(n)),
            'S' if in_range(n) => Ok(Self::symmetric(n)),
            'A' if in_range(n) => Ok(Self::alternating(n)),
            'D' if n % 2 == 0 && n >= 6 && in_range(n / 2) => Ok(Self::dihedral(n / 2)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the product `elements[a] · elements[b]` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&invert(&self.elements[a])]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the given element indices, as a sorted index list.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = HashSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<usize> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, elems: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = (0..self.order()).collect();
        let mut current: Vec<usize> = elems.to_vec();
        loop {
            let h = self.generate(&current);
            let hs: HashSet<usize> = h.iter().copied().collect();
            let mut extra = Vec::new();
            for &g in &gens {
                let gi = self.inv(g);
                for &x in &current {
                    let c = self.mul(self.mul(g, x), gi);
                    if !hs.contains(&c) {
                        extra.push(c);
                    }
                }
                if !extra.is_empty() {
                    break;
                }
            }
            if extra.is_empty() {
                return h;
            }
            current.extend(extra);
        }
    }

    /// All normal subgroups: normal closures of single elements, then
    /// repeated joins until nothing new appears.
    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut push = |s: Vec<usize>, found: &mut Vec<Vec<usize>>| {
            if seen.insert(s.clone()) {
                found.push(s);
            }
        };
        push(vec![0], &mut found);
        for g in 0..self.order() {
            let n = self.normal_closure(&[g]);
            push(n, &mut found);
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let mut union = found[i].clone();
                union.extend(&found[j]);
                let joined = self.generate(&union);
                push(joined, &mut found);
            }
            i += 1;
        }
        found.sort_by_key(|s| (s.len(), s.clone()));
        found
    }

    pub fn is_simple(&self) -> bool {
        self.order() > 1 && self.normal_subgroups().len() == 2
    }
}

/// Quotient `G/N` as a multiplication table on coset labels, with the
/// label of each element of `G`.
pub(crate) struct Quotient {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub label: Vec<usize>,
}

impl Quotient {
    pub fn new(g: &SmallGroup, normal: &[usize]) -> Self {
        let mut label = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if label[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &n in normal {
                label[g.mul(x, n)] = c;
            }
        }
        let order = reps.len();
        let table = (0..order).map(|a| (0..order).map(|b| label[g.mul(reps[a], reps[b])]).collect()).collect();
        Self { order, table, label }
    }

    fn identity(&self) -> usize {
        // coset of the identity element
        self.label[0]
    }

    fn element_order(&self, a: usize) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    fn generate(&self, gens: &[usize]) -> HashSet<usize> {
        let e = self.identity();
        let mut seen = HashSet::from([e]);
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[g][x];
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generate(&gens);
        // prefer high-order elements so few generators are needed
        let mut cands: Vec<usize> = (0..self.order).collect();
        cands.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        for a in cands {
            if span.len() == self.order {
                break;
            }
            if !span.contains(&a) {
                gens.push(a);
                span = self.generate(&gens);
            }
        }
        gens
    }

    /// All isomorphisms to `other`, as label maps.
    pub fn isomorphisms(&self, other: &Quotient) -> Vec<Vec<usize>> {
        if self.order != other.order {
            return Vec::new();
        }
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..other.order).filter(|&h| other.element_order(h) == o).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        if candidates.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
            if let Some(map) = self.extend_hom(&gens, &images, other) {
                out.push(map);
            }
            // odometer increment
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return out;
                }
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    fn extend_hom(&self, gens: &[usize], images: &[usize], other: &Quotient) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        let e = self.identity();
        map[e] = other.identity();
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.table[g][x];
                let img = other.table[h][map[x]];
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push_back(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        // well-defined on generators' words; check full multiplicativity and bijectivity
        let mut hit = vec![false; other.order];
        for &m in &map {
            if m == usize::MAX || std::mem::replace(&mut hit[m], true) {
                return None;
            }
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.table[a][b]] != other.table[map[a]][map[b]] {
                    return None;
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(SmallGroup::symmetric(3).order(), 6);
        assert_eq!(SmallGroup::alternating(5).order(), 60);
        assert_eq!(SmallGroup::dihedral(4).order(), 8);
        assert_eq!(SmallGroup::cyclic(4).order(), 4);
        assert_eq!(SmallGroup::symmetric(5).order(), 120);
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(SmallGroup::symmetric(3).normal_subgroups().len(), 3);
        assert_eq!(SmallGroup::alternating(5).normal_subgroups().len(), 2);
        assert_eq!(SmallGroup::symmetric(4).normal_subgroups().len(), 4);
        // D8: 1, center, two Klein four-groups, the rotation C4, whole group
        assert_eq!(SmallGroup::dihedral(4).normal_subgroups().len(), 6);
        assert!(SmallGroup::alternating(5).is_simple());
        assert!(!SmallGroup::symmetric(3).is_simple());
    }

    #[test]
    fn automorphisms_of_s3() {
        let g = SmallGroup::symmetric(3);
        let q = Quotient::new(&g, &[0]);
        assert_eq!(q.isomorphisms(&q).len(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SmallGroup::from_generators("x", 3, vec![vec![0, 0, 1]]).is_err());
        assert!(SmallGroup::from_generators("x", 13, vec![]).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(SmallGroup::from_name("A5").unwrap().order(), 60);
        assert_eq!(SmallGroup::from_name("s3").unwrap().order(), 6);
        assert_eq!(SmallGroup::from_name("D8").unwrap().order(), 8);
        assert_eq!(SmallGroup::from_name("C7").unwrap().order(), 7);
        for bad in ["", "X3", "S13", "D7", "D4", "C", "é3"] {
            assert!(SmallGroup::from_name(bad).is_err(), "{bad}");
        }
    }
}
