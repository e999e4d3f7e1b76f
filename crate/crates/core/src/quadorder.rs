//! Orders of conductor 1 and 2 in `Q(sqrt(-p))`, their lattices, and class
//! numbers of imaginary quadratic discriminants.
//!
//! Elements are written `(x + y*w) / d` with `w = (-1 + sqrt(-p))/2`, so
//! `w^2 = -w - m` where `m = (p + 1)/4`. Lattices are kept as an integer
//! Hermite basis `{(a1, b1), (0, b2)}` over a common denominator.

use std::fmt;

use num_integer::{Integer, Roots};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::is_prime_u64;
use crate::{Error, Result};

/// Largest `p` accepted; keeps every intermediate within `i128`.
pub const MAX_P: u64 = 1 << 31;

fn check_p(p: u64) -> Result<i128> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::Precondition(format!("p = {p} is not 3 mod 4")));
    }
    if p >= MAX_P {
        return Err(Error::Precondition(format!("p = {p} exceeds {MAX_P}")));
    }
    Ok(((p + 1) / 4) as i128)
}

/// Whether `(2)` stays prime in the maximal order, i.e. `x^2 + x + (p+1)/4`
/// has no root mod 2.
pub fn two_is_inert(p: u64) -> Result<bool> {
    let m = check_p(p)?;
    Ok(m % 2 == 1)
}

/// `(x + y*w) / den` with `den > 0` and no common factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadElement {
    pub x: i128,
    pub y: i128,
    pub den: i128,
}

impl QuadElement {
    pub fn new(x: i128, y: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let s = den.signum();
        let g = x.gcd(&y).gcd(&den);
        Self { x: s * x / g, y: s * y / g, den: s * den / g }
    }

    pub fn integer(n: i128) -> Self {
        Self::new(n, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.x, self.y) {
            (x, 0) => format!("{x}"),
            (0, y) => format!("{y}w"),
            (x, y) if y < 0 => format!("{x} - {}w", -y),
            (x, y) => format!("{x} + {y}w"),
        };
        if self.den == 1 {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

/// The field `Q(sqrt(-p))` with arithmetic in the `{1, w}` basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadField {
    p: u64,
    m: i128,
}

impl QuadField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self { p, m: check_p(p)? })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn mul_int(&self, (a, b): (i128, i128), (c, d): (i128, i128)) -> (i128, i128) {
        (a * c - b * d * self.m, a * d + b * c - b * d)
    }

    /// Norm of the integral part `x + y*w`.
    fn norm_int(&self, (x, y): (i128, i128)) -> i128 {
        x * x - x * y + self.m * y * y
    }

    pub fn mul(&self, u: &QuadElement, v: &QuadElement) -> QuadElement {
        let (x, y) = self.mul_int((u.x, u.y), (v.x, v.y));
        QuadElement::new(x, y, u.den * v.den)
    }

    pub fn conj(&self, u: &QuadElement) -> QuadElement {
        QuadElement::new(u.x - u.y, -u.y, u.den)
    }

    /// Norm as a reduced fraction `(num, den)`.
    pub fn norm(&self, u: &QuadElement) -> (i128, i128) {
        let n = self.norm_int((u.x, u.y));
        let d = u.den * u.den;
        let g = n.gcd(&d);
        (n / g, d / g)
    }

    pub fn inv(&self, u: &QuadElement) -> Result<QuadElement> {
        if u.is_zero() {
            return Err(Error::Precondition("inverse of zero".into()));
        }
        let c = self.conj(u);
        let n = self.norm_int((u.x, u.y));
        Ok(QuadElement::new(c.x * u.den, c.y * u.den, n))
    }

    pub fn div(&self, u: &QuadElement, v: &QuadElement) -> Result<QuadElement> {
        Ok(self.mul(u, &self.inv(v)?))
    }
}

/// The order `Z + f*O` of conductor `f` in `Q(sqrt(-p))`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuadOrder {
    pub p: u64,
    pub conductor: u32,
}

impl QuadOrder {
    pub fn new(p: u64, conductor: u32) -> Result<Self> {
        check_p(p)?;
        if !(1..=2).contains(&conductor) {
            return Err(Error::UnsupportedConductor);
        }
        Ok(Self { p, conductor })
    }

    pub fn maximal(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// The order as a lattice, basis `{1, f*w}`.
    pub fn as_ideal(&self) -> QuadIdeal {
        let field = QuadField::new(self.p).expect("validated");
        QuadIdeal::from_hnf(field, [(1, 0), (0, self.conductor as i128)], 1)
    }
}

/// A full-rank lattice in `Q(sqrt(-p))`: integer Hermite basis rows
/// `(a1, b1), (0, b2)` with `a1, b2 > 0` and `0 <= b1 < b2`, divided by `den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuadIdeal {
    field: QuadField,
    basis: [(i128, i128); 2],
    den: i128,
}

impl std::hash::Hash for QuadField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Hermite basis of the integer lattice spanned by `vs`, or `None` if the
/// span has rank below 2.
fn hnf(vs: &[(i128, i128)]) -> Option<[(i128, i128); 2]> {
    let mut pivot: Option<(i128, i128)> = None;
    let mut g2: i128 = 0;
    for &v in vs {
        match pivot {
            None if v.0 != 0 => pivot = Some(v),
            None => g2 = g2.gcd(&v.1),
            Some(pv) => {
                let (g, s, t) = ext_gcd(pv.0, v.0);
                let (ps, vs_) = (pv.0 / g, v.0 / g);
                let rem = (vs_ * pv.0 - ps * v.0, vs_ * pv.1 - ps * v.1);
                debug_assert_eq!(rem.0, 0);
                g2 = g2.gcd(&rem.1);
                pivot = Some((s * pv.0 + t * v.0, s * pv.1 + t * v.1));
            }
        }
    }
    let mut pv = pivot?;
    if g2 == 0 {
        return None;
    }
    if pv.0 < 0 {
        pv = (-pv.0, -pv.1);
    }
    Some([(pv.0, pv.1.mod_floor(&g2)), (0, g2)])
}

impl QuadIdeal {
    fn from_hnf(field: QuadField, basis: [(i128, i128); 2], den: i128) -> Self {
        let g = basis[0].0.gcd(&basis[0].1).gcd(&basis[1].1).gcd(&den);
        let basis = [(basis[0].0 / g, basis[0].1 / g), (0, basis[1].1 / g)];
        Self { field, basis, den: den / g }
    }

    /// The lattice spanned over `Z` by `gens`.
    pub fn from_generators(field: QuadField, gens: &[QuadElement]) -> Result<Self> {
        let den = gens.iter().fold(1i128, |acc, g| acc.lcm(&g.den));
        let ints: Vec<(i128, i128)> = gens.iter().map(|g| (g.x * (den / g.den), g.y * (den / g.den))).collect();
        let basis = hnf(&ints).ok_or_else(|| Error::Precondition("generators do not span a full lattice".into()))?;
        Ok(Self::from_hnf(field, basis, den))
    }

    /// The `O`-ideal generated by `gens`.
    pub fn o_ideal(field: QuadField, gens: &[QuadElement]) -> Result<Self> {
        let w = QuadElement::new(0, 1, 1);
        let mut all = gens.to_vec();
        all.extend(gens.iter().map(|g| field.mul(g, &w)));
        Self::from_generators(field, &all)
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn basis(&self) -> [QuadElement; 2] {
        self.basis.map(|(x, y)| QuadElement::new(x, y, self.den))
    }

    pub fn contains(&self, z: &QuadElement) -> bool {
        // z * den / z.den must be an integer vector in the Hermite lattice
        let (nx, ny) = (z.x * self.den, z.y * self.den);
        if nx % z.den != 0 || ny % z.den != 0 {
            return false;
        }
        let (x, y) = (nx / z.den, ny / z.den);
        let [(a1, b1), (_, b2)] = self.basis;
        if x % a1 != 0 {
            return false;
        }
        (y - (x / a1) * b1) % b2 == 0
    }

    pub fn is_subset_of(&self, other: &QuadIdeal) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    /// Covolume relative to the maximal order, as a reduced fraction.
    pub fn covolume(&self) -> (i128, i128) {
        let n = self.basis[0].0 * self.basis[1].1;
        let d = self.den * self.den;
        let g = n.gcd(&d);
        (n / g, d / g)
    }

    /// `[other : self]` when `self` is contained in `other`.
    pub fn index_in(&self, other: &QuadIdeal) -> Option<u128> {
        if !self.is_subset_of(other) {
            return None;
        }
        let (n1, d1) = self.covolume();
        let (n2, d2) = other.covolume();
        Some(((n1 * d2) / (d1 * n2)) as u128)
    }

    pub fn scale(&self, lambda: &QuadElement) -> Result<QuadIdeal> {
        if lambda.is_zero() {
            return Err(Error::Precondition("scaling by zero".into()));
        }
        let gens: Vec<QuadElement> = self.basis().iter().map(|b| self.field.mul(lambda, b)).collect();
        Self::from_generators(self.field, &gens)
    }

    /// `O * self`.
    pub fn extend_to_maximal(&self) -> QuadIdeal {
        Self::o_ideal(self.field, &self.basis()).expect("full rank is preserved")
    }

    fn stable_under(&self, z: &QuadElement) -> bool {
        self.basis().iter().all(|b| self.contains(&self.field.mul(z, b)))
    }

    /// The order `{z : z * self ⊆ self}`.
    pub fn multiplier_ring(&self) -> Result<QuadOrder> {
        for f in 1..=2 {
            if self.stable_under(&QuadElement::new(0, f, 1)) {
                return QuadOrder::new(self.field.p, f as u32);
            }
        }
        Err(Error::UnsupportedConductor)
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v] = self.basis();
        write!(f, "<{u}, {v}>")
    }
}

/// Whether two lattices differ by a scalar, returning `lambda` with
/// `lambda * b1 = b2`.
pub fn ideal_isomorphic(b1: &QuadIdeal, b2: &QuadIdeal) -> Result<Option<QuadElement>> {
    let field = b1.field;
    if field != b2.field {
        return Err(Error::Precondition("lattices live in different fields".into()));
    }
    if field.p == 3 {
        return Err(Error::Precondition("p = 3 has extra units".into()));
    }
    if b1.multiplier_ring()? != b2.multiplier_ring()? {
        return Ok(None);
    }
    // Work with the integral lattices L_i = den_i * b_i; mu * L1 = L2 gives
    // lambda = mu * den1 / den2.
    let det1 = b1.basis[0].0 * b1.basis[1].1;
    let det2 = b2.basis[0].0 * b2.basis[1].1;
    let u1 = b1.basis[0];
    let target_num = field.norm_int(u1) * det2;
    if target_num % det1 != 0 {
        return Ok(None);
    }
    let target = target_num / det1;
    let l1 = QuadIdeal::from_hnf(field, b1.basis, 1);
    let l2 = QuadIdeal::from_hnf(field, b2.basis, 1);
    let u1e = QuadElement::new(u1.0, u1.1, 1);
    // (2x - y)^2 + p y^2 = 4 * target
    let p = field.p as i128;
    let ymax = (4 * target / p).sqrt();
    for y in -ymax..=ymax {
        let r = 4 * target - p * y * y;
        if r < 0 {
            continue;
        }
        let s = r.sqrt();
        if s * s != r {
            continue;
        }
        for t in [s, -s] {
            if (t + y) % 2 != 0 {
                continue;
            }
            let w = QuadElement::new((t + y) / 2, y, 1);
            if !l2.contains(&w) {
                continue;
            }
            let mu = field.div(&w, &u1e)?;
            if l1.scale(&mu)? == l2 {
                let lambda = field.mul(&mu, &QuadElement::new(b1.den, 0, b2.den));
                return Ok(Some(lambda));
            }
            if s == 0 {
                break;
            }
        }
    }
    Ok(None)
}

/// The three index-2 sublattices of an `O`-ideal, each checked to be a
/// proper `O_2`-ideal whose `O`-span is `a`, pairwise non-isomorphic.
pub fn index2_subgroups(a: &QuadIdeal) -> Result<[QuadIdeal; 3]> {
    if a.multiplier_ring()?.conductor != 1 {
        return Err(Error::Precondition("lattice is not an O-ideal".into()));
    }
    let p = a.field.p;
    if p % 8 != 3 {
        return Err(Error::Precondition(format!("p = {p} is not 3 mod 8")));
    }
    let [u, v] = a.basis();
    let f = a.field;
    let two = QuadElement::integer(2);
    let uv = QuadElement::new(u.x * v.den + v.x * u.den, u.y * v.den + v.y * u.den, u.den * v.den);
    let subs = [
        QuadIdeal::from_generators(f, &[f.mul(&two, &u), v])?,
        QuadIdeal::from_generators(f, &[u, f.mul(&two, &v)])?,
        QuadIdeal::from_generators(f, &[uv, f.mul(&two, &v)])?,
    ];
    for b in &subs {
        if b.index_in(a) != Some(2) {
            return Err(Error::Precondition(format!("{b} is not of index 2 in {a}")));
        }
        if b.multiplier_ring()?.conductor != 2 {
            return Err(Error::Precondition(format!("{b} is not a proper O_2-ideal")));
        }
        if b.extend_to_maximal() != *a {
            return Err(Error::Precondition(format!("O * {b} differs from {a}")));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if ideal_isomorphic(&subs[i], &subs[j])?.is_some() {
                return Err(Error::Precondition(format!("{} and {} are isomorphic", subs[i], subs[j])));
            }
        }
    }
    Ok(subs)
}

/// A random integral `O`-ideal of norm at most `max_norm`, generated by an
/// integer and an element with small coordinates.
pub fn random_o_ideal<R: Rng>(p: u64, max_norm: u64, rng: &mut R) -> Result<QuadIdeal> {
    let field = QuadField::new(p)?;
    let max = max_norm as i128;
    loop {
        let n = rng.gen_range(1..=max);
        let alpha = QuadElement::new(rng.gen_range(-max..=max), rng.gen_range(-max..=max), 1);
        let gens = if alpha.is_zero() { vec![QuadElement::integer(n)] } else { vec![QuadElement::integer(n), alpha] };
        let a = QuadIdeal::o_ideal(field, &gens)?;
        if a.covolume().0 <= max {
            return Ok(a);
        }
    }
}

/// Primitive positive definite binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_reduced(&self) -> bool {
        self.b.abs() <= self.a && self.a <= self.c && (self.b >= 0 || (self.b.abs() != self.a && self.a != self.c))
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::Precondition(format!("{d} is not a negative discriminant")));
    }
    Ok(())
}

/// All reduced primitive forms of discriminant `d`.
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 || (b * b - d) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b - d) / (4 * a);
            let f = QuadForm { a, b, c };
            if f.is_reduced() && a.gcd(&b).gcd(&c) == 1 {
                out.push(f);
            }
        }
        a += 1;
    }
    Ok(out)
}

pub fn class_number(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThreeHRow {
    pub p: u64,
    pub h: u64,
    pub h2: u64,
    pub ok: bool,
}

/// `h(-p)`, `h(-4p)` and whether `h(-4p) = 3 h(-p)`.
pub fn verify_3h(p: u64) -> Result<ThreeHRow> {
    check_p(p)?;
    if p % 8 != 3 || p <= 3 {
        return Err(Error::Precondition(format!("p = {p} is not a prime 3 mod 8 above 3")));
    }
    let h = class_number(-(p as i64))?;
    let h2 = class_number(-4 * p as i64)?;
    Ok(ThreeHRow { p, h, h2, ok: h2 == 3 * h })
}

/// `verify_3h` for every prime `p = 3 mod 8` with `11 <= p <= bound`, in
/// increasing order.
pub fn verify_3h_sweep(bound: u64) -> Result<Vec<ThreeHRow>> {
    let ps: Vec<u64> = (11..=bound).step_by(8).filter(|&p| is_prime_u64(p)).collect();
    ps.par_iter().map(|&p| verify_3h(p)).collect()
}

pub fn sweep_csv(rows: &[ThreeHRow]) -> String {
    let mut s = String::from("p,h,h2,ok\n");
    for r in rows {
        s.push_str(&format!("{},{},{},{}\n", r.p, r.h, r.h2, r.ok));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn o(p: u64) -> QuadIdeal {
        QuadOrder::maximal(p).unwrap().as_ideal()
    }

    fn o2(p: u64) -> QuadIdeal {
        QuadOrder::new(p, 2).unwrap().as_ideal()
    }

    #[test]
    fn inertness_of_two() {
        assert!(two_is_inert(11).unwrap());
        assert!(two_is_inert(19).unwrap());
        assert!(!two_is_inert(7).unwrap());
        assert!(two_is_inert(13).is_err());
    }

    #[test]
    fn element_arithmetic() {
        let f = QuadField::new(11).unwrap();
        let w = QuadElement::new(0, 1, 1);
        // w^2 = -w - 3
        assert_eq!(f.mul(&w, &w), QuadElement::new(-3, -1, 1));
        assert_eq!(f.norm(&w), (3, 1));
        let z = QuadElement::new(5, -7, 3);
        assert_eq!(f.mul(&z, &f.inv(&z).unwrap()), QuadElement::integer(1));
    }

    #[test]
    fn multiplier_rings() {
        assert_eq!(o(11).multiplier_ring().unwrap().conductor, 1);
        assert_eq!(o2(11).multiplier_ring().unwrap().conductor, 2);
        let f = QuadField::new(11).unwrap();
        let b = QuadIdeal::from_generators(f, &[QuadElement::integer(1), QuadElement::new(0, 2, 1)]).unwrap();
        assert_eq!(b.multiplier_ring().unwrap().conductor, 2);
        let z3 = QuadIdeal::from_generators(f, &[QuadElement::integer(1), QuadElement::new(0, 3, 1)]).unwrap();
        assert!(matches!(z3.multiplier_ring(), Err(Error::UnsupportedConductor)));
    }

    #[test]
    fn isomorphism_by_scaling() {
        let b = o2(11);
        assert_eq!(ideal_isomorphic(&b, &b).unwrap(), Some(QuadElement::integer(1)));
        let b3 = b.scale(&QuadElement::integer(3)).unwrap();
        let l = ideal_isomorphic(&b, &b3).unwrap().unwrap();
        assert!(l == QuadElement::integer(3) || l == QuadElement::integer(-3));
        let lam = QuadElement::new(2, 5, 7);
        let bl = b.scale(&lam).unwrap();
        let found = ideal_isomorphic(&b, &bl).unwrap().unwrap();
        assert_eq!(b.scale(&found).unwrap(), bl);
        assert!(ideal_isomorphic(&o(3), &o(3)).is_err());
    }

    /// `2a + Z x` for the three nonzero classes `x` of `a / 2a`.
    fn brute_index2(a: &QuadIdeal) -> Vec<QuadIdeal> {
        let f = a.field();
        let [u, v] = a.basis();
        let two = QuadElement::integer(2);
        let mut out = Vec::new();
        for (i, j) in [(1, 0), (0, 1), (1, 1)] {
            let x = QuadElement::new(i * u.x * v.den + j * v.x * u.den, i * u.y * v.den + j * v.y * u.den, u.den * v.den);
            out.push(QuadIdeal::from_generators(f, &[f.mul(&two, &u), f.mul(&two, &v), x]).unwrap());
        }
        out
    }

    fn check_subgroups(a: &QuadIdeal) {
        let subs = index2_subgroups(a).unwrap();
        let mut brute = brute_index2(a);
        for b in &subs {
            let pos = brute.iter().position(|c| c == b).expect("subgroup missing from brute-force set");
            brute.remove(pos);
            let ob = b.extend_to_maximal();
            let two_ob = ob.scale(&QuadElement::integer(2)).unwrap();
            assert_eq!(two_ob.index_in(b), Some(2));
            assert_eq!(b.index_in(&ob), Some(2));
            assert_ne!(b.multiplier_ring().unwrap().conductor, 1);
        }
        assert!(brute.is_empty());
    }

    #[test]
    fn subgroups_of_small_ideals() {
        check_subgroups(&o(11));
        let two_o = o(19).scale(&QuadElement::integer(2)).unwrap();
        let four_o = o(19).scale(&QuadElement::integer(4)).unwrap();
        for b in index2_subgroups(&two_o).unwrap() {
            assert_eq!(four_o.index_in(&b), Some(2));
        }
        check_subgroups(&two_o);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..25 {
            let a = random_o_ideal(43, 100, &mut rng).unwrap();
            assert!(a.covolume().0 <= 100);
            check_subgroups(&a);
        }
        assert!(index2_subgroups(&o2(11)).is_err());
        assert!(index2_subgroups(&o(7)).is_err());
    }

    #[test]
    fn class_numbers() {
        assert_eq!(class_number(-3).unwrap(), 1);
        assert_eq!(class_number(-4).unwrap(), 1);
        assert_eq!(class_number(-23).unwrap(), 3);
        assert_eq!(class_number(-236).unwrap(), 9);
        for p in [11, 19, 43, 67, 163] {
            assert_eq!(class_number(-p).unwrap(), 1);
        }
        assert!(class_number(-5).is_err());
        assert!(class_number(8).is_err());
        assert_eq!(verify_3h(59).unwrap(), ThreeHRow { p: 59, h: 3, h2: 9, ok: true });
        assert_eq!(verify_3h(11).unwrap(), ThreeHRow { p: 11, h: 1, h2: 3, ok: true });
        assert!(verify_3h(7).is_err());
    }

    #[test]
    fn sweep_csv_format() {
        let rows = verify_3h_sweep(60).unwrap();
        assert_eq!(rows.iter().map(|r| r.p).collect::<Vec<_>>(), vec![11, 19, 43, 59]);
        assert!(sweep_csv(&rows).starts_with("p,h,h2,ok\n11,1,3,true\n"));
    }

    proptest! {
        #[test]
        fn hnf_is_canonical(x1 in -50i128..50, y1 in -50i128..50, x2 in -50i128..50, y2 in -50i128..50, k in -5i128..5) {
            prop_assume!(x1 * y2 - x2 * y1 != 0);
            let a = hnf(&[(x1, y1), (x2, y2)]).unwrap();
            let b = hnf(&[(x1 + k * x2, y1 + k * y2), (x2, y2)]).unwrap();
            prop_assert_eq!(a, b);
            prop_assert_eq!((a[0].0 * a[1].1).abs(), (x1 * y2 - x2 * y1).abs());
        }

        #[test]
        fn no_index2_subgroup_is_an_o_ideal(n in 1i128..12, x in -10i128..10, y in -10i128..10) {
            let f = QuadField::new(11).unwrap();
            let a = QuadIdeal::o_ideal(f, &[QuadElement::integer(n), QuadElement::new(x, y, 1)]).unwrap();
            for b in index2_subgroups(&a).unwrap() {
                prop_assert_ne!(b.multiplier_ring().unwrap().conductor, 1);
            }
        }
    }
}
