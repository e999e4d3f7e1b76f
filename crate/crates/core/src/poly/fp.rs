use rand::Rng;

use crate::finitefield::PrimeField;

/// Dense polynomial over `F_p`, lowest degree first, coefficients in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyFp {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl PolyFp {
    /// `p` must be prime; coefficients are reduced on entry.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        Self::with_field(PrimeField::new_unchecked(p), coeffs)
    }

    pub fn with_field(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % field.modulus()).collect();
        let mut s = Self { field, coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn from_raw(&self, coeffs: Vec<u64>) -> Self {
        let mut s = Self { field: self.field, coeffs };
        s.trim();
        s
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn one(&self) -> Self {
        self.from_raw(vec![1])
    }

    pub fn x(&self) -> Self {
        self.from_raw(vec![0, 1])
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let f = self.field;
        self.from_raw((0..n).map(|i| f.add(self.c(i), o.c(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let f = self.field;
        self.from_raw((0..n).map(|i| f.sub(self.c(i), o.c(i))).collect())
    }

    fn c(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.from_raw(Vec::new());
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        self.from_raw(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        self.from_raw(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => self.scale(self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let f = self.field;
        let inv = f.inv(d.lc()).expect("nonzero leading coefficient");
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (self.from_raw(Vec::new()), self.clone());
        };
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = f.mul(r[i + dd], inv);
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        (self.from_raw(q), self.from_raw(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        self.from_raw(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, i as u64 % f.modulus())).collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = self.one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Squarefree input split by degree: returns `(d, product of all
    /// irreducible factors of degree d)` pairs.
    pub fn distinct_degree(&self) -> Vec<(usize, PolyFp)> {
        let p = self.modulus() as u128;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = self.x();
        let mut h = x.rem(&f);
        let mut d = 0;
        while let Some(deg) = f.degree() {
            if deg < 2 * (d + 1) {
                if deg > 0 {
                    out.push((deg, f.clone()));
                }
                break;
            }
            d += 1;
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree() > Some(0) {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        out
    }

    /// Cantor-Zassenhaus equal-degree split of a squarefree product of
    /// irreducible factors all of degree `d`.
    pub fn equal_degree<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<PolyFp> {
        let f = self.monic();
        let n = f.degree().unwrap_or(0);
        if n <= d {
            return vec![f];
        }
        let p = self.modulus();
        loop {
            let a = self.from_raw((0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = a.gcd(&f);
            let candidate = if g.degree() > Some(0) {
                g
            } else if p == 2 {
                // absolute trace a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(&f);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(&f);
                    acc = acc.add(&t);
                }
                acc.gcd(&f)
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
                let mut t = a.rem(&f);
                let mut norm = t.clone();
                for _ in 1..d {
                    t = t.pow_mod(p as u128, &f);
                    norm = norm.mul(&t).rem(&f);
                }
                norm.pow_mod(((p - 1) / 2) as u128, &f).sub(&self.one()).gcd(&f)
            };
            let cd = candidate.degree().unwrap_or(0);
            if cd > 0 && cd < n {
                let rest = f.div_rem(&candidate).0;
                let mut out = candidate.equal_degree(d, rng);
                out.extend(rest.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted by
    /// degree then coefficients.
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<PolyFp> {
        let mut out: Vec<PolyFp> =
            self.distinct_degree().into_iter().flat_map(|(d, g)| g.equal_degree(d, rng)).collect();
        out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
        out
    }

    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let f = self.monic();
        let x = self.x();
        let p = self.modulus() as u128;
        let mut h = x.rem(&f);
        for _ in 1..=n / 2 {
            h = h.pow_mod(p, &f);
            if h.sub(&x).gcd(&f).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}
