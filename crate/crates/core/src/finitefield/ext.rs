use super::PrimeField;
use crate::exact::factor_u64;
use crate::poly::PolyFp;
use crate::{Error, Result};

/// Largest field size accepted by [`ext_field`].
pub const MAX_FIELD_SIZE: u128 = 1 << 32;

/// `F_q = F_p[t]/(m(t))`. Elements are encoded as integers
/// `sum a_i p^i` of their coefficient vectors, so `0..q` enumerates the
/// field and codes below `p` are the prime subfield.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtField {
    base: PrimeField,
    k: u32,
    q: u64,
    /// Monic defining polynomial, lowest degree first, length `k + 1`.
    modulus: Vec<u64>,
}

/// Builds `F_{p^k}` with the smallest monic irreducible defining polynomial,
/// ordering candidates by their code `sum a_i p^i` over the non-leading
/// coefficients.
pub fn ext_field(p: u64, k: u32) -> Result<ExtField> {
    let base = PrimeField::new(p)?;
    if k == 0 {
        return Err(Error::Precondition("extension degree must be at least 1".into()));
    }
    let q = (p as u128).checked_pow(k).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(Error::FieldTooLarge(
        (p as u128).saturating_pow(k),
    ))?;
    let q = q as u64;
    let modulus = (0..q)
        .map(|code| {
            let mut c = digits(code, p, k as usize);
            c.push(1);
            c
        })
        .find(|c| PolyFp::with_field(base, c.clone()).is_irreducible())
        .expect("irreducible polynomials exist in every degree");
    Ok(ExtField { base, k, q, modulus })
}

fn digits(mut code: u64, p: u64, k: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(k);
    for _ in 0..k {
        d.push(code % p);
        code /= p;
    }
    d
}

impl ExtField {
    /// The field of size `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = super::prime_power(q).ok_or(Error::Precondition(format!("{q} is not a prime power")))?;
        ext_field(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn defining_polynomial(&self) -> &[u64] {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        self.base
    }

    fn decode(&self, a: u64) -> Vec<u64> {
        digits(a, self.base.modulus(), self.k as usize)
    }

    fn encode(&self, d: &[u64]) -> u64 {
        let p = self.base.modulus();
        d.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    /// Image of the integer `n` in the prime subfield.
    pub fn from_int(&self, n: i64) -> u64 {
        self.base.reduce(n as i128)
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return self.base.add(a, b);
        }
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(&u, &v)| self.base.add(u, v)).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return self.base.neg(a);
        }
        let s: Vec<u64> = self.decode(a).iter().map(|&u| self.base.neg(u)).collect();
        self.encode(&s)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return self.base.mul(a, b);
        }
        let k = self.k as usize;
        let f = self.base;
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &u) in x.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(u, v));
            }
        }
        // reduce with t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                prod[i - k + j] = f.sub(prod[i - k + j], f.mul(c, self.modulus[j]));
            }
        }
        prod.truncate(k);
        self.encode(&prod)
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.q - 2))
    }

    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.characteristic())
    }

    /// Quadratic-residue test for odd `q`.
    pub fn is_square(&self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.q - 1) / 2) == 1
    }

    /// Smallest-code generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        let n = self.q - 1;
        let primes: Vec<u64> = factor_u64(n).into_iter().map(|(r, _)| r).collect();
        (1..self.q)
            .find(|&g| primes.iter().all(|r| self.pow(g, n / r) != 1))
            .expect("multiplicative group is cyclic")
    }
}
