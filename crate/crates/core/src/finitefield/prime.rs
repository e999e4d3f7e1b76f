use crate::exact::is_prime_u64;
use crate::{Error, Result};

/// `Z/pZ` for a word-sized prime `p`; elements are reduced `u64`s.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    /// Caller guarantees primality.
    pub(crate) fn new_unchecked(p: u64) -> Self {
        Self { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: i128) -> u64 {
        a.rem_euclid(self.p as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
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
        (a % self.p != 0).then(|| self.pow(a, self.p - 2))
    }
}
