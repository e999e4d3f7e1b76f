use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyFp;
use crate::{Error, Result};

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn from_ints(c: &[BigInt]) -> Self {
        Self::new(c.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut q = vec![BigRational::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = &r[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn resultant(&self, other: &Self) -> BigRational {
        resultant(self, other)
    }

    /// `(-1)^(d(d-1)/2) res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> BigRational {
        let d = self.degree().unwrap_or(0);
        if d == 0 {
            return BigRational::one();
        }
        let r = resultant(self, &self.derivative()) / self.lc();
        if (d * (d - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Primitive integer polynomial `c·f` with positive leading coefficient,
    /// together with the multiplier `c`.
    pub fn primitive_part(&self) -> (Vec<BigInt>, BigRational) {
        if self.is_zero() {
            return (Vec::new(), BigRational::one());
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (prim, BigRational::new(l, g))
    }

    /// True iff `p` divides the denominator of some coefficient.
    pub fn p_divides_a_denominator(&self, p: u64) -> bool {
        let pb = BigInt::from(p);
        self.coeffs.iter().any(|c| (c.denom() % &pb).is_zero())
    }

    /// Reduction of the primitive integer multiple modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<PolyFp> {
        if self.p_divides_a_denominator(p) {
            return Err(Error::BadPrime { p, reason: "divides a coefficient denominator" });
        }
        let (prim, _) = self.primitive_part();
        let pb = BigInt::from(p);
        let coeffs = prim
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced residue fits u64"))
            .collect();
        Ok(PolyFp::new(p, coeffs))
    }

    /// Rational roots, found among `±a/b` with `a | f(0)`, `b | lc`.
    /// `None` when the constant or leading term is too large to factor.
    pub fn rational_roots(&self) -> Option<Vec<BigRational>> {
        let (prim, _) = self.primitive_part();
        let mut roots = Vec::new();
        let start = prim.iter().position(|c| !c.is_zero())?;
        if start > 0 {
            roots.push(BigRational::zero());
        }
        let tail = PolyQ::from_ints(&prim[start..]);
        if tail.degree() == Some(0) {
            return Some(roots);
        }
        let c0 = prim[start].abs().to_u64()?;
        let lc = prim.last()?.abs().to_u64()?;
        let (num_divs, den_divs) = (crate::exact::divisors(c0), crate::exact::divisors(lc));
        if num_divs.len() * den_divs.len() > 1 << 20 {
            return None;
        }
        let mut found = Vec::new();
        for &a in &num_divs {
            for &b in &den_divs {
                if a.gcd(&b) != 1 {
                    continue;
                }
                for s in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(a) * s, BigInt::from(b));
                    if tail.eval(&r).is_zero() {
                        found.push(r);
                    }
                }
            }
        }
        found.sort();
        roots.extend(found);
        Some(roots)
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let cs = crate::exact::format_rational(&mag);
            match i {
                0 => out.push_str(&cs),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&cs);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }
}

/// Resultant via the Euclidean remainder sequence over `Q`.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> BigRational {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigRational::zero();
    };
    if n == 0 {
        return pow_rat(&g.lc(), m);
    }
    if m == 0 {
        return pow_rat(&f.lc(), n);
    }
    let (_, r) = f.div_rem(g);
    let Some(k) = r.degree() else {
        return BigRational::zero();
    };
    let sub = pow_rat(&g.lc(), m - k) * resultant(g, &r);
    if (m * n) % 2 == 1 {
        -sub
    } else {
        sub
    }
}

fn pow_rat(r: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * r)
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn discriminant_small() {
        assert_eq!(PolyQ::from_i64s(&[-1, 0, 1]).discriminant(), int(4));
        assert_eq!(PolyQ::from_i64s(&[-2, 0, 0, 1]).discriminant(), int(-108));
        // b^2 - 4ac for a non-monic quadratic
        assert_eq!(PolyQ::from_i64s(&[1, 3, 2]).discriminant(), int(1));
    }

    #[test]
    fn squarefree() {
        assert!(!PolyQ::from_i64s(&[1, -2, 1]).is_squarefree());
        assert!(PolyQ::from_i64s(&[-2, 0, 0, 1]).is_squarefree());
    }

    #[test]
    fn primitive_part_clears_content() {
        let f = PolyQ::new(vec![rat(-1, 2), rat(3, 4), rat(-3, 2)]);
        let (prim, c) = f.primitive_part();
        assert_eq!(prim, vec![2.into(), BigInt::from(-3), 6.into()]);
        assert_eq!(f.scale(&c), PolyQ::from_ints(&prim));
    }

    #[test]
    fn rational_root_search() {
        let f = PolyQ::from_i64s(&[-3, 5, -2]); // -(2x-3)(x-1)
        assert_eq!(f.rational_roots().unwrap(), vec![int(1), rat(3, 2)]);
        assert_eq!(PolyQ::from_i64s(&[0, -1, 0, 1]).rational_roots().unwrap(), vec![int(0), int(-1), int(1)]);
        assert!(PolyQ::from_i64s(&[-2, 0, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn division_identity() {
        let f = PolyQ::new(vec![rat(1, 3), int(2), rat(-5, 7), int(1), int(4)]);
        let g = PolyQ::new(vec![int(3), rat(1, 2), int(2)]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn display() {
        assert_eq!(PolyQ::from_i64s(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
        assert_eq!(PolyQ::new(vec![int(1), rat(-1, 2)]).to_string(), "-1/2*x + 1");
    }
}
