//! Certified evaluation of `j(w)` at `w = (-1 + i sqrt(p))/2` from its
//! `q`-expansion, using fixed-point balls (midpoint and radius in units of
//! `2^-bits`).

use std::f64::consts::{LN_2, PI};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::is_prime_u64;
use crate::{Error, Result};

pub const MIN_PRECISION_BITS: u32 = 64;
const MAX_PRECISION_BITS: u32 = 1 << 16;
/// Radius that must be certified on the final value.
const TARGET_RADIUS_LOG2: i32 = -16;

/// Coefficients `a_0, a_1, ...` of `q j(q) = sum a_n q^n`, so `a_0 = 1`,
/// `a_1 = 744`, `a_2 = 196884`.
pub fn j_coefficients(len: usize) -> Vec<BigInt> {
    let n = len.max(1);
    let mut e4 = vec![BigInt::zero(); n];
    e4[0] = BigInt::one();
    for (k, c) in e4.iter_mut().enumerate().skip(1) {
        let sigma3: u128 = (1..=k as u128).filter(|d| k as u128 % d == 0).map(|d| d * d * d).sum();
        *c = BigInt::from(240u32) * BigInt::from(sigma3);
    }
    let e4_cubed = series_mul(&series_mul(&e4, &e4, n), &e4, n);
    // prod (1 - q^k), then its 24th power
    let mut eta = vec![BigInt::zero(); n];
    eta[0] = BigInt::one();
    for k in 1..n {
        for i in (k..n).rev() {
            let t = eta[i - k].clone();
            eta[i] -= t;
        }
    }
    let mut eta24 = vec![BigInt::zero(); n];
    eta24[0] = BigInt::one();
    for _ in 0..24 {
        eta24 = series_mul(&eta24, &eta, n);
    }
    // divide by a series with constant term 1
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut acc = e4_cubed[i].clone();
        for j in 1..=i {
            acc -= &eta24[j] * &out[i - j];
        }
        out[i] = acc;
    }
    out.truncate(len);
    out
}

fn series_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// A real number `mid * 2^-bits` known to within `rad * 2^-bits`.
#[derive(Clone, Debug)]
struct Ball {
    mid: BigInt,
    rad: BigInt,
}

struct Fixed {
    bits: u32,
}

impl Fixed {
    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    fn exact(&self, n: &BigInt) -> Ball {
        Ball { mid: n << self.bits, rad: BigInt::zero() }
    }

    fn add(&self, x: &Ball, y: &Ball) -> Ball {
        Ball { mid: &x.mid + &y.mid, rad: &x.rad + &y.rad }
    }

    fn neg(&self, x: &Ball) -> Ball {
        Ball { mid: -&x.mid, rad: x.rad.clone() }
    }

    fn mul(&self, x: &Ball, y: &Ball) -> Ball {
        let mid = (&x.mid * &y.mid) >> self.bits;
        let err = x.mid.abs() * &y.rad + y.mid.abs() * &x.rad + &x.rad * &y.rad;
        Ball { mid, rad: ceil_shift(&err, self.bits) + 1u32 }
    }

    fn div_int(&self, x: &Ball, n: u64) -> Ball {
        Ball { mid: &x.mid / n, rad: &x.rad / n + 1u32 }
    }

    /// `x / y`, requiring `0` outside the ball `y`.
    fn div(&self, x: &Ball, y: &Ball) -> Result<Ball> {
        let ymin = y.mid.abs() - &y.rad;
        if ymin.sign() != Sign::Plus {
            return Err(Error::PrecisionTooLow { bits: self.bits });
        }
        let mid = (&x.mid << self.bits) / &y.mid;
        // |x/y - mx/my| <= (rx + |mx/my| ry) / (|my| - ry)
        let q_abs = mid.abs() + 1u32;
        let num = (&x.rad << self.bits) + q_abs * &y.rad;
        let (d, r) = num.div_rem(&ymin);
        Ok(Ball { mid, rad: d + u32::from(!r.is_zero()) + 1u32 })
    }

    /// Upper bound for `|x|` as an `f64`.
    fn abs_upper(&self, x: &Ball) -> f64 {
        let v = x.mid.abs() + &x.rad + 1u32;
        v.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-(self.bits as i32))
    }

    /// `arctan(1/n)` for an integer `n >= 2`.
    fn arctan_inv(&self, n: u64) -> Ball {
        let n2 = BigInt::from(n) * n;
        let mut power = self.one() / n;
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        let mut terms = 0u32;
        while !power.is_zero() {
            let term = &power / (2 * k + 1);
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &n2;
            k += 1;
            terms += 1;
        }
        // each step truncates at most one unit; the omitted alternating tail is below one unit
        Ball { mid: sum, rad: BigInt::from(2 * terms + 2) }
    }

    fn pi(&self) -> Ball {
        let a = self.arctan_inv(5);
        let b = self.arctan_inv(239);
        let sixteen = self.exact(&BigInt::from(16));
        let four = self.exact(&BigInt::from(4));
        let x = self.mul(&sixteen, &a);
        let y = self.mul(&four, &b);
        self.add(&x, &self.neg(&y))
    }

    fn sqrt_int(&self, n: u64) -> Ball {
        let s = (BigInt::from(n) << (2 * self.bits)).sqrt();
        Ball { mid: s, rad: BigInt::one() }
    }

    /// `exp(-x)` for a nonnegative ball `x`.
    fn exp_neg(&self, x: &Ball) -> Ball {
        let bound = self.abs_upper(x);
        let halvings = if bound < 0.5 { 0 } else { (bound / 0.5).log2().ceil() as u32 };
        let y = Ball { mid: &x.mid >> halvings, rad: (&x.rad >> halvings) + 1u32 };
        let minus_y = self.neg(&y);
        let mut term = self.exact(&BigInt::one());
        let mut sum = term.clone();
        let mut n = 1u64;
        loop {
            term = self.div_int(&self.mul(&term, &minus_y), n);
            sum = self.add(&sum, &term);
            let size = term.mid.abs() + &term.rad;
            if size <= BigInt::one() {
                // |y| <= 1/2: the remaining tail is at most the last term
                sum.rad += size + 1u32;
                break;
            }
            n += 1;
        }
        for _ in 0..halvings {
            sum = self.mul(&sum, &sum);
        }
        sum
    }

    fn radius_log2(&self, x: &Ball) -> f64 {
        match x.rad.to_f64() {
            Some(r) if r > 0.0 => r.log2() - self.bits as f64,
            Some(_) => f64::NEG_INFINITY,
            None => f64::INFINITY,
        }
    }

    fn to_decimal(&self, x: &Ball, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = (&x.mid * &scale) >> self.bits;
        let neg = scaled.is_negative();
        let (ip, fp) = scaled.abs().div_rem(&scale);
        let sign = if neg { "-" } else { "" };
        format!("{sign}{ip}.{fp:0>digits$}", fp = fp.to_string())
    }
}

fn ceil_shift(x: &BigInt, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    (x + &one - 1u32) >> bits
}

/// Certified approximation of `j(w)`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct JNumeric {
    pub p: u64,
    pub precision_bits: u32,
    /// Number of `q`-expansion coefficients used.
    pub terms: usize,
    /// Midpoint with 12 decimal places.
    pub value: String,
    /// `log2` of the certified error radius.
    pub radius_log2: f64,
    /// The integer within `1e-6` of the whole ball, if any.
    pub integer: Option<String>,
}

impl JNumeric {
    pub fn integer_value(&self) -> Option<BigInt> {
        self.integer.as_ref().and_then(|s| s.parse().ok())
    }
}

/// Log2 bound on `sum_{k > kmax} e^{4 pi sqrt k} e^{-k l}`, valid when the
/// ratio of consecutive terms stays below one.
fn tail_log2(kmax: usize, l: f64) -> Option<f64> {
    let k = (kmax + 1) as f64;
    let ratio_log = 2.0 * PI / k.sqrt() - l;
    if ratio_log >= -0.1 {
        return None;
    }
    let first = 4.0 * PI * k.sqrt() - k * l;
    Some((first - (1.0 - ratio_log.exp()).ln()) / LN_2)
}

/// `j(w)` at `w = (-1 + i sqrt(p))/2`, i.e. at `q = -exp(-pi sqrt p)`.
///
/// The truncation tail uses `c_k <= exp(4 pi sqrt k)` for the coefficients
/// of `j`, which holds for every computed `k` (checked here) and
/// asymptotically.
pub fn j_from_tau(p: u64, precision_bits: u32) -> Result<JNumeric> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::Precondition(format!("p = {p} is not 3 mod 4")));
    }
    if !(MIN_PRECISION_BITS..=MAX_PRECISION_BITS).contains(&precision_bits) {
        return Err(Error::PrecisionTooLow { bits: precision_bits });
    }
    let fx = Fixed { bits: precision_bits };

    // -log|q| = pi sqrt p, slightly underestimated for the tail bound
    let l = PI * (p as f64).sqrt() * (1.0 - 1e-9);
    let mut kmax = 2;
    loop {
        match tail_log2(kmax, l) {
            Some(t) if t <= -(precision_bits as f64) - 2.0 => break,
            _ => kmax += 1,
        }
    }
    let coeffs = j_coefficients(kmax + 2);
    for (k, c) in coeffs.iter().enumerate().skip(2) {
        let bound = 4.0 * PI * ((k - 1) as f64).sqrt() / LN_2;
        if c.bits() as f64 > bound + 1.0 {
            return Err(Error::Precondition(format!("coefficient c_{} exceeds the tail bound", k - 1)));
        }
    }

    let x = fx.mul(&fx.pi(), &fx.sqrt_int(p));
    let q = fx.neg(&fx.exp_neg(&x));
    // c_1 q + ... + c_kmax q^kmax by Horner, then 1/q + 744
    let mut acc = fx.exact(&coeffs[kmax + 1]);
    for k in (2..=kmax).rev() {
        acc = fx.add(&fx.mul(&acc, &q), &fx.exact(&coeffs[k]));
    }
    acc = fx.mul(&acc, &q);
    let inv_q = fx.div(&fx.exact(&BigInt::one()), &q)?;
    let mut j = fx.add(&fx.add(&inv_q, &fx.exact(&coeffs[1])), &acc);
    // tail: 2^(-bits-2) is below one unit
    j.rad += 1u32;

    let radius_log2 = fx.radius_log2(&j);
    if radius_log2 >= TARGET_RADIUS_LOG2 as f64 {
        return Err(Error::PrecisionTooLow { bits: precision_bits });
    }
    let one = fx.one();
    let shifted: BigInt = &j.mid + (&one >> 1);
    let (n, frac) = shifted.div_mod_floor(&one);
    let offset: BigInt = frac - (&one >> 1);
    let dist = offset.abs() + &j.rad;
    let integer = (dist * 1_000_000u32 <= one).then(|| n.to_string());
    Ok(JNumeric { p, precision_bits, terms: kmax, value: fx.to_decimal(&j, 12), radius_log2, integer })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let c = j_coefficients(5);
        let want: Vec<BigInt> =
            [1i64, 744, 196884, 21493760, 864299970].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn pi_and_exp() {
        let fx = Fixed { bits: 128 };
        let pi = fx.pi();
        assert!(fx.to_decimal(&pi, 30).starts_with("3.141592653589793238462643383279"));
        let e1 = fx.exp_neg(&fx.exact(&BigInt::from(1)));
        assert!(fx.to_decimal(&e1, 30).starts_with("0.367879441171442321595523770161"));
        assert!(fx.radius_log2(&e1) < -110.0);
    }

    #[test]
    fn integral_values() {
        let expected = [
            (3, "0"),
            (11, "-32768"),
            (19, "-884736"),
            (43, "-884736000"),
            (67, "-147197952000"),
            (163, "-262537412640768000"),
        ];
        for (p, v) in expected {
            let j = j_from_tau(p, 256).unwrap();
            assert_eq!(j.integer.as_deref(), Some(v), "p = {p}");
            assert!(j.radius_log2 < -16.0);
        }
    }

    #[test]
    fn low_precision_is_refused() {
        assert!(matches!(j_from_tau(163, 64), Err(Error::PrecisionTooLow { .. })));
        assert!(matches!(j_from_tau(11, 32), Err(Error::PrecisionTooLow { .. })));
        assert!(j_from_tau(13, 128).is_err());
        assert!(j_from_tau(15, 128).is_err());
    }

    #[test]
    fn non_integral_value_is_negative() {
        let j = j_from_tau(23, 256).unwrap();
        assert!(j.integer.is_none());
        assert!(j.value.starts_with('-'));
    }

    #[test]
    fn doubling_precision_keeps_candidate() {
        for p in [11, 43, 67] {
            let a = j_from_tau(p, 96).unwrap();
            let b = j_from_tau(p, 192).unwrap();
            assert!(a.integer.is_some());
            assert_eq!(a.integer, b.integer);
        }
    }
}
