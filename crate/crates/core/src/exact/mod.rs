//! Exact scalars: big integers and rationals (from `num`), the field `Q(α)`
//! of rational functions in a formal variable, and 64-bit primality.

mod primes;
mod ratfun;
mod scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use primes::{divisors, factor_u64, is_prime, is_prime_u64, next_prime, primes_from};
pub use ratfun::{ratfun_eval, RationalFunction};
pub use scalar::Scalar;

use num_traits::{One, Zero};

/// Rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse `"n"` or `"n/d"` into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Canonical string form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True iff the rational is the square of a rational.
pub fn is_rational_square(r: &BigRational) -> bool {
    use num_traits::Signed;
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    is_sq(r.numer()) && is_sq(r.denom())
}
