use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::{Error, Result};

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin; the first twelve primes as witnesses are
/// sufficient for every `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n == w {
            return true;
        }
        if n % w == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of a non-negative big integer. Inputs of 2^64 and above are
/// rejected instead of being answered probabilistically.
pub fn is_prime(n: &BigInt) -> Result<bool> {
    if n.is_negative() {
        return Err(Error::Precondition(format!("is_prime needs n >= 0, got {n}")));
    }
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(Error::PrimalityRange(n.to_string())),
    }
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Iterator over primes `>= start`.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    let first = if start <= 2 { 2 } else { next_prime(start - 1) };
    std::iter::successors(Some(first), |&p| Some(next_prime(p)))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m <= 1 {
            continue;
        }
        let mut m = m;
        for p in [2u64, 3, 5, 7, 11, 13] {
            while m % p == 0 {
                primes.push(p);
                m /= p;
            }
        }
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            primes.push(m);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = ds.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn small_values() {
        assert!(is_prime(&BigInt::from(2)).unwrap());
        assert!(!is_prime(&BigInt::from(91)).unwrap());
        assert!(is_prime(&BigInt::from(163)).unwrap());
        for n in 0..5000 {
            assert_eq!(is_prime_u64(n), naive(n), "{n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 3215031751, 3825123056546413051] {
            assert!(!is_prime_u64(n));
        }
        assert!(is_prime_u64(18446744073709551557));
    }

    #[test]
    fn range_limits() {
        let big = BigInt::from(u64::MAX) + 1;
        assert!(matches!(is_prime(&big), Err(Error::PrimalityRange(_))));
        assert!(is_prime(&BigInt::from(-3)).is_err());
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(2 * 2 * 3 * 1_000_003), vec![(2, 2), (3, 1), (1_000_003, 1)]);
        let n = 600851475143u64;
        let f = factor_u64(n);
        assert_eq!(f.iter().map(|(p, e)| p.pow(*e)).product::<u64>(), n);
        assert!(f.iter().all(|(p, _)| is_prime_u64(*p)));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(primes_from(8).take(3).collect::<Vec<_>>(), vec![11, 13, 17]);
    }
}
