// Rationals, rational functions in a formal variable, and primality.

use simplejac::exact::{format_rational, is_prime_u64, next_prime, rat, ratfun_eval, RationalFunction, Scalar};

pub fn main() {
    let x = rat(-3456, 539);
    println!("x = {}, x^2 = {}", format_rational(&x), format_rational(&x.pow(2)));

    // 1458^2 a^2 / (a - 1728)^3 as an element of Q(a)
    let a = RationalFunction::alpha();
    let shifted = a.sub_ref(&RationalFunction::from_int(1728));
    let f = RationalFunction::from_int(1458 * 1458).mul_ref(&a.pow(2)).div_checked(&shifted.pow(3)).unwrap();
    println!("f(a) = {f}");
    println!("f(-32768) = {}", format_rational(&ratfun_eval(&f, &rat(-32768, 1)).unwrap()));
    println!("f(1728) -> {}", ratfun_eval(&f, &rat(1728, 1)).unwrap_err());

    let p = next_prime(1_000_000_000_000);
    println!("next prime after 10^12: {p} (prime: {})", is_prime_u64(p));
}
