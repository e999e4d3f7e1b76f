// Factor-degree patterns modulo primes and irreducibility certificates over Q.

use simplejac::families::build_f11;
use simplejac::exact::rat;
use simplejac::poly::{factor_degrees_mod_p, irreducible_over_q, is_good_prime, PolyQ};

pub fn main() {
    let f = build_f11(&rat(1, 1));
    println!("f = {f}");
    for p in [2, 3, 5, 7, 11, 13, 17, 19] {
        if is_good_prime(&f, p) {
            println!("p = {p:2}: degrees {}", factor_degrees_mod_p(&f, p).unwrap());
        } else {
            println!("p = {p:2}: bad reduction");
        }
    }
    println!("irreducibility: {:?}", irreducible_over_q(&f));

    let x4p1 = PolyQ::from_i64s(&[1, 0, 0, 0, 1]);
    println!("x^4 + 1: {:?}", irreducible_over_q(&x4p1));
    let cubic = PolyQ::from_i64s(&[-6, 11, -6, 1]);
    println!("x^3 - 6x^2 + 11x - 6: {:?}", irreducible_over_q(&cubic));
}
