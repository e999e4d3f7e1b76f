// Certified j-values at (-1 + sqrt(-p))/2 and the Galois group of h_p.

use num_rational::BigRational;
use simplejac::modular::{build_hp, gal_s3_verdict, hp_discriminant_identity, j_from_tau};

pub fn main() {
    println!("discriminant identity holds in Q(a): {}", hp_discriminant_identity());
    for p in [3, 7, 11, 19, 23, 43, 67, 163] {
        let j = j_from_tau(p, 256).unwrap();
        print!("p = {p:3}: j ~ {} (radius 2^{:.0})", j.value, j.radius_log2);
        match j.integer_value() {
            Some(n) => {
                let h = build_hp(&BigRational::from_integer(n)).unwrap();
                println!(", integer; h_p = {h}, Galois {:?}", gal_s3_verdict(&h).unwrap());
            }
            None => println!(", not an integer"),
        }
    }
}
