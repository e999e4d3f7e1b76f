// Endomorphisms of the mod-2 permutation module of PSL2(F_q).

use simplejac::permmod::{build_q_module, commutant, verify_f4};

pub fn main() {
    for q in [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29] {
        let m = build_q_module(q).unwrap();
        let c = commutant(&m);
        let f4 = verify_f4(q).map_or_else(|e| format!("n/a ({e})"), |b| b.to_string());
        println!("q = {q:2}: dim {:2}, commutant {:?} (dim {}), F4 check {f4}", m.dimension, c.classification, c.dimension);
    }
}
