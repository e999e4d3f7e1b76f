// Cycle types of PSL2(F_q) on the projective line and the SL2 degree list.

use simplejac::psl2::{burnside_pair_orbits, cycle_type_census, is_perfect, psl2_order, sl2_degree_census};

pub fn main() {
    for q in [5, 7, 9, 11, 13] {
        let census = cycle_type_census(q).unwrap();
        println!("q = {q}: order {}, pair orbits {}", psl2_order(q), burnside_pair_orbits(&census));
        for (t, n) in &census {
            println!("  {t}: {n}");
        }
        println!("  SL2 degrees: {:?}", sl2_degree_census(q).unwrap());
    }
    println!("PSL2(F_7) perfect: {}", is_perfect(7).unwrap());
}
