// Index-2 sublattices of ideals in Q(sqrt(-p)) and the relation h(-4p) = 3 h(-p).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplejac::quadorder::{
    class_number, ideal_isomorphic, index2_subgroups, random_o_ideal, two_is_inert, verify_3h_sweep, QuadOrder,
};

pub fn main() {
    let p = 11;
    println!("2 inert in Q(sqrt(-{p})): {}", two_is_inert(p).unwrap());
    let o = QuadOrder::maximal(p).unwrap().as_ideal();
    let subs = index2_subgroups(&o).unwrap();
    for b in &subs {
        println!("  {b}: multiplier ring conductor {}", b.multiplier_ring().unwrap().conductor);
    }
    println!("first two isomorphic: {:?}", ideal_isomorphic(&subs[0], &subs[1]).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random_o_ideal(43, 100, &mut rng).unwrap();
    println!("random ideal {a} of norm {}: subgroups {:?}", a.covolume().0, index2_subgroups(&a).unwrap().map(|b| b.to_string()));

    println!("h(-23) = {}, h(-59) = {}, h(-236) = {}", class_number(-23).unwrap(), class_number(-59).unwrap(), class_number(-236).unwrap());
    let rows = verify_3h_sweep(200).unwrap();
    for r in rows {
        println!("  p = {:3}: h = {}, h2 = {}, ok {}", r.p, r.h, r.h2, r.ok);
    }
}
