// Prime and extension fields, and linear algebra over F_2.

use simplejac::finitefield::{ext_field, F2Matrix};

pub fn main() {
    let f9 = ext_field(3, 2).unwrap();
    println!("F_9 defining polynomial (low to high): {:?}", f9.defining_polynomial());
    let z = f9.primitive_element();
    let powers: Vec<u64> = (0..8).map(|k| f9.pow(z, k)).collect();
    println!("powers of the primitive element {z}: {powers:?}");
    println!("squares in F_9: {:?}", f9.elements().filter(|&x| f9.is_square(x)).collect::<Vec<_>>());

    let m = F2Matrix::from_rows(&[vec![1, 1, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 0]]);
    println!("rank {} over F_2", m.rank());
    for v in m.kernel() {
        println!("kernel vector {:?}", v.to_bits());
    }
}
