// Subdirect products of small permutation groups.

use simplejac::galois::{subdirect_products, SmallGroup};

pub fn main() {
    for (a, b) in [("S3", "S3"), ("A5", "S3"), ("C4", "C2"), ("D8", "C4")] {
        let (g1, g2) = (SmallGroup::from_name(a).unwrap(), SmallGroup::from_name(b).unwrap());
        let products = subdirect_products(&g1, &g2).unwrap();
        println!("{a} x {b}: {} subdirect products", products.len());
        for s in &products {
            println!(
                "  order {:3}  kernels {} and {}  full {}",
                s.order(),
                s.kernel1_order,
                s.kernel2_order,
                s.is_full_product(&g1, &g2)
            );
        }
    }
}
