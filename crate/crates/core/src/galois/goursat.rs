use std::collections::BTreeSet;

use super::group::{Quotient, SmallGroup};
use crate::{Error, Result};

/// Largest `|G1|·|G2|` accepted by [`subdirect_products`].
pub const MAX_PRODUCT_ORDER: usize = 100_000;

/// A subgroup of `G1 × G2` with surjective projections, built as the
/// preimage of the graph of `γ: G1/N1 ≅ G2/N2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdirectProduct {
    /// Order of `N1 = ker(H → G2)`.
    pub kernel1_order: usize,
    /// Order of `N2 = ker(H → G1)`.
    pub kernel2_order: usize,
    /// Sorted `(g1, g2)` element-index pairs.
    pub elements: Vec<(usize, usize)>,
}

impl SubdirectProduct {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn quotient_order(&self, g1: &SmallGroup) -> usize {
        g1.order() / self.kernel1_order
    }

    pub fn is_full_product(&self, g1: &SmallGroup, g2: &SmallGroup) -> bool {
        self.order() == g1.order() * g2.order()
    }
}

/// Every subdirect product of `g1 × g2`, deduplicated, ordered by size
/// then elements.
pub fn subdirect_products(g1: &SmallGroup, g2: &SmallGroup) -> Result<Vec<SubdirectProduct>> {
    let total = g1.order() * g2.order();
    if total > MAX_PRODUCT_ORDER {
        return Err(Error::GroupTooLarge(total));
    }
    let normals1 = g1.normal_subgroups();
    let normals2 = g2.normal_subgroups();
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut out = Vec::new();
    for n1 in &normals1 {
        let q1 = Quotient::new(g1, n1);
        for n2 in &normals2 {
            if g2.order() / n2.len() != q1.order {
                continue;
            }
            let q2 = Quotient::new(g2, n2);
            for iso in q1.isomorphisms(&q2) {
                let mut elements = Vec::with_capacity(n1.len() * g2.order());
                for a in 0..g1.order() {
                    let target = iso[q1.label[a]];
                    for b in 0..g2.order() {
                        if q2.label[b] == target {
                            elements.push((a, b));
                        }
                    }
                }
                if seen.insert(elements.clone()) {
                    out.push(SubdirectProduct { kernel1_order: n1.len(), kernel2_order: n2.len(), elements });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(out)
}
