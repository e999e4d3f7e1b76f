//! Galois-group evidence from Frobenius degree patterns, and exact
//! Goursat enumeration of subdirect products of small permutation groups.

mod evidence;
mod goursat;
mod group;

pub use evidence::{
    chebotarev_expected, galois_evidence, transitivity_witnessed, EvidenceConfig, EvidenceReport, EvidenceVerdict,
    PatternCount, Witness, DEFAULT_PRIME_BOUND, DEFAULT_SAMPLE_SIZE, DEFAULT_TV_THRESHOLD,
};
pub use goursat::{subdirect_products, SubdirectProduct, MAX_PRODUCT_ORDER};
pub use group::{Perm, SmallGroup, MAX_POINTS};
