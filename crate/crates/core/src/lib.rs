//! Exact verification toolkit for hyperelliptic jacobians whose Galois group
//! is `PSL2(F_q)` acting on the projective line.
//!
//! Every computable ingredient behind the absolute-simplicity criteria is
//! available here: exact scalar and polynomial arithmetic, the `PSL2(F_q)`
//! permutation action and its cycle-type census, the mod-2 permutation
//! module and its commutant, Frobenius-pattern Galois evidence, Goursat
//! subdirect products, ideals in the conductor-2 order of `Q(sqrt(-p))`,
//! and the `j`-invariant cubic `h_p`.

pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod finitefield;
pub mod galois;
pub mod modular;
pub mod permmod;
pub mod poly;
pub mod psl2;
pub mod quadorder;
pub mod report;

pub use error::{Error, Result};
