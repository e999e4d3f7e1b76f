//! Prime fields, small extension fields `F_{p^k}` and bit-packed linear
//! algebra over `F_2`.

mod ext;
mod f2;
mod prime;

pub use ext::{ext_field, ExtField};
pub use f2::{f2_solve_kernel, F2Matrix, F2Vector, MAX_F2_DIM};
pub use prime::PrimeField;

use crate::exact::{factor_u64, is_prime_u64};

/// `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor_u64(q);
    (f.len() == 1 && is_prime_u64(f[0].0)).then(|| f[0])
}
