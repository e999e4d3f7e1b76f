use serde::{Deserialize, Serialize};

use crate::finitefield::prime_power;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GroupFamily {
    /// `Sp_{2n}(q)`; `n` is the half-dimension.
    Sp,
    /// `Ω^+_{2n}(q)`; `n` is the half-dimension.
    OmegaPlus,
    /// `Ω^-_{2n}(q)`.
    OmegaMinus,
    /// `L_n(q) = PSL_n(F_q)`; `n` is the dimension.
    L,
    G2,
    Psl2,
    Other,
}

/// A finite group named by its Lie-type family and parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    pub n: u32,
    pub q: u64,
    /// Commutator subgroup of the named group (only changes `Sp_4(2)`).
    pub derived: bool,
}

impl GroupDescriptor {
    pub fn new(family: GroupFamily, n: u32, q: u64) -> Self {
        Self { family, n, q, derived: false }
    }

    pub fn derived(mut self) -> Self {
        self.derived = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if prime_power(self.q).is_none() {
            return Err(Error::MalformedDescriptor(format!("q = {} is not a prime power", self.q)));
        }
        let needs_rank = matches!(self.family, GroupFamily::Sp | GroupFamily::OmegaPlus | GroupFamily::OmegaMinus | GroupFamily::L);
        if needs_rank && self.n == 0 {
            return Err(Error::MalformedDescriptor("rank parameter must be positive".into()));
        }
        Ok(())
    }
}

/// The characteristic-2 groups of Lie type excluded from the
/// projective-representation bound:
///
/// 1. `Sp_{2n}(q)`, `q` even, `n ≥ 2`, except `Sp_4(2)'` and `Sp_6(2)`;
/// 2. `Ω^±_{2n}(q)`, `q` even, `n ≥ 4`, except `Ω^+_8(2)`;
/// 3. `L_4(q)`, `q` even, except `L_4(2)`;
/// 4. `G_2(q)` with `q = 2^{2e}`, except `G_2(4)`.
pub fn is_ftkl_exceptional(g: &GroupDescriptor) -> Result<bool> {
    g.validate()?;
    let even = g.q % 2 == 0;
    let (n, q) = (g.n, g.q);
    Ok(match g.family {
        GroupFamily::Sp => even && n >= 2 && !(n == 2 && q == 2 && g.derived) && !(n == 3 && q == 2),
        GroupFamily::OmegaPlus => even && n >= 4 && !(n == 4 && q == 2),
        GroupFamily::OmegaMinus => even && n >= 4,
        GroupFamily::L => even && n == 4 && q != 2,
        GroupFamily::G2 => even && q.trailing_zeros() % 2 == 0 && q != 4,
        GroupFamily::Psl2 | GroupFamily::Other => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupFamily::*;

    #[test]
    fn listed_examples() {
        assert!(!is_ftkl_exceptional(&GroupDescriptor::new(Sp, 2, 2).derived()).unwrap());
        assert!(is_ftkl_exceptional(&GroupDescriptor::new(Sp, 3, 4)).unwrap());
        assert!(!is_ftkl_exceptional(&GroupDescriptor::new(Psl2, 2, 11)).unwrap());
    }

    #[test]
    fn malformed() {
        assert!(is_ftkl_exceptional(&GroupDescriptor::new(Sp, 2, 6)).is_err());
        assert!(is_ftkl_exceptional(&GroupDescriptor::new(L, 0, 4)).is_err());
        assert!(is_ftkl_exceptional(&GroupDescriptor::new(G2, 0, 1)).is_err());
    }

    #[test]
    fn g2_outside_square_powers_is_false() {
        assert!(!is_ftkl_exceptional(&GroupDescriptor::new(G2, 0, 8)).unwrap());
        assert!(!is_ftkl_exceptional(&GroupDescriptor::new(G2, 0, 2)).unwrap());
        assert!(!is_ftkl_exceptional(&GroupDescriptor::new(G2, 0, 9)).unwrap());
        assert!(is_ftkl_exceptional(&GroupDescriptor::new(G2, 0, 16)).unwrap());
    }
}
