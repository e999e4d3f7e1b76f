use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field elements usable as polynomial coefficients in the generic cubic and
/// `j`-invariant code: `Q` itself and the formal field `Q(α)`.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv_checked(&self) -> Option<Self>;

    fn div_checked(&self, other: &Self) -> Option<Self> {
        other.inv_checked().map(|i| self.mul_ref(&i))
    }

    fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul_ref(self);
        }
        r
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_checked(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
