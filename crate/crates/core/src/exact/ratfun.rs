use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Scalar;
use crate::poly::PolyQ;
use crate::{Error, Result};

/// Element of `Q(α)` with `α` transcendental: a reduced quotient of
/// polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: PolyQ,
    den: PolyQ,
}

impl RationalFunction {
    /// Builds `num/den` in lowest terms. Panics if `den` is zero.
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self { num, den: PolyQ::one() };
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        Self { num: p, den: PolyQ::one() }
    }

    /// The formal variable `α`.
    pub fn alpha() -> Self {
        Self::from_poly(PolyQ::x())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(PolyQ::constant(c))
    }

    pub fn numer(&self) -> &PolyQ {
        &self.num
    }

    pub fn denom(&self) -> &PolyQ {
        &self.den
    }

    /// Exact value at `x`; errors when the denominator vanishes there.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            return Err(Error::Pole(crate::exact::format_rational(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Renormalizes; a no-op on values built through the public API.
    pub fn normalized(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0))
            .then(|| self.num.coeff(0))
    }
}

/// Free-function form of [`RationalFunction::eval`].
pub fn ratfun_eval(r: &RationalFunction, x: &BigRational) -> Result<BigRational> {
    r.eval(x)
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(PolyQ::zero())
    }
    fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn neg_ref(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
    fn inv_checked(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display_var("a"))
        } else {
            write!(f, "({})/({})", self.num.display_var("a"), self.den.display_var("a"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alpha_minus(c: i64) -> RationalFunction {
        RationalFunction::alpha().sub_ref(&RationalFunction::from_int(c))
    }

    #[test]
    fn pole_and_identity() {
        let r = RationalFunction::alpha().div_checked(&alpha_minus(1728)).unwrap();
        assert!(matches!(r.eval(&int(1728)), Err(Error::Pole(_))));
        assert_eq!(RationalFunction::alpha().eval(&int(0)).unwrap(), int(0));
    }

    #[test]
    fn disc_closed_form_value() {
        // 1458^2 α^2/(α-1728)^3 at α = -32768; reference computed long-hand:
        // 1458^2 * 32768^2 / (-34496)^3 = -8707129344/156590819
        let a = RationalFunction::alpha();
        let r = RationalFunction::from_int(1458 * 1458)
            .mul_ref(&a.pow(2))
            .div_checked(&alpha_minus(1728).pow(3))
            .unwrap();
        let expected = BigRational::from_integer((1458i64 * 1458 * 32768 * 32768).into())
            / BigRational::from_integer((-34496i64).pow(3).into());
        assert_eq!(expected, rat(-8707129344, 156590819));
        assert_eq!(r.eval(&int(-32768)).unwrap(), expected);
    }

    #[test]
    fn canonical_form() {
        // (2α+2)/(4α^2-4) reduces to (1/2)/(α-1)
        let num = PolyQ::from_i64s(&[2, 2]);
        let den = PolyQ::from_i64s(&[-4, 0, 4]);
        let r = RationalFunction::new(num, den);
        assert_eq!(r.denom(), &PolyQ::from_i64s(&[-1, 1]));
        assert_eq!(r.numer(), &PolyQ::constant(rat(1, 2)));
        assert_eq!(r.normalized(), r);
        assert_eq!(r.normalized().normalized(), r.normalized());
    }

    fn random_rf(rng: &mut ChaCha8Rng) -> RationalFunction {
        let mut p = |deg: usize| {
            PolyQ::new((0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect())
        };
        let n = p(2);
        let mut d = p(2);
        if d.is_zero() {
            d = PolyQ::one();
        }
        RationalFunction::new(n, d)
    }

    #[test]
    fn arithmetic_commutes_with_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 1000 {
            let (a, b) = (random_rf(&mut rng), random_rf(&mut rng));
            let x = rat(rng.gen_range(-50..=50), rng.gen_range(1..=13));
            let (Ok(av), Ok(bv)) = (a.eval(&x), b.eval(&x)) else { continue };
            assert_eq!(a.add_ref(&b).eval(&x).unwrap(), &av + &bv);
            assert_eq!(a.sub_ref(&b).eval(&x).unwrap(), &av - &bv);
            assert_eq!(a.mul_ref(&b).eval(&x).unwrap(), &av * &bv);
            if !Zero::is_zero(&bv) {
                if let Ok(q) = a.div_checked(&b).unwrap().eval(&x) {
                    assert_eq!(q, &av / &bv);
                }
            }
            checked += 1;
        }
    }
}
