//! `j`-invariants of short Weierstrass curves, the cubic `h_p` whose
//! `j`-invariant is a prescribed `α`, and Galois verdicts for cubics.

mod qexp;

pub use qexp::{j_coefficients, j_from_tau, JNumeric, MIN_PRECISION_BITS};

use serde::{Deserialize, Serialize};

use crate::exact::{int, is_rational_square, BigRational, RationalFunction, Scalar};
use crate::poly::{irreducible_over_q, Irreducibility, PolyQ};
use crate::{Error, Result};

/// `y^2 = x^3 + a x + b`.
#[derive(Clone, PartialEq, Debug)]
pub struct ShortWeierstrass<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> ShortWeierstrass<S> {
    pub fn new(a: S, b: S) -> Result<Self> {
        if discriminant_term(&a, &b).is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { a, b })
    }

    pub fn j_invariant(&self) -> S {
        j_invariant(&self.a, &self.b).expect("nonsingular by construction")
    }
}

/// `4a^3 + 27b^2`.
fn discriminant_term<S: Scalar>(a: &S, b: &S) -> S {
    S::from_int(4).mul_ref(&a.pow(3)).add_ref(&S::from_int(27).mul_ref(&b.pow(2)))
}

/// `1728 * 4a^3 / (4a^3 + 27b^2)`.
pub fn j_invariant<S: Scalar>(a: &S, b: &S) -> Result<S> {
    let four_a3 = S::from_int(4).mul_ref(&a.pow(3));
    let d = discriminant_term(a, b);
    S::from_int(1728).mul_ref(&four_a3).div_checked(&d).ok_or(Error::Singular)
}

/// The shared coefficient `c = -27α / (4(α - 1728))` of `h_p = x^3 + c x + c`.
pub fn hp_coefficient<S: Scalar>(alpha: &S) -> Result<S> {
    let shifted = alpha.sub_ref(&S::from_int(1728));
    let num = S::from_int(-27).mul_ref(alpha);
    num.div_checked(&S::from_int(4).mul_ref(&shifted))
        .ok_or_else(|| Error::Precondition("alpha = 1728 has no h_p".into()))
}

/// `x^3 + c x + c` over `Q`. At `α = 0` the formula degenerates to `x^3`,
/// and the curve `y^2 = x^3 - 2` (also `j = 0`) is used instead.
pub fn build_hp(alpha: &BigRational) -> Result<PolyQ> {
    if Scalar::is_zero(alpha) {
        return Ok(h3());
    }
    let c = hp_coefficient(alpha)?;
    Ok(PolyQ::new(vec![c.clone(), c, int(0), int(1)]))
}

/// `x^3 - 2`.
pub fn h3() -> PolyQ {
    PolyQ::from_i64s(&[-2, 0, 0, 1])
}

/// The cubic `h_p` over `Q(α)`, as its curve `y^2 = h_p(x)`.
pub fn build_hp_symbolic() -> ShortWeierstrass<RationalFunction> {
    let c = hp_coefficient(&RationalFunction::alpha()).expect("α is not 1728");
    ShortWeierstrass { a: c.clone(), b: c }
}

/// Discriminant `-4a^3 - 27b^2` of `x^3 + a x + b`.
pub fn depressed_cubic_discriminant<S: Scalar>(a: &S, b: &S) -> S {
    discriminant_term(a, b).neg_ref()
}

/// `1458^2 α^2 / (α - 1728)^3`.
pub fn hp_discriminant_closed_form<S: Scalar>(alpha: &S) -> Result<S> {
    let shifted = alpha.sub_ref(&S::from_int(1728));
    S::from_int(1458 * 1458)
        .mul_ref(&alpha.pow(2))
        .div_checked(&shifted.pow(3))
        .ok_or_else(|| Error::Precondition("alpha = 1728".into()))
}

/// Whether the discriminant of `h_p` equals the closed form in `Q(α)`.
pub fn hp_discriminant_identity() -> bool {
    let curve = build_hp_symbolic();
    let lhs = depressed_cubic_discriminant(&curve.a, &curve.b);
    match hp_discriminant_closed_form(&RationalFunction::alpha()) {
        Ok(rhs) => lhs == rhs,
        Err(_) => false,
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum S3Verdict {
    S3 { primes: Vec<u64> },
    C3 { primes: Vec<u64> },
    Reducible { rational_root: String },
    Inconclusive { primes_tried: usize },
}

impl S3Verdict {
    pub fn is_s3(&self) -> bool {
        matches!(self, Self::S3 { .. })
    }
}

/// Galois group of a squarefree cubic over `Q`, claimed only with an
/// irreducibility certificate.
pub fn gal_s3_verdict(h: &PolyQ) -> Result<S3Verdict> {
    let deg = h.degree().unwrap_or(0);
    if deg != 3 {
        return Err(Error::DegreeMismatch { expected: 3, found: deg });
    }
    if !h.is_squarefree() {
        return Err(Error::Precondition("cubic has a repeated root".into()));
    }
    Ok(match irreducible_over_q(h) {
        Irreducibility::Certified { primes } => {
            if is_rational_square(&h.discriminant()) {
                S3Verdict::C3 { primes }
            } else {
                S3Verdict::S3 { primes }
            }
        }
        Irreducibility::Reducible { rational_root } => S3Verdict::Reducible { rational_root },
        Irreducibility::Inconclusive { primes_tried } => S3Verdict::Inconclusive { primes_tried },
    })
}
