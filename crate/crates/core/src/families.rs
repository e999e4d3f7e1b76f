//! The one-parameter families of degree 12 and 14 with Galois group
//! `PSL2(F_11)` and `PSL2(F_13)`, and the end-to-end verification pipeline
//! for a polynomial of degree `q + 1`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{format_rational, rat, BigRational, Scalar};
use crate::finitefield::prime_power;
use crate::galois::{galois_evidence, EvidenceConfig, EvidenceReport, EvidenceVerdict};
use crate::modular::{build_hp, gal_s3_verdict, h3, j_from_tau, JNumeric, S3Verdict};
use crate::permmod::verify_f4;
use crate::poly::{coefficient_strings, from_coefficient_strings, irreducible_over_q, Irreducibility, PolyQ};
use crate::quadorder::{verify_3h, ThreeHRow};
use crate::report::{Outcome, SCHEMA_VERSION};
use crate::{Error, Result};

/// Primes `p` with `j((-1 + sqrt(-p))/2)` an integer.
pub const INTEGRAL_J_PRIMES: [u64; 6] = [3, 11, 19, 43, 67, 163];

fn poly_mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

fn poly_pow<S: Scalar>(a: &[S], e: u32) -> Vec<S> {
    (0..e).fold(vec![S::one()], |acc, _| poly_mul(&acc, a))
}

fn lift<S: Scalar>(c: &[i64]) -> Vec<S> {
    c.iter().map(|&v| S::from_int(v)).collect()
}

/// `a - t * b`, padding to the longer length.
fn sub_scaled<S: Scalar>(a: &[S], t: &S, b: &[S]) -> Vec<S> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(S::zero);
            let y = b.get(i).map_or_else(S::zero, |y| t.mul_ref(y));
            x.sub_ref(&y)
        })
        .collect()
}

/// Coefficients (lowest degree first) of the degree-12 family at `s`, over
/// any field containing `s`.
pub fn f11_coefficients<S: Scalar>(s: &S) -> Vec<S> {
    let t = S::from_int(256 * 243)
        .div_checked(&S::from_int(11).mul_ref(&s.pow(2)).add_ref(&S::one()))
        .expect("11 s^2 + 1 is nonzero");
    let base = poly_pow(&lift::<S>(&[-308, -66, 0, 1]), 4);
    let quintic = lift::<S>(&[103763, 57358, 1892, -1573, -44, 11]);
    let linear = lift::<S>(&[-11, 1]);
    let f = sub_scaled(&base, &S::from_int(9).mul_ref(&t), &quintic);
    sub_scaled(&f, &S::from_int(3).mul_ref(&t.pow(2)), &linear)
}

/// Coefficients (lowest degree first) of the degree-14 family at `s`.
pub fn f13_coefficients<S: Scalar>(s: &S) -> Vec<S> {
    let t = S::one()
        .div_checked(&S::from_int(39).mul_ref(&s.pow(2)).add_ref(&S::one()))
        .expect("39 s^2 + 1 is nonzero");
    let base = poly_mul(&lift::<S>(&[36, 0, 1]), &poly_pow(&lift::<S>(&[-27, 35, -1, 1]), 4));
    let tail = poly_mul(&lift::<S>(&[247, -2, 7]), &poly_pow(&lift::<S>(&[39, 0, 1]), 6));
    let scale = S::from_int(4).mul_ref(&t).div_checked(&S::from_int(27)).expect("27 is nonzero");
    sub_scaled(&base, &scale, &tail)
}

pub fn build_f11(s: &BigRational) -> PolyQ {
    PolyQ::new(f11_coefficients(s))
}

pub fn build_f13(s: &BigRational) -> PolyQ {
    PolyQ::new(f13_coefficients(s))
}

/// The family polynomial for `q` in `{11, 13}`.
pub fn build_family(q: u64, s: &BigRational) -> Result<PolyQ> {
    match q {
        11 => Ok(build_f11(s)),
        13 => Ok(build_f13(s)),
        _ => Err(Error::Precondition(format!("no built-in family for q = {q}"))),
    }
}

/// The distinct reduced fractions `m/n` with `m, n` nonzero in `[-5, 5]`,
/// in increasing order.
pub fn parameter_grid() -> Vec<BigRational> {
    let mut set = BTreeSet::new();
    for m in (-5..=5).filter(|&m| m != 0) {
        for n in (-5..=5).filter(|&n| n != 0) {
            set.insert(rat(m, n));
        }
    }
    set.into_iter().collect()
}

/// JSON array of `"num/den"` strings, lowest degree first.
pub fn polynomial_to_json(f: &PolyQ) -> String {
    serde_json::to_string(&coefficient_strings(f)).expect("strings serialize")
}

pub fn polynomial_from_json(text: &str) -> Result<PolyQ> {
    let coeffs: Vec<String> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("coefficient file: {e}")))?;
    if coeffs.is_empty() {
        return Err(Error::Parse("coefficient file is empty".into()));
    }
    from_coefficient_strings(&coeffs)
}

#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub evidence: EvidenceConfig,
    /// Working precision for the numerical `j`-invariant.
    pub precision_bits: u32,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self { evidence: EvidenceConfig::default(), precision_bits: 256 }
    }
}

/// Hypotheses for absolute simplicity of the jacobian of `y^2 = f(x)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Conclusion {
    pub statement: String,
    /// `f4_commutant` when `q = 5 mod 8`; `f4_commutant_cm_excluded` when
    /// `q = 3 mod 8` and the CM case is ruled out through `h_p`.
    pub route: String,
    /// The Galois step is sampled, so the conclusion is statistical.
    pub evidence_level: String,
}

/// Checks tied to `q = 3 mod 8`: class numbers and the cubic `h_p`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CmExclusion {
    pub p: u64,
    pub class_numbers: Option<ThreeHRow>,
    pub j_invariant: Option<JNumeric>,
    pub hp: Option<Vec<String>>,
    pub s3: Option<S3Verdict>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PipelineReport {
    pub schema: u32,
    pub family: String,
    pub q: u64,
    pub s: Option<String>,
    pub grid_note: String,
    pub config: PipelineConfig,
    pub polynomial: Vec<String>,
    pub degree: usize,
    pub squarefree: bool,
    pub irreducibility: Option<Irreducibility>,
    pub galois: Option<EvidenceReport>,
    pub commutant_f4: Option<bool>,
    pub genus: usize,
    pub cm_exclusion: Option<CmExclusion>,
    pub failures: Vec<String>,
    pub outcome: Outcome,
    pub conclusion: Option<Conclusion>,
}

const GRID_NOTE: &str = "parameter grid: reduced fractions m/n with nonzero -5 <= m, n <= 5, duplicates collapsed";

/// The pipeline for a built-in family member.
pub fn run_pipeline(q: u64, s: &BigRational, config: &PipelineConfig) -> Result<PipelineReport> {
    let f = build_family(q, s)?;
    let mut report = run_pipeline_poly(&f, q, config)?;
    report.family = format!("f{q}");
    report.s = Some(format_rational(s));
    Ok(report)
}

/// The pipeline for every grid value of `s`, in grid order.
pub fn run_grid(q: u64, config: &PipelineConfig) -> Result<Vec<PipelineReport>> {
    parameter_grid().par_iter().map(|s| run_pipeline(q, s, config)).collect()
}

/// Runs every stage on a user-supplied polynomial of degree `q + 1`,
/// recording each failure and continuing.
pub fn run_pipeline_poly(f: &PolyQ, q: u64, config: &PipelineConfig) -> Result<PipelineReport> {
    let Some((p, k)) = prime_power(q).filter(|&(p, _)| p != 2) else {
        return Err(Error::NotOddPrimePower(q));
    };
    let degree = f.degree().unwrap_or(0);
    let mut failures = Vec::new();
    let mut outcome = Outcome::Pass;
    let mut fail = |outcome: &mut Outcome, o: Outcome, msg: String| {
        *outcome = outcome.combine(o);
        failures.push(msg);
    };

    if degree as u64 != q + 1 {
        fail(&mut outcome, Outcome::Fail, format!("degree {degree} is not q + 1 = {}", q + 1));
    }
    let squarefree = f.is_squarefree();
    if !squarefree {
        fail(&mut outcome, Outcome::Fail, "polynomial is not squarefree".into());
    }

    let irreducibility = squarefree.then(|| irreducible_over_q(f));
    match &irreducibility {
        Some(Irreducibility::Certified { .. }) | None => {}
        Some(Irreducibility::Reducible { rational_root }) => {
            fail(&mut outcome, Outcome::Fail, format!("reducible: rational root {rational_root}"))
        }
        Some(Irreducibility::Inconclusive { primes_tried }) => fail(
            &mut outcome,
            Outcome::Inconclusive,
            format!("no irreducibility certificate after {primes_tried} primes"),
        ),
    }

    let galois = if squarefree && degree as u64 == q + 1 {
        match galois_evidence(f, q, &config.evidence) {
            Ok(r) => {
                match &r.verdict {
                    EvidenceVerdict::Consistent => {}
                    EvidenceVerdict::Inconsistent { prime, pattern } => fail(
                        &mut outcome,
                        Outcome::Fail,
                        format!("Frobenius pattern {pattern} at p = {prime} is not in the census"),
                    ),
                    EvidenceVerdict::Inconclusive { reason } => {
                        fail(&mut outcome, Outcome::Inconclusive, format!("Galois evidence: {reason}"))
                    }
                }
                Some(r)
            }
            Err(e) => {
                fail(&mut outcome, Outcome::Inconclusive, format!("Galois evidence: {e}"));
                None
            }
        }
    } else {
        None
    };

    let commutant_f4 = match verify_f4(q) {
        Ok(ok) => {
            if !ok {
                fail(&mut outcome, Outcome::Fail, "commutant of the mod-2 module is not F_4".into());
            }
            Some(ok)
        }
        Err(e) => {
            fail(&mut outcome, Outcome::Fail, format!("commutant: {e}"));
            None
        }
    };

    let cm_exclusion = if q % 8 == 3 {
        let mut cm = CmExclusion { p, class_numbers: None, j_invariant: None, hp: None, s3: None };
        if k % 2 == 0 {
            fail(&mut outcome, Outcome::Fail, format!("q = {p}^{k} is an even power"));
        }
        if p > 3 {
            match verify_3h(p) {
                Ok(row) => {
                    if !row.ok {
                        fail(&mut outcome, Outcome::Fail, format!("h(-4p) = {} is not 3 h(-p) = {}", row.h2, 3 * row.h));
                    }
                    cm.class_numbers = Some(row);
                }
                Err(e) => fail(&mut outcome, Outcome::Fail, format!("class numbers: {e}")),
            }
        }
        let hp = if p == 3 {
            Some(h3())
        } else if INTEGRAL_J_PRIMES.contains(&p) {
            match j_from_tau(p, config.precision_bits) {
                Ok(j) => {
                    let alpha = j.integer_value().map(BigRational::from_integer);
                    cm.j_invariant = Some(j);
                    match alpha {
                        Some(a) => build_hp(&a).ok(),
                        None => None,
                    }
                }
                Err(e) => {
                    fail(&mut outcome, Outcome::Inconclusive, format!("j-invariant: {e}"));
                    None
                }
            }
        } else {
            None
        };
        match hp {
            Some(h) => {
                cm.hp = Some(coefficient_strings(&h));
                match gal_s3_verdict(&h) {
                    Ok(v @ S3Verdict::S3 { .. }) => cm.s3 = Some(v),
                    Ok(v) => {
                        let o = if matches!(v, S3Verdict::Inconclusive { .. }) { Outcome::Inconclusive } else { Outcome::Fail };
                        fail(&mut outcome, o, format!("Galois group of h_p is not S3: {v:?}"));
                        cm.s3 = Some(v);
                    }
                    Err(e) => fail(&mut outcome, Outcome::Fail, format!("h_p: {e}")),
                }
            }
            None => fail(&mut outcome, Outcome::Inconclusive, format!("no certified integral j-invariant for p = {p}")),
        }
        Some(cm)
    } else {
        None
    };

    let conclusion = (outcome == Outcome::Pass).then(|| Conclusion {
        statement: "the jacobian of y^2 = f(x) is absolutely simple with endomorphism algebra Q or a quadratic field"
            .into(),
        route: if q % 8 == 3 { "f4_commutant_cm_excluded" } else { "f4_commutant" }.into(),
        evidence_level: "statistical".into(),
    });

    Ok(PipelineReport {
        schema: SCHEMA_VERSION,
        family: "custom".into(),
        q,
        s: None,
        grid_note: GRID_NOTE.into(),
        config: *config,
        polynomial: coefficient_strings(f),
        degree,
        squarefree,
        irreducibility,
        galois,
        commutant_f4,
        genus: degree.saturating_sub(1) / 2,
        cm_exclusion,
        failures,
        outcome,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, parse_rational, ratfun_eval, RationalFunction};

    fn strs(v: &[&str]) -> Vec<BigRational> {
        v.iter().map(|s| parse_rational(s).unwrap()).collect()
    }

    #[test]
    fn f11_at_one() {
        let want = strs(&[
            "5044849216", "4956865152", "2391092352", "310712512", "-54104688", "-16612992", "-580800",
            "243936", "26136", "-1232", "-264", "0", "1",
        ]);
        assert_eq!(build_f11(&int(1)).coeffs(), &want[..]);
    }

    #[test]
    fn f13_at_minus_one() {
        let want = strs(&[
            "-31998670461/10", "-365687757/5", "-780396201/2", "-896502438/5", "391472991/10", "-25943931",
            "15279043/2", "-1533844", "891605/2", "-45487", "376363/30", "-10114/15", "9451/54", "-539/135",
            "263/270",
        ]);
        assert_eq!(build_f13(&int(-1)).coeffs(), &want[..]);
    }

    #[test]
    fn degrees_and_squarefree() {
        let f = build_f11(&rat(2, 3));
        assert_eq!(f.degree(), Some(12));
        assert!(f.is_squarefree());
        assert_eq!(build_f13(&rat(5, 4)).degree(), Some(14));
        for s in parameter_grid() {
            let (a, b) = (build_f11(&s), build_f13(&s));
            assert_eq!((a.degree(), b.degree()), (Some(12), Some(14)));
            assert!(a.is_squarefree() && b.is_squarefree());
        }
    }

    #[test]
    fn grid_values() {
        let g = parameter_grid();
        assert_eq!(g.len(), 38);
        assert_eq!(g[0], int(-5));
        assert!(g.contains(&rat(2, 3)) && g.contains(&rat(-1, 5)));
    }

    #[test]
    fn symbolic_expansion_agrees() {
        let s = RationalFunction::alpha();
        let f11 = f11_coefficients(&s);
        let f13 = f13_coefficients(&s);
        for (n, d) in [(1, 1), (-1, 1), (2, 3), (7, 5), (-9, 4), (0, 1), (13, 11), (-3, 8)] {
            let v = rat(n, d);
            let a: Vec<BigRational> = f11.iter().map(|c| ratfun_eval(c, &v).unwrap()).collect();
            let b: Vec<BigRational> = f13.iter().map(|c| ratfun_eval(c, &v).unwrap()).collect();
            assert_eq!(PolyQ::new(a), build_f11(&v));
            assert_eq!(PolyQ::new(b), build_f13(&v));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = build_f13(&int(-1));
        let text = polynomial_to_json(&f);
        assert!(text.starts_with("[\"-31998670461/10\""));
        assert_eq!(polynomial_from_json(&text).unwrap(), f);
        assert!(polynomial_from_json("[]").is_err());
        assert!(polynomial_from_json("[\"1/0\"]").is_err());
        assert!(polynomial_from_json("{").is_err());
    }

    #[test]
    fn pipeline_rejects_bad_input() {
        let cfg = PipelineConfig::default();
        assert!(run_pipeline(7, &int(1), &cfg).is_err());
        let r = run_pipeline_poly(&PolyQ::from_i64s(&[-1, 0, 1]), 11, &cfg).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.conclusion.is_none());
    }
}
