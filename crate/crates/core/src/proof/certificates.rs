//! Interval sign certificates at `p = lambda` and the root cascade
//! `1 < t0 < t1 < t2 < t3` of `g4, g3, g2, g1`.

use rug::Float;

use super::{f1_eval, f_eval, g_at_one, g_polys, leading_coefficient, GPolys, C3, C4};
use crate::constants::{lambda_sharp, ln_one_plus_sqrt2};
use crate::error::{Error, Result};
use crate::interval::{CertInterval, Sign};
use crate::poly::{eval_int_poly, isolate_roots, Poly, Scalar};
use crate::precision::{escalate, Precision};

/// Lowest starting precision accepted for the certificates.
pub const MIN_CERTIFY_BITS: u32 = 128;

/// An enclosure together with the sign it was expected to have.
#[derive(Clone, Debug)]
pub struct SignCertificate {
    pub id: String,
    pub formula: String,
    pub enclosure: CertInterval,
    pub expected: Sign,
    pub precision_bits: u32,
}

impl SignCertificate {
    fn new(id: impl Into<String>, formula: impl Into<String>, enclosure: CertInterval, expected: Sign) -> Self {
        SignCertificate {
            id: id.into(),
            formula: formula.into(),
            precision_bits: enclosure.precision(),
            enclosure,
            expected,
        }
    }

    pub fn sign(&self) -> Sign {
        self.enclosure.sign()
    }

    pub fn holds(&self) -> bool {
        self.sign() == self.expected
    }
}

fn check_start(prec: Precision) -> Result<()> {
    if prec.bits() < MIN_CERTIFY_BITS {
        return Err(Error::InvalidPrecision { bits: prec.bits() });
    }
    Ok(())
}

/// Fails with [`Error::InconclusiveSign`] if any certificate straddles zero.
fn require_definite(certs: &[SignCertificate]) -> Result<()> {
    match certs.iter().find(|c| !c.sign().is_definite()) {
        Some(c) => Err(Error::InconclusiveSign {
            what: c.id.clone(),
            bits: c.precision_bits,
        }),
        None => Ok(()),
    }
}

/// `-8 (4L^2 - 3) / L^2`, the value of `g1(1)` at `lambda` written in
/// `L = ln(1 + sqrt 2)`.
pub fn g1_at_one_in_l(prec: Precision) -> CertInterval {
    let l2 = ln_one_plus_sqrt2(prec).sqr();
    let num = &l2.mul_pow2(2) - &CertInterval::from_i64(prec, 3);
    num.checked_div(&l2).expect("L^2 > 0").mul_pow2(3).neg()
}

fn lambda_signs_at(prec: Precision) -> Result<Vec<SignCertificate>> {
    let lam = lambda_sharp(prec);
    let neg = Sign::Negative;
    let certs = vec![
        SignCertificate::new("g1_at_1", "g1(1) = g2(1) = 16(6p^2-6p+1) at p = lambda", g_at_one(1, &lam)?, neg),
        SignCertificate::new("g1_at_1_in_L", "-8(4L^2-3)/L^2, L = ln(1+sqrt2)", g1_at_one_in_l(prec), neg),
        SignCertificate::new("g3_at_1", "g3(1) = 16p^4-32p^3+48p^2-32p+5 at p = lambda", g_at_one(3, &lam)?, neg),
        SignCertificate::new("g4_at_1", "g4(1) = 48p^4-96p^3+96p^2-48p+7 at p = lambda", g_at_one(4, &lam)?, neg),
        SignCertificate::new(
            "leading_coefficient",
            "32p^6-96p^5+144p^4-128p^3+72p^2-24p+3 at p = lambda",
            leading_coefficient(&lam),
            Sign::Positive,
        ),
    ];
    require_definite(&certs)?;
    Ok(certs)
}

/// Signs of `g1(1) = g2(1)`, `g3(1)`, `g4(1)` (negative) and of the leading
/// coefficient of `g1` (positive) at `p = lambda`, escalating precision
/// until every enclosure excludes zero.
pub fn certify_lambda_signs(prec: Precision) -> Result<Vec<SignCertificate>> {
    check_start(prec)?;
    escalate(prec, lambda_signs_at)
}

/// One certified evaluation in the cascade.
#[derive(Clone, Debug)]
pub struct SignSample {
    pub function: String,
    pub t: CertInterval,
    pub value: CertInterval,
    pub expected: Sign,
}

impl SignSample {
    pub fn sign(&self) -> Sign {
        self.value.sign()
    }

    pub fn holds(&self) -> bool {
        self.sign() == self.expected
    }
}

/// Roots of `g4, g3, g2, g1` on `(1, oo)` at `p = lambda`, with the sign
/// samples that tie them together.
#[derive(Clone, Debug)]
pub struct CascadeReport {
    pub t0: CertInterval,
    pub t1: CertInterval,
    pub t2: CertInterval,
    pub t3: CertInterval,
    /// `c3 / (2 c4)`, the root of the linear `g4` in closed form.
    pub t0_closed_form: CertInterval,
    pub sign_pattern: Vec<SignSample>,
    pub all_certified: bool,
    pub precision_bits: u32,
}

impl CascadeReport {
    pub fn roots(&self) -> [&CertInterval; 4] {
        [&self.t0, &self.t1, &self.t2, &self.t3]
    }

    /// `1 < t0 < t1 < t2 < t3` as disjoint intervals.
    pub fn ordered(&self) -> bool {
        let one = CertInterval::from_i64(Precision::DOUBLE, 1);
        let r = self.roots();
        one.certainly_lt(r[0]) && r.windows(2).all(|w| w[0].certainly_lt(w[1]))
    }

    pub fn t0_matches_closed_form(&self) -> bool {
        self.t0.intersects(&self.t0_closed_form)
    }
}

fn point(x: Float) -> CertInterval {
    CertInterval::from_bounds(x.clone(), x)
}

/// `lo + (hi - lo) * num / den`, rounded to nearest; used only as a sample
/// location, so the rounding does not matter.
fn between(lo: &Float, hi: &Float, num: u32, den: u32, bits: u32) -> Float {
    let step = Float::with_val(bits, hi - lo) * num / den;
    Float::with_val(bits, lo + &step)
}

/// The unique root of `poly` in `(1, oo)`, which must start negative.
fn single_root(poly: &Poly<CertInterval>, name: &str, bits: u32) -> Result<CertInterval> {
    let prec = Precision::new(bits).expect("valid");
    let mut upper = 2.0f64;
    while poly.eval(&CertInterval::from_f64(prec, upper)).sign() != Sign::Positive {
        upper *= 2.0;
        if upper > 2f64.powi(64) {
            return Err(Error::NoRootInBracket { what: format!("{name} on (1, 2^64)") });
        }
    }
    let target = Float::with_val(bits, Float::i_exp(1, -(bits as i32) / 2));
    let roots = isolate_roots(poly, &CertInterval::hull_f64(prec, 1.0, upper), &target)?;
    match roots.as_slice() {
        [r] if r.unique && r.sign_left == Sign::Negative => Ok(r.enclosure.clone()),
        _ => Err(Error::NoRootInBracket {
            what: format!("a single simple root of {name} on (1, {upper})"),
        }),
    }
}

fn cascade_at(prec: Precision) -> Result<CascadeReport> {
    let bits = prec.bits();
    let lam = lambda_sharp(prec);
    let g: GPolys<CertInterval> = g_polys(&lam);
    let names = ["g1", "g2", "g3", "g4"];

    // roots[k - 1] is the root of g_k: t3, t2, t1, t0
    let mut roots = Vec::with_capacity(4);
    for k in 1..=4 {
        roots.push(single_root(g.get(k).expect("k in 1..=4"), names[k - 1], bits)?);
    }

    let mut samples = Vec::new();
    let mut sample = |function: String, t: CertInterval, value: CertInterval, expected: Sign| {
        samples.push(SignSample { function, t, value, expected });
    };
    let one = Float::with_val(bits, 1);
    let far = CertInterval::from_f64(prec, 1e9);
    for k in 1..=4 {
        let gk = g.get(k).expect("k in 1..=4");
        let r = &roots[k - 1];
        let name = names[k - 1];
        for num in 1..=3 {
            let t = point(between(&one, r.lower(), num, 4, bits));
            sample(name.to_string(), t.clone(), gk.eval(&t), Sign::Negative);
        }
        let ten_r = Float::with_val(bits, r.upper() * 10u32);
        for num in 1..=3 {
            let t = point(between(r.upper(), &ten_r, num, 4, bits));
            sample(name.to_string(), t.clone(), gk.eval(&t), Sign::Positive);
            if k < 4 {
                // g_{k+1} is a positive multiple of g_k'
                let slope = g.get(k + 1).expect("k + 1 <= 4");
                sample(format!("{} (slope of {name})", names[k]), t.clone(), slope.eval(&t), Sign::Positive);
            }
        }
        if k < 4 {
            // g_k is still negative where its slope changes sign
            let turn = &roots[k];
            sample(name.to_string(), turn.clone(), gk.eval(turn), Sign::Negative);
        }
        sample(name.to_string(), far.clone(), gk.eval(&far), Sign::Positive);
    }
    sample(
        "g4 slope (2 c4)".to_string(),
        far.clone(),
        g.g4.coeffs()[1].clone(),
        Sign::Positive,
    );

    let t3 = &roots[0];
    let ten_t3 = Float::with_val(bits, t3.upper() * 10u32);
    let inside = point(between(&one, t3.lower(), 1, 2, bits));
    let outside = point(between(t3.upper(), &ten_t3, 1, 2, bits));
    sample("f".to_string(), t3.clone(), f_eval(&lam, t3), Sign::Negative);
    sample("f".to_string(), inside.clone(), f_eval(&lam, &inside), Sign::Negative);
    sample("f".to_string(), outside.clone(), f_eval(&lam, &outside), Sign::Negative);
    sample("f1".to_string(), inside.clone(), f1_eval(&lam, &inside), Sign::Negative);
    sample("f1".to_string(), outside.clone(), f1_eval(&lam, &outside), Sign::Positive);

    if let Some(bad) = samples.iter().find(|s| !s.sign().is_definite()) {
        return Err(Error::InconclusiveSign {
            what: format!("{} at t = {:e}", bad.function, bad.t.to_f64()),
            bits,
        });
    }

    let c3 = eval_int_poly(&C3, &lam);
    let c4 = eval_int_poly(&C4, &lam);
    let t0_closed_form = c3.checked_div(&c4.mul_int(2)).expect("c4 > 0");

    let mut report = CascadeReport {
        t0: roots[3].clone(),
        t1: roots[2].clone(),
        t2: roots[1].clone(),
        t3: roots[0].clone(),
        t0_closed_form,
        sign_pattern: samples,
        all_certified: false,
        precision_bits: bits,
    };
    report.all_certified = report.ordered()
        && report.t0_matches_closed_form()
        && report.sign_pattern.iter().all(SignSample::holds);
    Ok(report)
}

/// Isolates `t0 < t1 < t2 < t3` and certifies the sign pattern of each
/// `g_k` around its root, the slope linkage to `g_{k+1}`, and `f < 0` at
/// `t3` and at the midpoints of `(1, t3)` and `(t3, 10 t3)`.
pub fn cascade(prec: Precision) -> Result<CascadeReport> {
    check_start(prec)?;
    escalate(prec, cascade_at)
}
