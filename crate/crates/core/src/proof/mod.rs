//! Replay of the argument behind the sharp bounds.
//!
//! With `b = 1`, `a = t > 1` the lower bound reduces to the sign of
//!
//! ```text
//! f(t) = sqrt2 asinh((t-1)/(t+1)) - (t-1)/sqrt(Q(t)),
//! Q(t) = [p t + 1 - p]^2 + [p + (1-p) t]^2,
//! ```
//!
//! whose derivative has the sign of `f1(t) = 2 Q^{3/2} - (1+t)^2 sqrt(1+t^2)`,
//! and `4 Q^3 - (1+t)^4 (1+t^2) = (t-1)^2 g1(t)` for a quartic `g1`. This
//! module builds `Q` and `g1..g4` over any coefficient carrier, checks the
//! polynomial identities exactly, and evaluates `f`, `f1` and the limit of
//! `f` with outward rounding. [`certificates`] certifies the signs at
//! `p = lambda` and [`report`] assembles everything into one document.

pub mod certificates;
pub mod report;

use rug::Rational;

use crate::constants::{ln_one_plus_sqrt2, mu_exact};
use crate::error::{Error, Result};
use crate::interval::CertInterval;
use crate::means::{asinh_stable, Weight};
use crate::poly::{eval_int_poly, Poly, Scalar};
use crate::precision::Precision;
use crate::quad::QuadExt3;

pub use certificates::{cascade, certify_lambda_signs, CascadeReport, SignCertificate, SignSample};
pub use report::{certify, CertificateReport};

/// Coefficients of `g1` in `p`, ascending: `c4` leads, `c3` and `c2` follow.
pub const C4: [i64; 7] = [3, -24, 72, -128, 144, -96, 32];
pub const C3: [i64; 7] = [-1, 0, 48, -160, 240, -192, 64];
pub const C2: [i64; 7] = [1, -8, 24, -64, 112, -96, 32];

/// `g1(1) = g2(1)`, `g3(1)`, `g4(1)` as polynomials in `p`.
const G12_AT_ONE: [i64; 3] = [16, -96, 96];
const G3_AT_ONE: [i64; 5] = [5, -32, 48, -32, 16];
const G4_AT_ONE: [i64; 5] = [7, -48, 96, -96, 48];

/// `Q(t)` with ascending coefficients `[(1-p)^2 + p^2, 4p(1-p), p^2 + (1-p)^2]`.
pub fn q_poly<F: Scalar>(p: &F) -> Poly<F> {
    let one = p.int_like(1);
    let q = one.sub(p);
    let ends = q.mul(&q).add(&p.mul(p));
    let mid = p.mul(&q).mul_int(4);
    Poly::new(vec![ends.clone(), mid, ends])
}

/// The quartic `g1` and its scaled derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct GPolys<F> {
    pub g1: Poly<F>,
    pub g2: Poly<F>,
    pub g3: Poly<F>,
    pub g4: Poly<F>,
}

impl<F> GPolys<F> {
    /// `g_k` for `k` in `1..=4`.
    pub fn get(&self, k: usize) -> Option<&Poly<F>> {
        match k {
            1 => Some(&self.g1),
            2 => Some(&self.g2),
            3 => Some(&self.g3),
            4 => Some(&self.g4),
            _ => None,
        }
    }
}

pub fn g_polys<F: Scalar>(p: &F) -> GPolys<F> {
    let c4 = eval_int_poly(&C4, p);
    let c3 = eval_int_poly(&C3, p);
    let c2 = eval_int_poly(&C2, p);
    GPolys {
        g1: Poly::new(vec![
            c4.clone(),
            c3.mul_int(-2),
            c2.mul_int(6),
            c3.mul_int(-2),
            c4.clone(),
        ]),
        g2: Poly::new(vec![c3.neg(), c2.mul_int(6), c3.mul_int(-3), c4.mul_int(2)]),
        g3: Poly::new(vec![c2, c3.neg(), c4.clone()]),
        g4: Poly::new(vec![c3.neg(), c4.mul_int(2)]),
    }
}

/// Leading coefficient `c4(p)` of `g1`.
pub fn leading_coefficient<F: Scalar>(p: &F) -> F {
    eval_int_poly(&C4, p)
}

/// Closed form of `g_k(1)`, `k` in `1..=4`.
pub fn g_at_one<F: Scalar>(k: usize, p: &F) -> Result<F> {
    let coeffs: &[i64] = match k {
        1 | 2 => &G12_AT_ONE,
        3 => &G3_AT_ONE,
        4 => &G4_AT_ONE,
        _ => return Err(Error::InvalidArgument(format!("g_{k} does not exist"))),
    };
    Ok(eval_int_poly(coeffs, p))
}

/// `4 Q(t)^3 - (1+t)^4 (1+t^2)`, expanded directly from `Q`.
pub fn expansion_lhs<F: Scalar>(p: &F) -> Poly<F> {
    let t = |c: &[i64]| Poly::from_ints(p, c);
    let q3 = q_poly(p).pow(3).scale(&p.int_like(4));
    q3.sub(&t(&[1, 1]).pow(4).mul(&t(&[1, 0, 1])))
}

/// `(t-1)^2 g1(t)`.
pub fn expansion_rhs<F: Scalar>(p: &F) -> Poly<F> {
    Poly::from_ints(p, &[-1, 1]).pow(2).mul(&g_polys(p).g1)
}

/// What an exact identity check covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub coefficients: usize,
    pub points: usize,
}

/// Checks `4Q^3 - (1+t)^4 (1+t^2) = (t-1)^2 g1(t)` coefficientwise, then
/// at each of `sample_ts` through the unexpanded radicands `2 Q^{3/2}` and
/// `(1+t)^2 sqrt(1+t^2)` squared.
pub fn verify_expansion_identity<F: Scalar + PartialEq>(p: &F, sample_ts: &[F]) -> Result<IdentityCheck> {
    const RELATION: &str = "4Q^3 - (1+t)^4(1+t^2) = (t-1)^2 g1";
    let lhs = expansion_lhs(p);
    let rhs = expansion_rhs(p);
    if let Some(degree) = first_mismatch(&lhs, &rhs) {
        return Err(Error::CoefficientMismatch { relation: RELATION, degree });
    }
    let q = q_poly(p);
    let g1 = g_polys(p).g1;
    for t in sample_ts {
        let one = t.int_like(1);
        let qt = q.eval(t);
        let left = qt.mul(&qt).mul(&qt).mul_int(4);
        let s = one.add(t);
        let s2 = s.mul(&s);
        let right = s2.mul(&s2).mul(&one.add(&t.mul(t)));
        let d = t.sub(&one);
        if left.sub(&right) != d.mul(&d).mul(&g1.eval(t)) {
            return Err(Error::CoefficientMismatch { relation: RELATION, degree: 0 });
        }
    }
    Ok(IdentityCheck {
        coefficients: lhs.coeffs().len().max(rhs.coeffs().len()),
        points: sample_ts.len(),
    })
}

/// Index of the first coefficient where `a` and `b` differ, trailing zeros
/// included.
fn first_mismatch<F: Scalar + PartialEq>(a: &Poly<F>, b: &Poly<F>) -> Option<usize> {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).find(|&i| match (a.coeffs().get(i), b.coeffs().get(i)) {
        (Some(x), Some(y)) => x != y,
        (Some(x), None) | (None, Some(x)) => !x.is_exact_zero(),
        (None, None) => false,
    })
}

/// Checks `g2 = g1'/2`, `g3 = g2'/6`, `g4 = g3'` coefficientwise.
pub fn check_tower<F: Scalar + PartialEq>(g: &GPolys<F>) -> Result<()> {
    let checks: [(&'static str, Poly<F>, Poly<F>); 3] = [
        ("g2 = g1'/2", g.g1.derivative(), scale_int(&g.g2, 2)),
        ("g3 = g2'/6", g.g2.derivative(), scale_int(&g.g3, 6)),
        ("g4 = g3'", g.g3.derivative(), g.g4.clone()),
    ];
    for (relation, lhs, rhs) in checks {
        if let Some(degree) = first_mismatch(&lhs, &rhs) {
            return Err(Error::CoefficientMismatch { relation, degree });
        }
    }
    Ok(())
}

fn scale_int<F: Scalar>(poly: &Poly<F>, n: i64) -> Poly<F> {
    Poly::new(poly.coeffs().iter().map(|c| c.mul_int(n)).collect())
}

pub fn derivative_tower_check(p: &Rational) -> Result<()> {
    check_tower(&g_polys(p))
}

/// Checks `g1 = (5t^2 + 8t + 5)(t-1)^2 / 27` exactly at `p = (3 + sqrt3)/6`.
pub fn mu_factorization_check() -> Result<()> {
    let g1 = g_polys(&mu_exact()).g1;
    let expected = Poly::new(
        [5i64, -2, -6, -2, 5]
            .iter()
            .map(|&c| QuadExt3::from_rational(Rational::from((c, 27))))
            .collect(),
    );
    match first_mismatch(&g1, &expected) {
        Some(degree) => Err(Error::CoefficientMismatch {
            relation: "g1 = (5t^2+8t+5)(t-1)^2/27 at p = mu",
            degree,
        }),
        None => Ok(()),
    }
}

fn q_at(p: &CertInterval, t: &CertInterval) -> CertInterval {
    let one = p.int_like(1);
    let q = &one - p;
    let u = &(p * t) + &q;
    let v = p + &(&q * t);
    &u.sqr() + &v.sqr()
}

/// Enclosure of `f(t)` for an interval weight.
pub fn f_eval(p: &CertInterval, t: &CertInterval) -> CertInterval {
    let one = t.int_like(1);
    let d = t - &one;
    let x = d.checked_div(&(t + &one)).expect("t + 1 > 0");
    let sqrt2 = CertInterval::sqrt_of(Precision::new(t.precision()).expect("valid"), 2);
    let root = q_at(p, t).sqrt().expect("Q(t) > 0");
    &(&sqrt2 * &x.asinh()) - &d.checked_div(&root).expect("Q(t) > 0")
}

/// Enclosure of `f1(t) = 2 Q^{3/2} - (1+t)^2 sqrt(1+t^2)`.
pub fn f1_eval(p: &CertInterval, t: &CertInterval) -> CertInterval {
    let one = t.int_like(1);
    let q = q_at(p, t);
    let q32 = &q * &q.sqrt().expect("Q(t) > 0");
    let s = (&one + t).sqr();
    let r = (&one + &t.sqr()).sqrt().expect("positive");
    &q32.mul_pow2(1) - &(&s * &r)
}

/// Enclosure of `lim f = sqrt2 ln(1+sqrt2) - 1/sqrt(2p^2 - 2p + 1)`.
pub fn f_limit(p: &CertInterval) -> CertInterval {
    let prec = Precision::new(p.precision()).expect("valid");
    let sqrt2 = CertInterval::sqrt_of(prec, 2);
    // 2p^2 - 2p + 1 = 2(p - 1/2)^2 + 1/2
    let h = (p - &CertInterval::from_f64(prec, 0.5)).sqr();
    let c = &h.mul_pow2(1) + &CertInterval::from_f64(prec, 0.5);
    &(&sqrt2 * &ln_one_plus_sqrt2(prec)) - &c.sqrt().expect("c > 0").recip().expect("c > 0")
}

/// Beyond this ratio the double path switches to the expansion of `f` in `1/t`.
pub const LARGE_T: f64 = 1.0e8;

/// `f(t)` in double precision.
///
/// For `t > LARGE_T` uses `lim f - 2u + (u/sqrt c)(1 + 2p(1-p)/c)` with
/// `u = 1/t`, `c = 2p^2 - 2p + 1`, which is accurate to `O(u^2)`.
pub fn f_eval_f64(w: Weight, t: f64) -> f64 {
    let p = w.value();
    if t > LARGE_T {
        let c = 2.0 * (p - 0.5) * (p - 0.5) + 0.5;
        let u = 1.0 / t;
        let lim = f_limit_f64(w);
        return lim - 2.0 * u + u / c.sqrt() * (1.0 + 2.0 * p * (1.0 - p) / c);
    }
    let d = t - 1.0;
    let x = d / (t + 1.0);
    let q = (p * t + 1.0 - p).powi(2) + (p + (1.0 - p) * t).powi(2);
    std::f64::consts::SQRT_2 * asinh_stable(x) - d / q.sqrt()
}

pub fn f_limit_f64(w: Weight) -> f64 {
    let p = w.value();
    let c = 2.0 * (p - 0.5) * (p - 0.5) + 0.5;
    std::f64::consts::SQRT_2 * 1f64.asinh() - 1.0 / c.sqrt()
}
