//! The equality weight `p(t)`, sharpness witnesses and an end-to-end check
//! of the double inequality.
//!
//! By homogeneity every pair reduces to `(t, 1)` with `t > 1`. For fixed
//! `t` the recombined mean `S_p(t, 1)` increases strictly in `p`, from the
//! arithmetic mean at `p = 1/2` to `S` at `p = 1`, and `A < M < S`, so
//! exactly one `p(t)` gives `S_p(t, 1) = M(t, 1)`.

use rug::Float;
use serde::Serialize;

use crate::constants::{lambda_sharp, mu_sharp};
use crate::error::{Error, Result};
use crate::interval::{CertInterval, Sign};
use crate::means::{self, neuman_sandor, neuman_sandor_of, weighted_rms, weighted_rms_of, PositivePair, Weight};
use crate::precision::{escalate, Precision};

/// Default relative tolerance of the double-path solver.
pub const DEFAULT_TOL: f64 = 1.0e-12;

/// Largest ratio the `T0` search will try.
pub const T_SEARCH_CAP: f64 = 1.0e30;

/// Smallest `delta` the near-one search will try.
pub const DELTA_SEARCH_FLOOR: f64 = 1.0e-30;

fn unit_pair(t: f64) -> Result<PositivePair> {
    if !(t.is_finite() && t > 1.0) {
        return Err(Error::NoRootInBracket {
            what: format!("S_p(t, 1) - M(t, 1) for t = {t} (needs t > 1)"),
        });
    }
    PositivePair::new(t, 1.0)
}

/// Equality weight in double precision, by bisection on `[1/2, 1]` down to
/// adjacent doubles. Fails if `|S_p - M| >= tol * M` at the result.
pub fn equality_weight(t: f64, tol: f64) -> Result<Weight> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let pair = unit_pair(t)?;
    let m = neuman_sandor(pair);
    let gap = |p: f64| weighted_rms(pair, Weight::new(p).expect("p in [1/2, 1]")) - m;
    let (mut lo, mut hi) = (0.5f64, 1.0f64);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gap(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = if gap(lo).abs() <= gap(hi).abs() { lo } else { hi };
    let residual = gap(p).abs();
    if residual >= tol * m {
        return Err(Error::ToleranceNotMet { residual: residual / m, tol });
    }
    Weight::new(p)
}

/// Certified `S_p(t, 1) - M(t, 1)` for a point weight.
fn certified_gap(t: &CertInterval, m: &CertInterval, p: &Float) -> CertInterval {
    let one = CertInterval::from_i64(Precision::new(t.precision()).expect("valid"), 1);
    let pi = CertInterval::from_bounds(p.clone(), p.clone());
    &weighted_rms_of(t, &one, &pi) - m
}

/// Certified bracket `[p_lo, p_hi]` of the equality weight: the gap is
/// certified negative at `p_lo` and positive at `p_hi`. Bisection stops at
/// width `2^-(bits/2)` or when the midpoint sign cannot be decided.
pub fn equality_weight_certified(t: f64, prec: Precision) -> Result<CertInterval> {
    unit_pair(t)?;
    let bits = prec.bits();
    let tt = CertInterval::from_f64(prec, t);
    let m = neuman_sandor_of(&tt, &CertInterval::from_i64(prec, 1));
    let mut lo = Float::with_val(bits, 0.5);
    let mut hi = Float::with_val(bits, 1);
    for (end, want) in [(&lo, Sign::Negative), (&hi, Sign::Positive)] {
        if certified_gap(&tt, &m, end).sign() != want {
            return Err(Error::InconclusiveSign {
                what: format!("S_p - M at p = {} for t = {t}", end.to_f64()),
                bits,
            });
        }
    }
    let target = Float::with_val(bits, Float::i_exp(1, -(bits as i32) / 2));
    while Float::with_val(bits, &hi - &lo) > target {
        let mid = Float::with_val(bits, &lo + &hi) >> 1u32;
        match certified_gap(&tt, &m, &mid).sign() {
            Sign::Negative => lo = mid,
            Sign::Positive => hi = mid,
            Sign::Indeterminate => break,
        }
    }
    Ok(CertInterval::from_bounds(lo, hi))
}

/// One point of the equality curve at `b = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurveSample {
    pub t: f64,
    pub p_eq: f64,
    pub m_value: f64,
    /// `S_{p_eq}(t, 1) - M(t, 1)` in double precision.
    pub residual: f64,
}

/// Curve sample from the certified bracket; `p_eq` is its midpoint.
pub fn curve_sample(t: f64, prec: Precision) -> Result<CurveSample> {
    let pair = unit_pair(t)?;
    let p = equality_weight_certified(t, prec)?.to_f64();
    let m = neuman_sandor(pair);
    Ok(CurveSample {
        t,
        p_eq: p,
        m_value: m,
        residual: weighted_rms(pair, Weight::new(p)?) - m,
    })
}

/// `samples` ratios from `t_min` to `t_max`, evenly spaced in `t` or in
/// `ln t`. One sample returns `t_min`.
pub fn ratio_grid(t_min: f64, t_max: f64, samples: usize, log_spacing: bool) -> Result<Vec<f64>> {
    if !(t_min > 1.0 && t_max >= t_min && t_max.is_finite()) {
        return Err(Error::InvalidArgument(format!("need 1 < t_min <= t_max, got [{t_min}, {t_max}]")));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    if samples == 1 {
        return Ok(vec![t_min]);
    }
    let n = (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| {
            let s = i as f64 / n;
            if i == samples - 1 {
                t_max
            } else if log_spacing {
                (t_min.ln() + s * (t_max.ln() - t_min.ln())).exp()
            } else {
                t_min + s * (t_max - t_min)
            }
        })
        .collect())
}

/// Ratios where the equality weight approximates `mu` and `lambda`.
pub const NEAR_ONE: f64 = 1.0 + 1.0e-4;
pub const NEAR_INFINITY: f64 = 1.0e6;

/// `(p(1 + 10^-4), p(10^6))`, approximations of `mu` and `lambda`.
pub fn limit_weights(prec: Precision) -> Result<(f64, f64)> {
    Ok((
        equality_weight_certified(NEAR_ONE, prec)?.to_f64(),
        equality_weight_certified(NEAR_INFINITY, prec)?.to_f64(),
    ))
}

/// Certified sign of `S_p(t, 1) - M(t, 1)`.
pub fn gap_sign(t: f64, p: f64, prec: Precision) -> Result<Sign> {
    unit_pair(t)?;
    Ok(gap_at(t, &Float::with_val(prec.bits(), p), prec))
}

fn gap_at(t: f64, p: &Float, prec: Precision) -> Sign {
    let tt = CertInterval::from_f64(prec, t);
    let m = neuman_sandor_of(&tt, &CertInterval::from_i64(prec, 1));
    certified_gap(&tt, &m, &Float::with_val(prec.bits(), p)).sign()
}

/// A crossing of `S_p(t, 1) - M(t, 1)` from negative to positive.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaWitness {
    pub p: f64,
    /// Upper end of the crossing bracket; `S_p > M` is certified at `t0`.
    pub t0: f64,
    /// Lower end; `S_p < M` is certified there.
    pub below: f64,
    /// Certified signs of `S_p - M` at `t0 / 2` (when above 1), `2 t0`, `10 t0`.
    pub checks: Vec<(f64, Sign)>,
    pub precision_bits: u32,
}

fn weight_interval(p: f64, prec: Precision) -> Result<CertInterval> {
    if !(0.5..=1.0).contains(&p) {
        return Err(Error::WeightOutOfRange { p, range: "[1/2, 1]" });
    }
    Ok(CertInterval::from_f64(prec, p))
}

/// For `lambda < p < 1`, finds `T0` with `S_p(t, 1) > M(t, 1)` at `T0`,
/// `2 T0` and `10 T0`: doubles `t` from 2 until the gap is certified
/// positive, walks down to a certified negative point, then bisects.
pub fn lambda_witness(p: f64, prec: Precision) -> Result<LambdaWitness> {
    let w = weight_interval(p, prec)?;
    if !(lambda_sharp(prec).certainly_lt(&w) && p < 1.0) {
        return Err(Error::WeightOutOfRange { p, range: "(lambda, 1)" });
    }
    escalate(prec, |prec| lambda_witness_at(p, prec))
}

fn lambda_witness_at(p: f64, prec: Precision) -> Result<LambdaWitness> {
    let sign = |t: f64| gap_sign(t, p, prec);
    let inconclusive = |t: f64| Error::InconclusiveSign {
        what: format!("S_p - M at t = {t:e}, p = {p}"),
        bits: prec.bits(),
    };

    let mut hi = 2.0f64;
    while sign(hi)? != Sign::Positive {
        hi *= 2.0;
        if hi > T_SEARCH_CAP {
            return Err(Error::NoRootInBracket { what: format!("S_p - M > 0 for p = {p} below t = 1e30") });
        }
    }
    let mut lo = hi / 2.0;
    if lo <= 1.0 {
        let mut d = hi - 1.0;
        loop {
            d *= 0.5;
            if d < DELTA_SEARCH_FLOOR {
                return Err(Error::NoRootInBracket { what: format!("S_p - M < 0 for p = {p} near t = 1") });
            }
            if sign(1.0 + d)? == Sign::Negative {
                lo = 1.0 + d;
                break;
            }
        }
    } else if sign(lo)? != Sign::Negative {
        return Err(inconclusive(lo));
    }

    // geometric bisection down to a relative width of 2^-40
    while hi / lo > 1.0 + 2f64.powi(-40) {
        let mid = (lo * hi).sqrt();
        if !(mid > lo && mid < hi) {
            break;
        }
        match sign(mid)? {
            Sign::Negative => lo = mid,
            Sign::Positive => hi = mid,
            Sign::Indeterminate => break,
        }
    }

    let mut checks = Vec::new();
    if hi / 2.0 > 1.0 {
        checks.push((hi / 2.0, sign(hi / 2.0)?));
    }
    checks.push((2.0 * hi, sign(2.0 * hi)?));
    checks.push((10.0 * hi, sign(10.0 * hi)?));
    Ok(LambdaWitness {
        p,
        t0: hi,
        below: lo,
        checks,
        precision_bits: prec.bits(),
    })
}

/// A ratio interval `(1, 1 + delta)` on which `M > S_p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuWitness {
    pub p: f64,
    pub delta: f64,
    /// `M - S_p` at `t = 1 + delta/2`, certified positive.
    pub margin_lower: f64,
    /// `6p^2 - 6p + 1`, negative for `p < mu`.
    pub quadratic: f64,
    pub precision_bits: u32,
}

/// For `1/2 <= p < mu`, halves `delta` from 1 until `M(1 + delta/2, 1) >
/// S_p(1 + delta/2, 1)` is certified.
pub fn mu_witness(p: f64, prec: Precision) -> Result<MuWitness> {
    let w = weight_interval(p, prec)?;
    if !w.certainly_lt(&mu_sharp(prec)) {
        return Err(Error::WeightOutOfRange { p, range: "[1/2, mu)" });
    }
    escalate(prec, |prec| {
        let mut delta = 1.0f64;
        while delta >= DELTA_SEARCH_FLOOR {
            let t = 1.0 + delta / 2.0;
            if t > 1.0 {
                let tt = CertInterval::from_f64(prec, t);
                let m = neuman_sandor_of(&tt, &CertInterval::from_i64(prec, 1));
                let gap = certified_gap(&tt, &m, &Float::with_val(prec.bits(), p));
                if gap.sign() == Sign::Negative {
                    return Ok(MuWitness {
                        p,
                        delta,
                        margin_lower: -gap.upper_f64(),
                        quadratic: 6.0 * p * p - 6.0 * p + 1.0,
                        precision_bits: prec.bits(),
                    });
                }
            }
            delta *= 0.5;
        }
        Err(Error::InconclusiveSign {
            what: format!("M - S_p near t = 1 for p = {p}"),
            bits: prec.bits(),
        })
    })
}

/// Checks `S_lambda < M < S_mu` with certified separation, reusing the
/// enclosures of the two constants across calls.
#[derive(Clone, Debug)]
pub struct TheoremVerifier {
    start: Precision,
    rungs: Vec<(Precision, CertInterval, CertInterval)>,
}

impl TheoremVerifier {
    pub fn new(start: Precision) -> Self {
        TheoremVerifier {
            start,
            rungs: vec![(start, lambda_sharp(start), mu_sharp(start))],
        }
    }

    fn constants(&mut self, prec: Precision) -> (CertInterval, CertInterval) {
        if let Some((_, l, m)) = self.rungs.iter().find(|(p, _, _)| *p == prec) {
            return (l.clone(), m.clone());
        }
        let (l, m) = (lambda_sharp(prec), mu_sharp(prec));
        self.rungs.push((prec, l.clone(), m.clone()));
        (l, m)
    }

    /// `Ok(true)` when both inequalities are certified, `Ok(false)` when one
    /// is certified to fail.
    pub fn verify(&mut self, pair: PositivePair) -> Result<bool> {
        if pair.is_equal() {
            return Err(Error::InvalidArgument("the inequalities are strict only for a != b".into()));
        }
        let mut prec = self.start;
        loop {
            let (lam, mu) = self.constants(prec);
            let m = means::neuman_sandor_enclosure(pair, prec);
            let low = means::weighted_rms_enclosure(pair, &lam, prec);
            let high = means::weighted_rms_enclosure(pair, &mu, prec);
            if low.certainly_lt(&m) && m.certainly_lt(&high) {
                return Ok(true);
            }
            if m.certainly_lt(&low) || high.certainly_lt(&m) {
                return Ok(false);
            }
            prec = prec.escalated().ok_or_else(|| Error::InconclusiveSign {
                what: format!("S_lambda < M < S_mu at ({}, {})", pair.a(), pair.b()),
                bits: prec.bits(),
            })?;
        }
    }
}

pub fn verify_theorem(pair: PositivePair, prec: Precision) -> Result<bool> {
    TheoremVerifier::new(prec).verify(pair)
}
