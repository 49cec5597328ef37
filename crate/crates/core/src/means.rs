//! The arithmetic, root-mean-square, second Seiffert and Neuman-Sandor means,
//! and the root-mean-square of convexly recombined arguments.
//!
//! Every mean comes in two flavours: a double-precision function and an
//! `*_enclosure` function returning a [`CertInterval`] at a requested
//! precision. Both sort their arguments first, so swapping `a` and `b` gives
//! bit-identical results. Equal arguments are detected exactly and return the
//! common value.

use crate::error::{Error, Result};
use crate::interval::CertInterval;
use crate::precision::Precision;

/// A pair of positive, finite reals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if ok(a) && ok(b) {
            Ok(PositivePair { a, b })
        } else {
            Err(Error::InvalidPair { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        PositivePair {
            a: self.b,
            b: self.a,
        }
    }

    pub fn is_equal(&self) -> bool {
        self.a == self.b
    }

    /// `(max, min)`.
    fn ordered(&self) -> (f64, f64) {
        if self.a >= self.b {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        }
    }
}

/// A convex-combination weight `p` in `[1/2, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub const HALF: Weight = Weight(0.5);
    pub const ONE: Weight = Weight(1.0);

    pub fn new(p: f64) -> Result<Self> {
        if (0.5..=1.0).contains(&p) {
            Ok(Weight(p))
        } else {
            Err(Error::WeightOutOfRange {
                p,
                range: "[1/2, 1]",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

// Keeps intermediate squares and sums inside the double range. Scaling by a
// power of two is exact for normal numbers, so homogeneity is preserved.
fn rescale(hi: f64, lo: f64) -> (f64, f64, i32) {
    const BIG: f64 = 1.0e150;
    const SMALL: f64 = 1.0e-150;
    if hi > BIG || lo < SMALL {
        let e = hi.log2().floor() as i32;
        (scale2(hi, -e), scale2(lo, -e), e)
    } else {
        (hi, lo, 0)
    }
}

fn scale2(x: f64, e: i32) -> f64 {
    // split so that neither factor overflows or underflows on its own
    let half = e / 2;
    x * 2f64.powi(half) * 2f64.powi(e - half)
}

/// Threshold on `x = (a-b)/(a+b)` below which the series forms are used.
pub const SERIES_THRESHOLD: f64 = 1.0e-8;

/// `x / asinh(x)` for small `x >= 0`, through the `x^4` term.
pub fn x_over_asinh_series(x: f64) -> f64 {
    let x2 = x * x;
    1.0 + x2 * (1.0 / 6.0 - x2 * (17.0 / 360.0))
}

/// `x / atan(x)` for small `x >= 0`, through the `x^4` term.
pub fn x_over_atan_series(x: f64) -> f64 {
    let x2 = x * x;
    1.0 + x2 * (1.0 / 3.0 - x2 * (4.0 / 45.0))
}

/// `asinh(x)` without cancellation for small `|x|`.
///
/// For `|x| < 1/2` this evaluates `log1p(|x| + x^2 / (1 + sqrt(1 + x^2)))`,
/// which equals `ln(|x| + sqrt(x^2 + 1))` exactly in real arithmetic.
pub fn asinh_stable(x: f64) -> f64 {
    let ax = x.abs();
    let r = if ax < 1.0 / 67_108_864.0 {
        // 2^-26: the cubic term is below half an ulp
        ax
    } else if ax < 0.5 {
        let x2 = ax * ax;
        (ax + x2 / (1.0 + (1.0 + x2).sqrt())).ln_1p()
    } else if ax < 268_435_456.0 {
        (ax + ax.hypot(1.0)).ln()
    } else {
        // 2^28: sqrt(x^2 + 1) == x in double
        ax.ln() + std::f64::consts::LN_2
    };
    r.copysign(x)
}

pub fn arithmetic_mean(pair: PositivePair) -> f64 {
    let (hi, lo) = pair.ordered();
    let s = hi + lo;
    if s.is_finite() {
        s * 0.5
    } else {
        hi * 0.5 + lo * 0.5
    }
}

pub fn root_mean_square(pair: PositivePair) -> f64 {
    let (hi, lo) = pair.ordered();
    rms_of(hi, lo)
}

fn rms_of(hi: f64, lo: f64) -> f64 {
    let (hi, lo, e) = rescale(hi, lo);
    scale2(((hi * hi + lo * lo) * 0.5).sqrt(), e)
}

/// `A(a,b) * phi(x)` with `x = (a-b)/(a+b)`: the form shared by T and M.
fn quotient_mean(pair: PositivePair, phi: impl Fn(f64) -> f64, series: impl Fn(f64) -> f64) -> f64 {
    if pair.is_equal() {
        return pair.a;
    }
    let (hi, lo) = pair.ordered();
    let (hi, lo, e) = rescale(hi, lo);
    let x = (hi - lo) / (hi + lo);
    let ratio = if x < SERIES_THRESHOLD { series(x) } else { phi(x) };
    scale2((hi + lo) * 0.5 * ratio, e)
}

pub fn second_seiffert(pair: PositivePair) -> f64 {
    quotient_mean(pair, |x| x / x.atan(), x_over_atan_series)
}

pub fn neuman_sandor(pair: PositivePair) -> f64 {
    quotient_mean(pair, |x| x / asinh_stable(x), x_over_asinh_series)
}

/// `S(p a + (1-p) b, p b + (1-p) a)`.
///
/// The endpoint weights return [`arithmetic_mean`] and [`root_mean_square`]
/// exactly.
pub fn weighted_rms(pair: PositivePair, w: Weight) -> f64 {
    let p = w.value();
    if p == 0.5 {
        return arithmetic_mean(pair);
    }
    if p == 1.0 {
        return root_mean_square(pair);
    }
    let (hi, lo) = pair.ordered();
    let (hi, lo, e) = rescale(hi, lo);
    let d = hi - lo;
    let u = lo + p * d;
    let v = hi - p * d;
    scale2(rms_of(u, v), e)
}

// ---------------------------------------------------------------------------
// Certified path

fn ordered_points(pair: PositivePair, prec: Precision) -> (CertInterval, CertInterval) {
    let (hi, lo) = pair.ordered();
    (
        CertInterval::from_f64(prec, hi),
        CertInterval::from_f64(prec, lo),
    )
}

pub fn arithmetic_mean_enclosure(pair: PositivePair, prec: Precision) -> CertInterval {
    let (hi, lo) = ordered_points(pair, prec);
    (&hi + &lo).mul_pow2(-1)
}

pub fn root_mean_square_enclosure(pair: PositivePair, prec: Precision) -> CertInterval {
    let (hi, lo) = ordered_points(pair, prec);
    (&hi.sqr() + &lo.sqr())
        .mul_pow2(-1)
        .sqrt()
        .expect("sum of squares is non-negative")
}

/// `(a-b) / (2 g((a-b)/(a+b)))` on intervals, `a > b > 0`.
fn quotient_enclosure(
    a: &CertInterval,
    b: &CertInterval,
    g: impl Fn(&CertInterval) -> CertInterval,
) -> CertInterval {
    let diff = a - b;
    let x = diff
        .checked_div(&(a + b))
        .expect("positive denominator");
    diff.checked_div(&g(&x).mul_pow2(1))
        .expect("g(x) is positive for x > 0")
}

pub fn second_seiffert_enclosure(pair: PositivePair, prec: Precision) -> CertInterval {
    if pair.is_equal() {
        return CertInterval::from_f64(prec, pair.a);
    }
    let (hi, lo) = ordered_points(pair, prec);
    quotient_enclosure(&hi, &lo, CertInterval::atan)
}

pub fn neuman_sandor_enclosure(pair: PositivePair, prec: Precision) -> CertInterval {
    if pair.is_equal() {
        return CertInterval::from_f64(prec, pair.a);
    }
    let (hi, lo) = ordered_points(pair, prec);
    neuman_sandor_of(&hi, &lo)
}

/// Neuman-Sandor mean of two interval arguments with `a > b > 0` certified.
pub fn neuman_sandor_of(a: &CertInterval, b: &CertInterval) -> CertInterval {
    quotient_enclosure(a, b, CertInterval::asinh)
}

/// Enclosure of `S(p a + (1-p) b, p b + (1-p) a)` for an interval weight.
pub fn weighted_rms_enclosure(pair: PositivePair, p: &CertInterval, prec: Precision) -> CertInterval {
    let (hi, lo) = ordered_points(pair, prec);
    weighted_rms_of(&hi, &lo, p)
}

/// Same as [`weighted_rms_enclosure`] with interval arguments `a >= b`.
pub fn weighted_rms_of(a: &CertInterval, b: &CertInterval, p: &CertInterval) -> CertInterval {
    // p enters each argument once: u = b + p d, v = a - p d
    let pd = p * &(a - b);
    let u = b + &pd;
    let v = a - &pd;
    (&u.sqr() + &v.sqr())
        .mul_pow2(-1)
        .sqrt()
        .expect("sum of squares is non-negative")
}

/// Interval form of [`asinh_stable`]: outward-rounded `asinh(x)`.
pub fn asinh_enclosure(x: f64, prec: Precision) -> CertInterval {
    CertInterval::from_f64(prec, x).asinh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::float::Round;
    use rug::Float;

    /// Reference evaluation, independent of the interval layer: plain MPFR at
    /// 300 bits with round-to-nearest, via the defining quotients.
    mod oracle {
        use rug::Float;
        const BITS: u32 = 300;

        fn f(x: f64) -> Float {
            Float::with_val(BITS, x)
        }

        /// `ln(|x| + sqrt(x^2 + 1))` with the sign of `x`, carried with
        /// enough guard bits that `1 + |x|` keeps every bit of `|x|`.
        pub fn asinh_direct(x: f64) -> Float {
            let bits = 1200 + BITS;
            let ax = Float::with_val(bits, x.abs());
            let r = (Float::with_val(bits, ax.square_ref()) + 1u32).sqrt();
            let v = Float::with_val(bits, &ax + &r).ln();
            if x < 0.0 { -v } else { v }
        }

        pub fn m(a: f64, b: f64) -> Float {
            let (a, b) = (f(a), f(b));
            let d = Float::with_val(BITS, &a - &b);
            let x = Float::with_val(BITS, &d / Float::with_val(BITS, &a + &b));
            let r = (Float::with_val(BITS, x.square_ref()) + 1u32).sqrt();
            let asinh = Float::with_val(BITS, &x + &r).ln();
            d / (asinh * 2u32)
        }

        pub fn t(a: f64, b: f64) -> Float {
            let (a, b) = (f(a), f(b));
            let d = Float::with_val(BITS, &a - &b);
            let x = Float::with_val(BITS, &d / Float::with_val(BITS, &a + &b));
            d / (x.atan() * 2u32)
        }
    }

    fn pair(a: f64, b: f64) -> PositivePair {
        PositivePair::new(a, b).unwrap()
    }

    fn ulps(x: f64, reference: &Float) -> f64 {
        let r = reference.to_f64();
        let ulp = f64::from_bits(r.abs().to_bits() + 1) - r.abs();
        (Float::with_val(300, x) - reference).to_f64().abs() / ulp
    }

    const P: Precision = Precision::CERTIFY;

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(PositivePair::new(0.0, 1.0).is_err());
        assert!(PositivePair::new(1.0, -1.0).is_err());
        assert!(PositivePair::new(f64::NAN, 1.0).is_err());
        assert!(PositivePair::new(f64::INFINITY, 1.0).is_err());
        assert!(Weight::new(0.49).is_err());
        assert!(Weight::new(1.01).is_err());
        assert!(Weight::new(0.5).is_ok() && Weight::new(1.0).is_ok());
    }

    #[test]
    fn arithmetic_mean_examples() {
        assert_eq!(arithmetic_mean(pair(1.0, 3.0)), 2.0);
        assert_eq!(arithmetic_mean(pair(2.0, 1.0)), 1.5);
        assert_eq!(arithmetic_mean(pair(14.0, 7.0)), 10.5);
        assert!(arithmetic_mean_enclosure(pair(2.0, 1.0), P).contains_f64(1.5));
    }

    #[test]
    fn root_mean_square_examples() {
        assert_eq!(root_mean_square(pair(1.0, 7.0)), 5.0);
        assert_eq!(root_mean_square(pair(3.0, 3.0)), 3.0);
        // sqrt(5/2) = 1.5811388300841896659994467722163592668597775696626...
        assert!((root_mean_square(pair(2.0, 1.0)) - 1.581_138_830_084_189_7).abs() < 3e-16);
        let enc = root_mean_square_enclosure(pair(2.0, 1.0), P);
        assert!(enc.lower_decimal(30).starts_with("1.58113883008418966599944677"));
        assert!(root_mean_square_enclosure(pair(1.0, 7.0), P).contains_f64(5.0));
    }

    #[test]
    fn second_seiffert_examples() {
        // 1 / (2 atan(1/3)) = 1.55399887635816930757476660848...
        let t = second_seiffert(pair(2.0, 1.0));
        assert!((t - 1.553_998_876_358_169_3).abs() < 4e-16);
        assert_eq!(second_seiffert(pair(1.0, 1.0)), 1.0);
        assert_eq!(second_seiffert(pair(1.0, 2.0)), t);
        let enc = second_seiffert_enclosure(pair(2.0, 1.0), P);
        assert!(enc.lower_decimal(25).starts_with("1.5539988763581693075747"));
    }

    #[test]
    fn neuman_sandor_examples() {
        // 1 / (2 asinh(1/3)) = 1.52694997891348721315781343715...
        let m = neuman_sandor(pair(2.0, 1.0));
        assert!((m - 1.526_949_978_913_487_2).abs() < 4e-16);
        assert_eq!(neuman_sandor(pair(1.0, 1.0)), 1.0);
        let m20 = neuman_sandor(pair(20.0, 10.0));
        assert!((m20 - 15.269_499_789_134_872).abs() < 4e-15);
        assert_eq!(neuman_sandor_enclosure(pair(1.0, 1.0), P).to_f64(), 1.0);
        assert!(neuman_sandor_enclosure(pair(20.0, 10.0), P)
            .lower_decimal(20)
            .starts_with("15.269499789134872131"));
    }

    #[test]
    fn weighted_rms_examples() {
        let p21 = pair(2.0, 1.0);
        assert_eq!(weighted_rms(p21, Weight::HALF), 1.5);
        assert_eq!(weighted_rms(p21, Weight::ONE), root_mean_square(p21));
        // at p = (3+sqrt3)/6: (1+p)^2 + (2-p)^2 = 2p^2 - 2p + 5 = 14/3
        let mu = crate::constants::mu_sharp(P);
        let enc = weighted_rms_enclosure(p21, &mu, P);
        let seven_thirds = CertInterval::from_i64(P, 7)
            .checked_div(&CertInterval::from_i64(P, 3))
            .unwrap()
            .sqrt()
            .unwrap();
        assert!(enc.intersects(&seven_thirds));
        assert!(enc.width() < Float::with_val(64, 1e-70));
        // brute force at the nearest double to mu
        let brute = ((1.0 + mu.to_f64()).powi(2) + (2.0 - mu.to_f64()).powi(2)) / 2.0;
        assert!((weighted_rms(p21, Weight::new(mu.to_f64()).unwrap()) - brute.sqrt()).abs() < 1e-15);
        assert!((brute.sqrt() - 1.527_525_231_651_946_7).abs() < 1e-15);
    }

    #[test]
    fn asinh_examples() {
        assert_eq!(asinh_stable(0.0), 0.0);
        let v = asinh_stable(1.0 / 3.0);
        // ln((1 + sqrt 10) / 3) = 0.32745015023725844332253525998825...
        assert!((v - 0.327_450_150_237_258_43).abs() < 2e-16);
        assert_eq!(asinh_stable(-1.0 / 3.0), -v);
        assert!(asinh_enclosure(1.0 / 3.0, P).contains(&oracle::asinh_direct(1.0 / 3.0)));
    }

    #[test]
    fn asinh_is_accurate_across_magnitudes() {
        let mut worst: f64 = 0.0;
        let mut x = 1e-300;
        while x < 1e300 {
            for s in [x, -x, x * 1.37, x * 0.71] {
                worst = worst.max(ulps(asinh_stable(s), &oracle::asinh_direct(s)));
            }
            x *= 3.1;
        }
        assert!(worst <= 4.0, "worst error {worst} ulps");
    }

    #[test]
    fn near_equal_arguments_use_series() {
        let a = 1.0 + 1e-10;
        let m = neuman_sandor(pair(a, 1.0));
        let t = second_seiffert(pair(a, 1.0));
        assert!(ulps(m, &oracle::m(a, 1.0)) <= 2.0);
        assert!(ulps(t, &oracle::t(a, 1.0)) <= 2.0);
        let x = (a - 1.0) / (a + 1.0);
        assert_eq!(m, (a + 1.0) * 0.5 * x_over_asinh_series(x));
        assert_eq!(t, (a + 1.0) * 0.5 * x_over_atan_series(x));
    }

    #[test]
    fn series_and_quotient_agree_at_threshold() {
        let x = SERIES_THRESHOLD;
        assert!((x_over_asinh_series(x) - x / asinh_stable(x)).abs() <= f64::EPSILON);
        assert!((x_over_atan_series(x) - x / x.atan()).abs() <= f64::EPSILON);
    }

    #[test]
    fn extreme_magnitudes_stay_finite() {
        let big = pair(1.0e308, 0.5e308);
        for v in [
            arithmetic_mean(big),
            root_mean_square(big),
            neuman_sandor(big),
            second_seiffert(big),
            weighted_rms(big, Weight::new(0.7).unwrap()),
        ] {
            assert!(v.is_finite() && v > 0.5e308 && v < 1.0e308, "{v}");
        }
        let tiny = pair(3.0e-310, 1.0e-310);
        let m = neuman_sandor(tiny);
        assert!(m > 1.0e-310 && m < 3.0e-310);
        let s = root_mean_square(pair(1.0e300, 1.0e300));
        assert!((s - 1.0e300).abs() <= 2.0 * 1.0e300 * f64::EPSILON);
        let e = root_mean_square_enclosure(pair(1.0e308, 1.0e308), P);
        assert!(e.contains_f64(1.0e308));
    }

    #[test]
    fn double_path_within_enclosure_widened_by_ulps() {
        for (a, b) in [(2.0, 1.0), (1e6, 1.0), (1.0 + 1e-7, 1.0), (3.3, 7.9)] {
            let pr = pair(a, b);
            let checks = [
                (neuman_sandor(pr), neuman_sandor_enclosure(pr, P)),
                (second_seiffert(pr), second_seiffert_enclosure(pr, P)),
                (root_mean_square(pr), root_mean_square_enclosure(pr, P)),
                (arithmetic_mean(pr), arithmetic_mean_enclosure(pr, P)),
            ];
            for (x, enc) in checks {
                let tol = 4.0 * x * f64::EPSILON;
                let widened = CertInterval::hull_f64(P, enc.lower_f64() - tol, enc.upper_f64() + tol);
                assert!(widened.contains_f64(x), "{x} vs {enc}");
            }
        }
    }

    #[test]
    fn cross_check_against_direct_formula_on_ratio_grid() {
        let mut worst: f64 = 0.0;
        let n = 400;
        for k in 0..=n {
            // log-spaced t - 1 in (1e-8, 1e8)
            let t = 1.0 + 10f64.powf(-8.0 + 16.0 * f64::from(k) / f64::from(n));
            worst = worst.max(ulps(neuman_sandor(pair(t, 1.0)), &oracle::m(t, 1.0)));
        }
        assert!(worst <= 4.0, "worst {worst} ulps");
    }

    fn pairs() -> impl Strategy<Value = (f64, f64)> {
        (-6.0f64..6.0, -6.0f64..6.0).prop_map(|(x, y)| (10f64.powf(x), 10f64.powf(y)))
    }

    type MeanFn = fn(PositivePair) -> f64;
    const ALL: [(&str, MeanFn); 4] = [
        ("A", arithmetic_mean),
        ("M", neuman_sandor),
        ("T", second_seiffert),
        ("S", root_mean_square),
    ];

    proptest! {
        #[test]
        fn symmetric((a, b) in pairs()) {
            for (name, f) in ALL {
                prop_assert_eq!(f(pair(a, b)), f(pair(b, a)), "{}", name);
            }
            prop_assert_eq!(neuman_sandor_enclosure(pair(a, b), P), neuman_sandor_enclosure(pair(b, a), P));
            prop_assert_eq!(second_seiffert_enclosure(pair(a, b), P), second_seiffert_enclosure(pair(b, a), P));
        }

        #[test]
        fn homogeneous((a, b) in pairs(), k in -3.0f64..3.0) {
            let k = 10f64.powf(k);
            for (name, f) in ALL {
                let scaled = f(pair(k * a, k * b));
                let reference = k * f(pair(a, b));
                let diff = (scaled - reference).abs();
                prop_assert!(diff <= 8.0 * f64::EPSILON * reference, "{}: {} vs {}", name, scaled, reference);
            }
        }

        #[test]
        fn power_of_two_scaling_is_exact((a, b) in pairs(), j in -60i32..60) {
            let k = 2f64.powi(j);
            for (name, f) in ALL {
                prop_assert_eq!(f(pair(k * a, k * b)), k * f(pair(a, b)), "{}", name);
            }
        }

        #[test]
        fn between_min_and_max((a, b) in pairs()) {
            prop_assume!(a != b);
            for (name, f) in ALL {
                let m = f(pair(a, b));
                prop_assert!(a.min(b) < m && m < a.max(b), "{}", name);
            }
        }

        #[test]
        fn ordering_chain((a, b) in pairs()) {
            prop_assume!((a / b - 1.0).abs() > 1e-6);
            let pr = pair(a, b);
            let (am, m, t, s) = (arithmetic_mean(pr), neuman_sandor(pr), second_seiffert(pr), root_mean_square(pr));
            prop_assert!(am < m && m < t && t < s, "{} {} {} {}", am, m, t, s);
        }

        #[test]
        fn weighted_rms_interpolates((a, b) in pairs()) {
            let pr = pair(a, b);
            prop_assert_eq!(weighted_rms(pr, Weight::HALF), arithmetic_mean(pr));
            prop_assert_eq!(weighted_rms(pr, Weight::ONE), root_mean_square(pr));
            let half = CertInterval::from_f64(P, 0.5);
            let one = CertInterval::from_f64(P, 1.0);
            prop_assert!(weighted_rms_enclosure(pr, &half, P).intersects(&arithmetic_mean_enclosure(pr, P)));
            prop_assert!(weighted_rms_enclosure(pr, &one, P).intersects(&root_mean_square_enclosure(pr, P)));
        }

        #[test]
        fn weighted_rms_increases_with_weight((a, b) in pairs(), p1 in 0.5f64..1.0, gap in 1e-3f64..0.5) {
            prop_assume!((a / b - 1.0).abs() > 1e-3);
            let p2 = (p1 + gap).min(1.0);
            prop_assume!(p2 > p1);
            let pr = pair(a, b);
            let lo = weighted_rms(pr, Weight::new(p1).unwrap());
            let hi = weighted_rms(pr, Weight::new(p2).unwrap());
            prop_assert!(lo < hi);
            let lo_e = weighted_rms_enclosure(pr, &CertInterval::from_f64(P, p1), P);
            let hi_e = weighted_rms_enclosure(pr, &CertInterval::from_f64(P, p2), P);
            prop_assert!(lo_e.certainly_lt(&hi_e));
        }

        #[test]
        fn enclosures_contain_oracle((a, b) in pairs()) {
            prop_assume!(a != b);
            let pr = pair(a, b);
            let close = |enc: &CertInterval, r: &Float| {
                let eps = Float::with_val(300, r.abs_ref()) * Float::with_val(64, 1e-70);
                let band = CertInterval::from_bounds(
                    Float::with_val_round(300, r - &eps, Round::Down).0,
                    Float::with_val_round(300, r + &eps, Round::Up).0,
                );
                enc.intersects(&band)
            };
            prop_assert!(close(&neuman_sandor_enclosure(pr, P), &oracle::m(a, b)));
            prop_assert!(close(&second_seiffert_enclosure(pr, P), &oracle::t(a, b)));
        }
    }
}
