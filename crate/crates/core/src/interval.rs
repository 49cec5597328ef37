//! Arbitrary-precision intervals with outward rounding.
//!
//! Endpoints are MPFR floats. Every operation computes the lower endpoint
//! rounded toward -inf and the upper endpoint rounded toward +inf, so the
//! exact real result of the operation applied to any members of the inputs
//! lies in the output. MPFR rounds all of the functions used here
//! (`sqrt`, `ln`, `asinh`, `atan`) correctly in every direction.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::AssignRound;
use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::precision::Precision;

/// Certified sign of an enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    /// Zero lies inside the enclosure (or on its boundary).
    Indeterminate,
}

impl Sign {
    pub fn is_definite(self) -> bool {
        self != Sign::Indeterminate
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
            Sign::Indeterminate => Sign::Indeterminate,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
            Sign::Indeterminate => "?",
        })
    }
}

fn rounded<T>(prec: u32, val: T, round: Round) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, round).0
}

fn min_of(values: [Float; 4]) -> Float {
    values
        .into_iter()
        .reduce(|a, b| if b < a { b } else { a })
        .expect("four candidates")
}

fn max_of(values: [Float; 4]) -> Float {
    values
        .into_iter()
        .reduce(|a, b| if b > a { b } else { a })
        .expect("four candidates")
}

/// A closed interval `[lower, upper]` enclosing an unknown real.
#[derive(Clone, Debug, PartialEq)]
pub struct CertInterval {
    lo: Float,
    hi: Float,
}

impl CertInterval {
    /// Builds an interval from explicit endpoints.
    ///
    /// Panics if either endpoint is NaN or if `lo > hi`.
    pub fn from_bounds(lo: Float, hi: Float) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN interval endpoint");
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        CertInterval { lo, hi }
    }

    /// The exact double `x` as a degenerate interval. Panics on non-finite input.
    pub fn from_f64(prec: Precision, x: f64) -> Self {
        assert!(x.is_finite(), "non-finite interval point {x}");
        let v = Float::with_val(prec.bits(), x);
        CertInterval { lo: v.clone(), hi: v }
    }

    /// Smallest interval containing both doubles.
    pub fn hull_f64(prec: Precision, a: f64, b: f64) -> Self {
        Self::from_f64(prec, a.min(b)).hull(&Self::from_f64(prec, a.max(b)))
    }

    pub fn from_i64(prec: Precision, n: i64) -> Self {
        let bits = prec.bits();
        CertInterval {
            lo: rounded(bits, n, Round::Down),
            hi: rounded(bits, n, Round::Up),
        }
    }

    pub fn from_rational(prec: Precision, q: &Rational) -> Self {
        let bits = prec.bits();
        CertInterval {
            lo: rounded(bits, q, Round::Down),
            hi: rounded(bits, q, Round::Up),
        }
    }

    /// Enclosure of pi.
    pub fn pi(prec: Precision) -> Self {
        let bits = prec.bits();
        CertInterval {
            lo: rounded(bits, Constant::Pi, Round::Down),
            hi: rounded(bits, Constant::Pi, Round::Up),
        }
    }

    /// Enclosure of `sqrt(n)` for a non-negative integer.
    pub fn sqrt_of(prec: Precision, n: u32) -> Self {
        Self::from_i64(prec, i64::from(n))
            .sqrt()
            .expect("non-negative radicand")
    }

    pub fn lower(&self) -> &Float {
        &self.lo
    }

    pub fn upper(&self) -> &Float {
        &self.hi
    }

    /// Working precision of the endpoints, in bits.
    pub fn precision(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    fn prec_with(&self, other: &Self) -> u32 {
        self.precision().max(other.precision())
    }

    pub fn lower_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn upper_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    /// Midpoint rounded to nearest at the working precision.
    pub fn midpoint(&self) -> Float {
        let mut sum = rounded(self.precision() + 1, &self.lo + &self.hi, Round::Nearest);
        sum >>= 1;
        Float::with_val(self.precision(), sum)
    }

    /// Nearest double to the midpoint.
    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    /// `upper - lower`, rounded up.
    pub fn width(&self) -> Float {
        rounded(self.precision(), &self.hi - &self.lo, Round::Up)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn sign(&self) -> Sign {
        if self.lo.is_sign_positive() && !self.lo.is_zero() {
            Sign::Positive
        } else if self.hi.is_sign_negative() && !self.hi.is_zero() {
            Sign::Negative
        } else {
            Sign::Indeterminate
        }
    }

    pub fn contains(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_zero(&self) -> bool {
        self.sign() == Sign::Indeterminate
    }

    /// True when every member of `self` is below every member of `other`.
    pub fn certainly_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    /// `other` lies inside `self`.
    pub fn encloses(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hull(&self, other: &Self) -> Self {
        let lo = if other.lo < self.lo { &other.lo } else { &self.lo };
        let hi = if other.hi > self.hi { &other.hi } else { &self.hi };
        CertInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        }
    }

    /// Re-rounds both endpoints outward to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        let bits = prec.bits();
        CertInterval {
            lo: rounded(bits, &self.lo, Round::Down),
            hi: rounded(bits, &self.hi, Round::Up),
        }
    }

    pub fn sqr(&self) -> Self {
        let bits = self.precision();
        let lo_sq = |r| rounded(bits, self.lo.square_ref(), r);
        let hi_sq = |r| rounded(bits, self.hi.square_ref(), r);
        match self.sign() {
            Sign::Positive => CertInterval {
                lo: lo_sq(Round::Down),
                hi: hi_sq(Round::Up),
            },
            Sign::Negative => CertInterval {
                lo: hi_sq(Round::Down),
                hi: lo_sq(Round::Up),
            },
            Sign::Indeterminate => {
                let a = lo_sq(Round::Up);
                let b = hi_sq(Round::Up);
                CertInterval {
                    lo: Float::with_val(bits, 0),
                    hi: if a > b { a } else { b },
                }
            }
        }
    }

    /// `None` when the interval reaches below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.lo.is_sign_negative() && !self.lo.is_zero() {
            return None;
        }
        let bits = self.precision();
        Some(CertInterval {
            lo: rounded(bits, self.lo.sqrt_ref(), Round::Down),
            hi: rounded(bits, self.hi.sqrt_ref(), Round::Up),
        })
    }

    /// `None` unless the interval is strictly positive.
    pub fn ln(&self) -> Option<Self> {
        if self.sign() != Sign::Positive {
            return None;
        }
        let bits = self.precision();
        Some(CertInterval {
            lo: rounded(bits, self.lo.ln_ref(), Round::Down),
            hi: rounded(bits, self.hi.ln_ref(), Round::Up),
        })
    }

    pub fn asinh(&self) -> Self {
        let bits = self.precision();
        CertInterval {
            lo: rounded(bits, self.lo.asinh_ref(), Round::Down),
            hi: rounded(bits, self.hi.asinh_ref(), Round::Up),
        }
    }

    pub fn atan(&self) -> Self {
        let bits = self.precision();
        CertInterval {
            lo: rounded(bits, self.lo.atan_ref(), Round::Down),
            hi: rounded(bits, self.hi.atan_ref(), Round::Up),
        }
    }

    /// `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let bits = self.precision();
        Some(CertInterval {
            lo: rounded(bits, 1u32 / &self.hi, Round::Down),
            hi: rounded(bits, 1u32 / &self.lo, Round::Up),
        })
    }

    /// `None` when the divisor contains zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let bits = self.prec_with(rhs);
        let q = |a: &Float, b: &Float, r| rounded(bits, a / b, r);
        let lo = min_of([
            q(&self.lo, &rhs.lo, Round::Down),
            q(&self.lo, &rhs.hi, Round::Down),
            q(&self.hi, &rhs.lo, Round::Down),
            q(&self.hi, &rhs.hi, Round::Down),
        ]);
        let hi = max_of([
            q(&self.lo, &rhs.lo, Round::Up),
            q(&self.lo, &rhs.hi, Round::Up),
            q(&self.hi, &rhs.lo, Round::Up),
            q(&self.hi, &rhs.hi, Round::Up),
        ]);
        Some(CertInterval { lo, hi })
    }

    /// Exact scaling by a power of two.
    pub fn mul_pow2(&self, exp: i32) -> Self {
        CertInterval {
            lo: Float::with_val(self.lo.prec(), &self.lo << exp),
            hi: Float::with_val(self.hi.prec(), &self.hi << exp),
        }
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        let bits = self.precision();
        let k = CertInterval {
            lo: rounded(bits, n, Round::Down),
            hi: rounded(bits, n, Round::Up),
        };
        self * &k
    }

    /// Lower endpoint as a positional decimal string with `digits` significant
    /// digits, rounded down.
    pub fn lower_decimal(&self, digits: usize) -> String {
        crate::decimal::positional(&self.lo, digits, Round::Down)
    }

    /// Upper endpoint as a positional decimal string, rounded up.
    pub fn upper_decimal(&self, digits: usize) -> String {
        crate::decimal::positional(&self.hi, digits, Round::Up)
    }
}

impl fmt::Display for CertInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        write!(
            f,
            "[{}, {}]",
            self.lower_decimal(digits),
            self.upper_decimal(digits)
        )
    }
}

impl Add for &CertInterval {
    type Output = CertInterval;

    fn add(self, rhs: &CertInterval) -> CertInterval {
        let bits = self.prec_with(rhs);
        CertInterval {
            lo: rounded(bits, &self.lo + &rhs.lo, Round::Down),
            hi: rounded(bits, &self.hi + &rhs.hi, Round::Up),
        }
    }
}

impl Sub for &CertInterval {
    type Output = CertInterval;

    fn sub(self, rhs: &CertInterval) -> CertInterval {
        let bits = self.prec_with(rhs);
        CertInterval {
            lo: rounded(bits, &self.lo - &rhs.hi, Round::Down),
            hi: rounded(bits, &self.hi - &rhs.lo, Round::Up),
        }
    }
}

impl Mul for &CertInterval {
    type Output = CertInterval;

    fn mul(self, rhs: &CertInterval) -> CertInterval {
        let bits = self.prec_with(rhs);
        let p = |a: &Float, b: &Float, r| rounded(bits, a * b, r);
        let lo = min_of([
            p(&self.lo, &rhs.lo, Round::Down),
            p(&self.lo, &rhs.hi, Round::Down),
            p(&self.hi, &rhs.lo, Round::Down),
            p(&self.hi, &rhs.hi, Round::Down),
        ]);
        let hi = max_of([
            p(&self.lo, &rhs.lo, Round::Up),
            p(&self.lo, &rhs.hi, Round::Up),
            p(&self.hi, &rhs.lo, Round::Up),
            p(&self.hi, &rhs.hi, Round::Up),
        ]);
        CertInterval { lo, hi }
    }
}

impl Neg for &CertInterval {
    type Output = CertInterval;

    fn neg(self) -> CertInterval {
        CertInterval {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for CertInterval {
            type Output = CertInterval;
            fn $m(self, rhs: CertInterval) -> CertInterval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CertInterval> for CertInterval {
            type Output = CertInterval;
            fn $m(self, rhs: &CertInterval) -> CertInterval {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for CertInterval {
    type Output = CertInterval;

    fn neg(self) -> CertInterval {
        -&self
    }
}
