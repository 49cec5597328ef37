//! Exact arithmetic in the quadratic field Q(sqrt 3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::Rational;

use crate::interval::{CertInterval, Sign};
use crate::precision::Precision;

/// The number `r + s * sqrt(3)` with rational `r`, `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadExt3 {
    r: Rational,
    s: Rational,
}

impl QuadExt3 {
    pub fn new(r: Rational, s: Rational) -> Self {
        QuadExt3 { r, s }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadExt3 {
            r,
            s: Rational::new(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    pub fn sqrt3() -> Self {
        QuadExt3 {
            r: Rational::new(),
            s: Rational::from(1),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn sqrt3_part(&self) -> &Rational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.cmp0() == Ordering::Equal && self.s.cmp0() == Ordering::Equal
    }

    pub fn is_rational(&self) -> bool {
        self.s.cmp0() == Ordering::Equal
    }

    /// `r - s*sqrt(3)`.
    pub fn conjugate(&self) -> Self {
        QuadExt3 {
            r: self.r.clone(),
            s: Rational::from(-&self.s),
        }
    }

    /// Field norm `r^2 - 3 s^2`; zero only for zero.
    pub fn norm(&self) -> Rational {
        let r2 = Rational::from(self.r.square_ref());
        let s2 = Rational::from(self.s.square_ref());
        r2 - s2 * 3u32
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadExt3 {
            r: Rational::from(&c.r / &n),
            s: Rational::from(&c.s / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|inv| self * &inv)
    }

    /// Exact sign, decided by comparing `r^2` with `3 s^2` when the parts
    /// disagree in sign.
    pub fn signum(&self) -> Ordering {
        let rs = self.r.cmp0();
        let ss = self.s.cmp0();
        match (rs, ss) {
            (a, Ordering::Equal) => a,
            (Ordering::Equal, b) => b,
            (a, b) if a == b => a,
            (a, _) => {
                let r2 = Rational::from(self.r.square_ref());
                let s2 = Rational::from(self.s.square_ref()) * 3u32;
                match r2.cmp(&s2) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn sign(&self) -> Sign {
        match self.signum() {
            Ordering::Greater => Sign::Positive,
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Indeterminate,
        }
    }

    /// Outward-rounded enclosure of the real number this represents.
    pub fn to_interval(&self, prec: Precision) -> CertInterval {
        let r = CertInterval::from_rational(prec, &self.r);
        let s = CertInterval::from_rational(prec, &self.s);
        &r + &(&s * &CertInterval::sqrt_of(prec, 3))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_interval(Precision::new(128).expect("valid")).to_f64()
    }
}

impl From<i64> for QuadExt3 {
    fn from(n: i64) -> Self {
        QuadExt3::from_i64(n)
    }
}

impl From<Rational> for QuadExt3 {
    fn from(r: Rational) -> Self {
        QuadExt3::from_rational(r)
    }
}

impl fmt::Display for QuadExt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.r)
        } else {
            write!(f, "{} + {}*sqrt(3)", self.r, self.s)
        }
    }
}

impl Add for &QuadExt3 {
    type Output = QuadExt3;

    fn add(self, rhs: &QuadExt3) -> QuadExt3 {
        QuadExt3 {
            r: Rational::from(&self.r + &rhs.r),
            s: Rational::from(&self.s + &rhs.s),
        }
    }
}

impl Sub for &QuadExt3 {
    type Output = QuadExt3;

    fn sub(self, rhs: &QuadExt3) -> QuadExt3 {
        QuadExt3 {
            r: Rational::from(&self.r - &rhs.r),
            s: Rational::from(&self.s - &rhs.s),
        }
    }
}

impl Mul for &QuadExt3 {
    type Output = QuadExt3;

    fn mul(self, rhs: &QuadExt3) -> QuadExt3 {
        // (r1 + s1 w)(r2 + s2 w) with w^2 = 3
        let rr = Rational::from(&self.r * &rhs.r);
        let ss = Rational::from(&self.s * &rhs.s);
        let rs = Rational::from(&self.r * &rhs.s);
        let sr = Rational::from(&self.s * &rhs.r);
        QuadExt3 {
            r: rr + ss * 3u32,
            s: rs + sr,
        }
    }
}

impl Div for &QuadExt3 {
    type Output = QuadExt3;

    /// Panics on division by zero; see [`QuadExt3::checked_div`].
    fn div(self, rhs: &QuadExt3) -> QuadExt3 {
        self.checked_div(rhs).expect("division by zero in Q(sqrt 3)")
    }
}

impl Neg for &QuadExt3 {
    type Output = QuadExt3;

    fn neg(self) -> QuadExt3 {
        QuadExt3 {
            r: Rational::from(-&self.r),
            s: Rational::from(-&self.s),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for QuadExt3 {
            type Output = QuadExt3;
            fn $m(self, rhs: QuadExt3) -> QuadExt3 {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(r: (i64, i64), s: (i64, i64)) -> QuadExt3 {
        QuadExt3::new(Rational::from(r), Rational::from(s))
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let w = QuadExt3::sqrt3();
        assert_eq!(&w * &w, QuadExt3::from_i64(3));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = q((3, 2), (-1, 6));
        let b = q((1, 1), (1, 1));
        let c = &(&a * &b) / &b;
        assert_eq!(c, a);
        assert!(QuadExt3::default().recip().is_none());
    }

    #[test]
    fn sign_is_exact_near_cancellation() {
        // 7 - 4 sqrt 3 = 0.0717..., 97 - 56 sqrt 3 = 0.00515...
        assert_eq!(q((7, 1), (-4, 1)).sign(), Sign::Positive);
        assert_eq!(q((-97, 1), (56, 1)).sign(), Sign::Negative);
        assert_eq!(q((0, 1), (0, 1)).sign(), Sign::Indeterminate);
        assert_eq!(q((-1, 1), (-1, 1)).sign(), Sign::Negative);
    }

    #[test]
    fn embedding_contains_value() {
        let mu = q((1, 2), (1, 6));
        let iv = mu.to_interval(Precision::CERTIFY);
        assert!((iv.to_f64() - 0.788_675_134_594_812_9).abs() < 2e-16);
        assert!(iv.width() < rug::Float::with_val(64, 1e-70));
    }

    proptest! {
        #[test]
        fn field_axioms_hold(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20,
                             e in -50i64..50, g in 1i64..20) {
            let x = q((a, b), (c, d));
            let y = q((c, d), (e, g));
            let z = q((e, g), (a, b));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x.clone());
            }
            let iv = (&x * &y).to_interval(Precision::CERTIFY);
            let prod = &x.to_interval(Precision::CERTIFY) * &y.to_interval(Precision::CERTIFY);
            prop_assert!(iv.intersects(&prod));
        }
    }
}
