//! Dense univariate polynomials over a pluggable coefficient carrier, plus
//! certified real-root isolation.

use std::fmt;

use rug::float::Round;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::interval::{CertInterval, Sign};
use crate::quad::QuadExt3;

/// Ring operations a polynomial coefficient carrier must provide.
///
/// Constants are built "like" an existing element so that carriers with a
/// context (the working precision of an interval) can propagate it.
pub trait Scalar: Clone + fmt::Debug {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    /// Exactly zero (for intervals: the degenerate interval `[0, 0]`).
    fn is_exact_zero(&self) -> bool;

    fn mul_int(&self, n: i64) -> Self {
        self.mul(&self.int_like(n))
    }
}

/// Carriers with exact equality and division.
pub trait ExactField: Scalar + PartialEq {
    fn checked_div(&self, rhs: &Self) -> Option<Self>;
    fn sign(&self) -> Sign;
}

impl Scalar for Rational {
    fn add(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn neg(&self) -> Self {
        Rational::from(-self)
    }
    fn int_like(&self, n: i64) -> Self {
        Rational::from(n)
    }
    fn is_exact_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
}

impl ExactField for Rational {
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.cmp0().is_eq() {
            None
        } else {
            Some(Rational::from(self / rhs))
        }
    }
    fn sign(&self) -> Sign {
        match self.cmp0() {
            std::cmp::Ordering::Greater => Sign::Positive,
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Indeterminate,
        }
    }
}

impl Scalar for QuadExt3 {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn int_like(&self, n: i64) -> Self {
        QuadExt3::from_i64(n)
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
}

impl ExactField for QuadExt3 {
    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        QuadExt3::checked_div(self, rhs)
    }
    fn sign(&self) -> Sign {
        QuadExt3::sign(self)
    }
}

impl Scalar for CertInterval {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn int_like(&self, n: i64) -> Self {
        let bits = self.precision();
        CertInterval::from_bounds(
            Float::with_val_round(bits, n, Round::Down).0,
            Float::with_val_round(bits, n, Round::Up).0,
        )
    }
    fn is_exact_zero(&self) -> bool {
        self.is_point() && self.lower().is_zero()
    }
    fn mul_int(&self, n: i64) -> Self {
        self.mul_i64(n)
    }
}

/// Evaluates the integer polynomial with ascending coefficients `coeffs` at `x`.
pub fn eval_int_poly<F: Scalar>(coeffs: &[i64], x: &F) -> F {
    let mut acc = x.int_like(*coeffs.last().expect("non-empty coefficient list"));
    for &c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(x).add(&x.int_like(c));
    }
    acc
}

/// Dense polynomial in `t` with coefficients in ascending degree.
///
/// Trailing exactly-zero coefficients are dropped, so the zero polynomial has
/// no coefficients and every other polynomial has a leading coefficient that
/// is not the exact zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_exact_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Polynomial with integer coefficients, built in the carrier of `like`.
    pub fn from_ints(like: &F, coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| like.int_like(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Horner evaluation. The zero polynomial evaluates to `t.int_like(0)`.
    pub fn eval(&self, t: &F) -> F {
        let mut iter = self.coeffs.iter().rev();
        let Some(first) = iter.next() else {
            return t.int_like(0);
        };
        iter.fold(first.clone(), |acc, c| acc.mul(t).add(c))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.add(b), |b| b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.sub(b), |b| b.neg())
    }

    fn zip_with(
        &self,
        rhs: &Self,
        both: impl Fn(&F, &F) -> F,
        rhs_only: impl Fn(&F) -> F,
    ) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => both(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => rhs_only(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out: Vec<Option<F>> = vec![None; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.mul(b);
                out[i + j] = Some(match out[i + j].take() {
                    Some(acc) => acc.add(&term),
                    None => term,
                });
            }
        }
        Poly::new(out.into_iter().map(|c| c.expect("filled")).collect())
    }

    pub fn scale(&self, k: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        match n {
            0 => Poly::new(vec![self
                .coeffs
                .first()
                .expect("power of the zero polynomial")
                .int_like(1)]),
            _ => (1..n).fold(self.clone(), |acc, _| acc.mul(self)),
        }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: ExactField> Poly<F> {
    /// First degree at which `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coeffs.get(k) != other.coeffs.get(k))
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lead = divisor.leading()?;
        let dd = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<Option<F>> = vec![None; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.pop().expect("non-empty");
            let k = rem.len() - dd;
            let factor = top.checked_div(lead)?;
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&factor.mul(c));
            }
            quot[k] = Some(factor);
        }
        let like = lead.int_like(0);
        let quot = quot.into_iter().map(|c| c.unwrap_or_else(|| like.clone()));
        Some((Poly::new(quot.collect()), Poly::new(rem)))
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, rem) = chain[n - 2]
                .div_rem(&chain[n - 1])
                .expect("non-zero divisor");
            if rem.is_zero() {
                break;
            }
            chain.push(Poly::new(rem.coeffs.iter().map(Scalar::neg).collect()));
        }
        chain
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &F, b: &F) -> usize {
        let chain = self.sturm_sequence();
        let variations = |x: &F| {
            let signs: Vec<Sign> = chain
                .iter()
                .map(|p| p.eval(x).sign())
                .filter(|s| s.is_definite())
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(a).saturating_sub(variations(b))
    }
}

impl<F: Scalar + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_exact_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// One isolated root of an interval polynomial.
#[derive(Clone, Debug)]
pub struct RootEnclosure {
    /// Interval whose endpoints carry opposite certified signs.
    pub enclosure: CertInterval,
    /// Sign of the polynomial at the left endpoint.
    pub sign_left: Sign,
    /// The derivative excludes zero on the whole enclosure, so the root is
    /// the only one inside it.
    pub unique: bool,
}

/// Isolates the sign-changing real roots of `poly` in `bracket`.
///
/// The bracket is subdivided by bisection. Pieces on which the interval
/// evaluation of `poly` excludes zero are discarded; a piece with opposite
/// certified endpoint signs and a derivative that excludes zero holds exactly
/// one root. Pieces narrower than `2^-40` of the bracket that still contain
/// zero are kept only if their endpoint signs differ, so roots of even
/// multiplicity are not reported. Every returned enclosure is refined by
/// bisection until its width is at most `target_width` or the sign at the
/// bisection point can no longer be certified.
pub fn isolate_roots(
    poly: &Poly<CertInterval>,
    bracket: &CertInterval,
    target_width: &Float,
) -> Result<Vec<RootEnclosure>> {
    let bits = bracket.precision().max(poly.coeffs().iter().map(CertInterval::precision).max().unwrap_or(53));
    let point = |x: &Float| CertInterval::from_bounds(Float::with_val(bits, x), Float::with_val(bits, x));
    let sign_at = |x: &Float| poly.eval(&point(x)).sign();
    let inconclusive = |x: &Float| Error::InconclusiveSign {
        what: format!("polynomial at bracket endpoint {}", x.to_f64()),
        bits,
    };

    let (lo, hi) = (bracket.lower().clone(), bracket.upper().clone());
    let s_lo = sign_at(&lo);
    let s_hi = sign_at(&hi);
    if !s_lo.is_definite() {
        return Err(inconclusive(&lo));
    }
    if !s_hi.is_definite() {
        return Err(inconclusive(&hi));
    }
    let deriv = poly.derivative();
    let min_width = Float::with_val(bits, bracket.width() >> 40);

    let mut found: Vec<RootEnclosure> = Vec::new();
    let mut stack = vec![(lo, hi, s_lo, s_hi)];
    while let Some((l, r, sl, sr)) = stack.pop() {
        let piece = CertInterval::from_bounds(l.clone(), r.clone());
        if poly.eval(&piece).sign().is_definite() {
            continue;
        }
        let width = piece.width();
        if sl != sr && deriv.eval(&piece).sign().is_definite() {
            found.push(RootEnclosure {
                enclosure: piece,
                sign_left: sl,
                unique: true,
            });
            continue;
        }
        if width <= min_width {
            if sl != sr {
                found.push(RootEnclosure {
                    enclosure: piece,
                    sign_left: sl,
                    unique: false,
                });
            }
            continue;
        }
        let Some((m, sm)) = split_point(&l, &r, bits, &sign_at) else {
            return Err(Error::InconclusiveSign {
                what: format!("polynomial near {}", piece.to_f64()),
                bits,
            });
        };
        stack.push((m.clone(), r, sm, sr));
        stack.push((l, m, sl, sm));
    }

    found.sort_by(|a, b| {
        a.enclosure
            .lower()
            .partial_cmp(b.enclosure.lower())
            .expect("finite endpoints")
    });
    Ok(found
        .into_iter()
        .map(|root| refine(root, target_width, bits, &sign_at))
        .collect())
}

/// A point strictly inside `(l, r)` with a certified sign: the midpoint if
/// possible, otherwise one of a few nearby offsets.
fn split_point(
    l: &Float,
    r: &Float,
    bits: u32,
    sign_at: &impl Fn(&Float) -> Sign,
) -> Option<(Float, Sign)> {
    const FRACTIONS: [(u32, u32); 5] = [(1, 2), (33, 64), (31, 64), (5, 8), (3, 8)];
    let width = Float::with_val(bits, r - l);
    FRACTIONS.iter().find_map(|&(num, den)| {
        let step = Float::with_val(bits, &width * num) / den;
        let m = Float::with_val(bits, l + &step);
        if &m <= l || &m >= r {
            return None;
        }
        let s = sign_at(&m);
        s.is_definite().then_some((m, s))
    })
}

fn refine(
    mut root: RootEnclosure,
    target_width: &Float,
    bits: u32,
    sign_at: &impl Fn(&Float) -> Sign,
) -> RootEnclosure {
    while &root.enclosure.width() > target_width {
        let l = root.enclosure.lower().clone();
        let r = root.enclosure.upper().clone();
        let Some((m, sm)) = split_point(&l, &r, bits, sign_at) else {
            break;
        };
        root.enclosure = if sm == root.sign_left {
            CertInterval::from_bounds(m, r)
        } else {
            CertInterval::from_bounds(l, m)
        };
    }
    root
}
