//! Closed-form sharp constants, evaluated on demand as certified enclosures.

use rug::Rational;
use serde::Serialize;

use crate::interval::CertInterval;
use crate::precision::Precision;
use crate::quad::QuadExt3;

/// `ln(1 + sqrt 2) = asinh(1)`.
pub fn ln_one_plus_sqrt2(prec: Precision) -> CertInterval {
    CertInterval::from_i64(prec, 1).asinh()
}

/// Lower sharp weight `(1 + sqrt(1/L^2 - 1)) / 2` with `L = ln(1 + sqrt 2)`.
pub fn lambda_sharp(prec: Precision) -> CertInterval {
    let l = ln_one_plus_sqrt2(prec);
    let one = CertInterval::from_i64(prec, 1);
    let inv_l2 = l.sqr().recip().expect("L > 0");
    let root = (&inv_l2 - &one).sqrt().expect("1/L^2 > 1");
    (&one + &root).mul_pow2(-1)
}

/// Upper sharp weight `(3 + sqrt 3) / 6`.
pub fn mu_sharp(prec: Precision) -> CertInterval {
    mu_exact().to_interval(prec)
}

/// `(3 + sqrt 3) / 6 = 1/2 + (1/6) sqrt 3`, exactly.
pub fn mu_exact() -> QuadExt3 {
    QuadExt3::new(Rational::from((1, 2)), Rational::from((1, 6)))
}

/// A named constant with the formula it is evaluated from.
#[derive(Clone, Debug, Serialize)]
pub struct SharpConstant {
    pub name: &'static str,
    #[serde(skip)]
    pub value: CertInterval,
    pub closed_form: &'static str,
    /// Which double inequality the constant is sharp for.
    pub source: &'static str,
}

/// The upper and lower weights of the main double inequality
/// `S(lambda-recombined) < M < S(mu-recombined)`.
pub fn theorem_constants(prec: Precision) -> [SharpConstant; 2] {
    [
        SharpConstant {
            name: "lambda",
            value: lambda_sharp(prec),
            closed_form: "(1 + sqrt(1/ln(1+sqrt2)^2 - 1)) / 2",
            source: "S(pa+(1-p)b, pb+(1-p)a) < M(a,b): largest p",
        },
        SharpConstant {
            name: "mu",
            value: mu_sharp(prec),
            closed_form: "(3 + sqrt3) / 6",
            source: "M(a,b) < S(pa+(1-p)b, pb+(1-p)a): smallest p",
        },
    ]
}

/// Sharp constants of three earlier double inequalities, in
/// `(alpha, beta)` order for each.
pub fn prior_constants(prec: Precision) -> Vec<SharpConstant> {
    let one = CertInterval::from_i64(prec, 1);
    let pi = CertInterval::pi(prec);
    let sqrt2 = CertInterval::sqrt_of(prec, 2);
    let sqrt2_m1 = &sqrt2 - &one;
    let l = ln_one_plus_sqrt2(prec);
    let ratio = |num: &CertInterval, den: &CertInterval| {
        num.checked_div(den).expect("non-zero denominator")
    };

    let t_alpha = ratio(&(&CertInterval::from_i64(prec, 4) - &pi), &(&sqrt2_m1 * &pi));
    let t_beta = ratio(&CertInterval::from_i64(prec, 2), &CertInterval::from_i64(prec, 3));
    let m_alpha = ratio(&(&one - &l), &(&sqrt2_m1 * &l));
    let m_beta = ratio(&one, &CertInterval::from_i64(prec, 3));
    let sixteen_over_pi2 = ratio(&CertInterval::from_i64(prec, 16), &pi.sqr());
    let w_alpha = (&one + &(&sixteen_over_pi2 - &one).sqrt().expect("16/pi^2 > 1")).mul_pow2(-1);
    let w_beta = ratio(
        &(&CertInterval::from_i64(prec, 3) + &CertInterval::sqrt_of(prec, 6)),
        &CertInterval::from_i64(prec, 6),
    );

    vec![
        SharpConstant {
            name: "seiffert_linear_alpha",
            value: t_alpha,
            closed_form: "(4 - pi) / ((sqrt2 - 1) pi)",
            source: "alpha S + (1-alpha) A < T",
        },
        SharpConstant {
            name: "seiffert_linear_beta",
            value: t_beta,
            closed_form: "2/3",
            source: "T < beta S + (1-beta) A",
        },
        SharpConstant {
            name: "neuman_sandor_linear_alpha",
            value: m_alpha,
            closed_form: "(1 - L) / ((sqrt2 - 1) L), L = ln(1+sqrt2)",
            source: "alpha S + (1-alpha) A < M",
        },
        SharpConstant {
            name: "neuman_sandor_linear_beta",
            value: m_beta,
            closed_form: "1/3",
            source: "M < beta S + (1-beta) A",
        },
        SharpConstant {
            name: "seiffert_weighted_alpha",
            value: w_alpha,
            closed_form: "(1 + sqrt(16/pi^2 - 1)) / 2",
            source: "S(alpha a + (1-alpha) b, alpha b + (1-alpha) a) < T",
        },
        SharpConstant {
            name: "seiffert_weighted_beta",
            value: w_beta,
            closed_form: "(3 + sqrt6) / 6",
            source: "T < S(beta a + (1-beta) b, beta b + (1-beta) a)",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Scalar;
    use rug::Float;

    fn bits(n: u32) -> Precision {
        Precision::new(n).unwrap()
    }

    #[test]
    fn lambda_value_and_leading_digits() {
        let l53 = lambda_sharp(Precision::DOUBLE);
        assert!(l53.lower_decimal(10).starts_with("0.76800"));
        let l200 = lambda_sharp(bits(200));
        assert!(CertInterval::hull_f64(bits(200), 0.768001, 0.768003).encloses(&l200));
        // 0.76800209773433341999967247993165810290293621593245...
        assert!(l200.lower_decimal(40).starts_with("0.7680020977343334199996724799316581029"));
    }

    #[test]
    fn lambda_satisfies_its_quadratic() {
        // 2 lambda^2 - 2 lambda + 1 = 1 / (2 L^2)
        let p = Precision::CERTIFY;
        let lam = lambda_sharp(p);
        let lhs = &(&lam.sqr().mul_pow2(1) - &lam.mul_pow2(1)) + &CertInterval::from_i64(p, 1);
        let rhs = ln_one_plus_sqrt2(p).sqr().mul_pow2(1).recip().unwrap();
        assert!(lhs.intersects(&rhs));
        assert!((&lhs - &rhs).width() < Float::with_val(64, 1e-70));
    }

    #[test]
    fn mu_value_and_exact_root() {
        let mu = mu_sharp(Precision::DOUBLE);
        assert!((mu.to_f64() - 0.788_675_134_594_813).abs() < 1e-12);
        assert!(mu.lower_decimal(3).starts_with("0.78"));
        let m = mu_exact();
        let q = m.mul_int(6).mul(&m).sub(&m.mul_int(6)).add(&m.int_like(1));
        assert!(q.is_zero());
        assert!(q.is_rational());
    }

    #[test]
    fn ordering_of_sharp_weights() {
        let p = Precision::CERTIFY;
        let half = CertInterval::from_f64(p, 0.5);
        let one = CertInterval::from_f64(p, 1.0);
        let lam = lambda_sharp(p);
        let mu = mu_sharp(p);
        assert!(half.certainly_lt(&lam));
        assert!(lam.certainly_lt(&mu));
        assert!(mu.certainly_lt(&one));
    }

    #[test]
    fn prior_constant_values() {
        let c = prior_constants(Precision::CERTIFY);
        assert_eq!(c.len(), 6);
        let v = |name: &str| c.iter().find(|k| k.name == name).unwrap().value.to_f64();
        assert!((v("seiffert_linear_beta") - 2.0 / 3.0).abs() < 1e-16);
        assert!((v("seiffert_weighted_beta") - 0.908_248_290_463_863).abs() < 1e-15);
        assert!((v("seiffert_linear_alpha") - 0.659_658_614_676_279_8).abs() < 1e-15);
        assert!((v("neuman_sandor_linear_alpha") - 0.324_935_418_182_370_35).abs() < 1e-15);
        assert!((v("seiffert_weighted_alpha") - 0.894_061_841_047_000).abs() < 1e-15);
        assert!((v("neuman_sandor_linear_beta") - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn each_alpha_is_below_its_beta() {
        let c = prior_constants(Precision::CERTIFY);
        for pair in c.chunks(2) {
            assert!(pair[0].value.certainly_lt(&pair[1].value), "{}", pair[0].name);
        }
    }

    #[test]
    fn precision_doubling_is_stable() {
        for q in [64u32, 128, 256, 1024] {
            let lo = bits(q);
            let hi = bits(2 * q);
            let mut all: Vec<(&str, CertInterval, CertInterval)> = theorem_constants(lo)
                .into_iter()
                .zip(theorem_constants(hi))
                .map(|(a, b)| (a.name, a.value, b.value))
                .collect();
            all.extend(
                prior_constants(lo)
                    .into_iter()
                    .zip(prior_constants(hi))
                    .map(|(a, b)| (a.name, a.value, b.value)),
            );
            for (name, a, b) in all {
                let diff = Float::with_val(2 * q, a.midpoint() - b.midpoint()).abs();
                let scale = Float::with_val(2 * q, b.midpoint().abs()) >> (q as i32 - 2);
                assert!(diff <= scale, "{name} at {q} bits");
                assert!(a.intersects(&b), "{name}");
            }
        }
    }
}
