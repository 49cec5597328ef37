//! The full certificate pipeline as one serializable document.

use rug::{Float, Rational};
use serde::Serialize;

use super::certificates::{cascade, certify_lambda_signs, CascadeReport, SignCertificate};
use super::{check_tower, f_eval, f_limit, g_at_one, g_polys, mu_factorization_check, verify_expansion_identity};
use crate::constants::{lambda_sharp, mu_exact, mu_sharp};
use crate::error::Result;
use crate::interval::{CertInterval, Sign};
use crate::precision::Precision;
use crate::quad::QuadExt3;

/// Significant digits of every decimal endpoint in the report.
pub const REPORT_DIGITS: usize = 40;

/// One interval sign certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub id: String,
    pub formula: String,
    pub lower: String,
    pub upper: String,
    pub sign: Sign,
    pub expected: Sign,
    pub precision_bits: u32,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Certified,
    WrongSign,
    Inconclusive,
}

impl CertificateRecord {
    fn new(id: String, formula: String, enclosure: &CertInterval, expected: Sign) -> Self {
        let sign = enclosure.sign();
        let status = if !sign.is_definite() {
            Status::Inconclusive
        } else if sign == expected {
            Status::Certified
        } else {
            Status::WrongSign
        };
        CertificateRecord {
            id,
            formula,
            lower: enclosure.lower_decimal(REPORT_DIGITS),
            upper: enclosure.upper_decimal(REPORT_DIGITS),
            sign,
            expected,
            precision_bits: enclosure.precision(),
            status,
        }
    }
}

impl From<&SignCertificate> for CertificateRecord {
    fn from(c: &SignCertificate) -> Self {
        CertificateRecord::new(c.id.clone(), c.formula.clone(), &c.enclosure, c.expected)
    }
}

/// An exact or structural check with a yes/no outcome.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRecord {
    fn new(id: &str, description: &str, outcome: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Root {
    pub name: &'static str,
    pub lower: String,
    pub upper: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub requested_bits: u32,
    pub records: Vec<CertificateRecord>,
    pub checks: Vec<CheckRecord>,
    pub roots: Vec<Root>,
}

impl CertificateReport {
    /// Every certificate has its expected definite sign and every check passed.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Certified) && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        let records = self
            .records
            .iter()
            .filter(|r| r.status != Status::Certified)
            .map(|r| format!("{}: sign {} (expected {})", r.id, r.sign, r.expected));
        let checks = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.id, c.detail));
        records.chain(checks).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn rationals() -> Vec<Rational> {
    [(1, 2), (3, 4), (2, 3), (4, 5), (99, 100)]
        .iter()
        .map(|&r| Rational::from(r))
        .collect()
}

fn exact_checks() -> Vec<CheckRecord> {
    let ps = rationals();
    let ts: Vec<Rational> = [(3, 2), (2, 1), (10, 1)].iter().map(|&r| Rational::from(r)).collect();
    let identity = ps
        .iter()
        .try_for_each(|p| verify_expansion_identity(p, &ts).map(drop))
        .and_then(|_| verify_expansion_identity(&mu_exact(), &[QuadExt3::from_i64(2)]).map(drop));
    let tower = ps.iter().try_for_each(|p| check_tower(&g_polys(p)));
    let at_one = ps.iter().chain(std::iter::once(&Rational::from((7, 9)))).all(|p| {
        let g = g_polys(p);
        (1..=4).all(|k| g_at_one(k, p).ok() == Some(g.get(k).expect("k in 1..=4").eval(&Rational::from(1))))
    });
    let mu_g1_one = g_at_one(1, &mu_exact()).map(|v| v.is_zero()).unwrap_or(false);
    let ok = |r: Result<()>, what: &str| r.map(|_| what.to_string()).map_err(|e| e.to_string());
    vec![
        CheckRecord::new(
            "expansion_identity",
            "4Q^3 - (1+t)^4(1+t^2) = (t-1)^2 g1(t), coefficientwise",
            ok(identity, "exact for p in {1/2, 3/4, 2/3, 4/5, 99/100, mu}"),
        ),
        CheckRecord::new(
            "derivative_tower",
            "g2 = g1'/2, g3 = g2'/6, g4 = g3'",
            ok(tower, "exact for p in {1/2, 3/4, 2/3, 4/5, 99/100}"),
        ),
        CheckRecord::new(
            "values_at_one",
            "closed forms of g_k(1) agree with evaluation",
            if at_one { Ok("exact for six rational p".into()) } else { Err("mismatch".into()) },
        ),
        CheckRecord::new(
            "mu_factorization",
            "g1 = (5t^2+8t+5)(t-1)^2/27 at p = mu in Q(sqrt3)",
            ok(mu_factorization_check(), "exact"),
        ),
        CheckRecord::new(
            "mu_g1_at_one",
            "g1(1) = 0 at p = mu",
            if mu_g1_one { Ok("exact zero".into()) } else { Err("non-zero".into()) },
        ),
    ]
}

fn interval_checks(prec: Precision, lambda_certs: &[SignCertificate], cascade: &CascadeReport) -> Vec<CheckRecord> {
    let lam = lambda_sharp(prec);
    let one = CertInterval::from_i64(prec, 1);
    let f_one = f_eval(&lam, &one);
    let lim = f_limit(&lam);
    let lim_tol = Float::with_val(64, Float::i_exp(1, -100));
    let closed = lambda_certs.iter().find(|c| c.id == "g1_at_1_in_L");
    let poly = lambda_certs.iter().find(|c| c.id == "g1_at_1");
    let show = |c: &CertInterval| format!("[{}, {}]", c.lower_decimal(20), c.upper_decimal(20));
    vec![
        CheckRecord::new(
            "f_at_one",
            "f(1) = 0 at p = lambda",
            if f_one.is_point() && f_one.lower().is_zero() { Ok("exact zero".into()) } else { Err(show(&f_one)) },
        ),
        CheckRecord::new(
            "f_limit_lambda",
            "sqrt2 ln(1+sqrt2) - 1/sqrt(2p^2-2p+1) encloses 0 at p = lambda, width < 2^-100",
            if lim.contains_zero() && lim.width() < lim_tol { Ok(show(&lim)) } else { Err(show(&lim)) },
        ),
        CheckRecord::new(
            "g1_at_one_forms_agree",
            "16(6p^2-6p+1) at lambda and -8(4L^2-3)/L^2 overlap",
            match (closed, poly) {
                (Some(a), Some(b)) if a.enclosure.intersects(&b.enclosure) => Ok(show(&b.enclosure)),
                _ => Err("disjoint".into()),
            },
        ),
        CheckRecord::new(
            "root_ordering",
            "1 < t0 < t1 < t2 < t3 as disjoint enclosures",
            if cascade.ordered() { Ok("disjoint and increasing".into()) } else { Err("overlap or order violated".into()) },
        ),
        CheckRecord::new(
            "t0_closed_form",
            "root of g4 equals c3/(2 c4)",
            if cascade.t0_matches_closed_form() { Ok(show(&cascade.t0_closed_form)) } else { Err(show(&cascade.t0)) },
        ),
    ]
}

/// `t = 10^(0.3 i)` for `i = 1..=20`, so `t` runs from about 2 to `10^6`.
pub fn mu_sample_points() -> Vec<f64> {
    (1..=20).map(|i| 10f64.powf(0.3 * f64::from(i))).collect()
}

/// Runs every certificate and check at `prec`, escalating precision where a
/// sign cannot be decided.
pub fn certify(prec: Precision) -> Result<CertificateReport> {
    let lambda_certs = certify_lambda_signs(prec)?;
    let cascade = cascade(prec)?;

    let mut records: Vec<CertificateRecord> = lambda_certs.iter().map(CertificateRecord::from).collect();
    for (i, s) in cascade.sign_pattern.iter().enumerate() {
        records.push(CertificateRecord::new(
            format!("cascade_{i:02}_{}", s.function.split(' ').next().unwrap_or("")),
            format!("{} at t = {} (p = lambda)", s.function, s.t.lower_decimal(12)),
            &s.value,
            s.expected,
        ));
    }
    let mu = mu_sharp(prec);
    for t in mu_sample_points() {
        let v = f_eval(&mu, &CertInterval::from_f64(prec, t));
        records.push(CertificateRecord::new(
            format!("f_mu_{t:.4e}"),
            format!("f({t:e}) at p = mu"),
            &v,
            Sign::Positive,
        ));
    }

    let mut checks = exact_checks();
    checks.extend(interval_checks(prec, &lambda_certs, &cascade));

    let roots = ["t0", "t1", "t2", "t3"]
        .into_iter()
        .zip(cascade.roots())
        .map(|(name, r)| Root {
            name,
            lower: r.lower_decimal(REPORT_DIGITS),
            upper: r.upper_decimal(REPORT_DIGITS),
        })
        .collect();

    Ok(CertificateReport {
        requested_bits: prec.bits(),
        records,
        checks,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_and_serializes() {
        let r = certify(Precision::CERTIFY).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert!(r.failures().is_empty());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let recs = v["records"].as_array().unwrap();
        assert!(recs.len() > 40);
        for rec in recs {
            assert_eq!(rec["status"], "certified");
            for key in ["id", "formula", "lower", "upper", "sign", "precision_bits"] {
                assert!(!rec[key].is_null(), "{key}");
            }
            let digits = rec["lower"].as_str().unwrap().chars().filter(char::is_ascii_digit).count();
            assert!(digits >= 40, "{}", rec["lower"]);
        }
        assert_eq!(v["roots"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn wrong_sign_is_reported() {
        let iv = CertInterval::from_f64(Precision::CERTIFY, -1.0);
        let rec = CertificateRecord::new("x".into(), "x".into(), &iv, Sign::Positive);
        assert_eq!(rec.status, Status::WrongSign);
        let zero = CertInterval::hull_f64(Precision::CERTIFY, -1.0, 1.0);
        let rec = CertificateRecord::new("y".into(), "y".into(), &zero, Sign::Positive);
        assert_eq!(rec.status, Status::Inconclusive);
    }
}
