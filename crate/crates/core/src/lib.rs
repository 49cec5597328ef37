//! Certified numerics for the Neuman-Sandor mean `M(a,b)` and its sharp
//! bounds by the root-mean-square of recombined arguments,
//!
//! ```text
//! S(lambda a + (1-lambda) b, lambda b + (1-lambda) a) < M(a,b)
//!     < S(mu a + (1-mu) b, mu b + (1-mu) a),
//! ```
//!
//! with `lambda = (1 + sqrt(1/ln(1+sqrt2)^2 - 1))/2` and `mu = (3+sqrt3)/6`,
//! together with a replay of the argument behind it: exact polynomial
//! identities, interval sign certificates and a certified root cascade.

pub mod constants;
pub mod curve;
pub mod decimal;
pub mod error;
pub mod interval;
pub mod means;
pub mod poly;
pub mod precision;
pub mod proof;
pub mod quad;

pub use error::{Error, Result};
pub use interval::{CertInterval, Sign};
pub use means::{PositivePair, Weight};
pub use poly::{Poly, Scalar};
pub use precision::Precision;
pub use quad::QuadExt3;
