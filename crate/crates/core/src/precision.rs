use crate::error::{Error, Result};

/// Working significand size, in bits, for the certified path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 53;
    pub const MAX_BITS: u32 = 4096;

    /// Same significand as an IEEE double.
    pub const DOUBLE: Precision = Precision(53);
    /// Starting point for sign certificates.
    pub const CERTIFY: Precision = Precision(256);
    pub const CAP: Precision = Precision(Self::MAX_BITS);

    pub fn new(bits: u32) -> Result<Self> {
        if (Self::MIN_BITS..=Self::MAX_BITS).contains(&bits) {
            Ok(Precision(bits))
        } else {
            Err(Error::InvalidPrecision { bits })
        }
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The next rung of the escalation ladder, or `None` once the cap is reached.
    pub fn escalated(self) -> Option<Self> {
        if self.0 >= Self::MAX_BITS {
            None
        } else {
            Some(Precision((self.0 * 2).min(Self::MAX_BITS)))
        }
    }

    /// Iterator over `self, 2*self, 4*self, ...` up to and including the cap.
    pub fn ladder(self) -> impl Iterator<Item = Precision> {
        std::iter::successors(Some(self), |p| p.escalated())
    }
}

/// Runs `f` at `start`, doubling the precision while it reports
/// [`Error::InconclusiveSign`], up to [`Precision::CAP`].
pub fn escalate<T>(start: Precision, mut f: impl FnMut(Precision) -> Result<T>) -> Result<T> {
    let mut prec = start;
    loop {
        match f(prec) {
            Err(Error::InconclusiveSign { .. }) if prec.escalated().is_some() => {
                prec = prec.escalated().expect("checked above");
            }
            other => return other,
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::CERTIFY
    }
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} bits", self.0)
    }
}
