//! First-disagreement distances.
//!
//! Both the Baire metric on term sequences and the ideal metric on
//! diagram truncations take the value `2^-m` where `m` is the first index
//! (or level) at which the two objects differ. Truncated data cannot certify
//! equality of infinite objects, so agreement up to the inspected depth is
//! its own variant and is never coerced to zero.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Distance {
    /// Both objects are finite and identical.
    Zero,
    /// Exactly `2^-exponent`.
    Dyadic { exponent: u64 },
    /// No disagreement found at indices `0..=depth`.
    AgreeToDepth { depth: usize },
}

impl Distance {
    pub fn dyadic(exponent: u64) -> Self {
        Distance::Dyadic { exponent }
    }

    /// Exact rational value; `None` for [`Distance::AgreeToDepth`].
    pub fn to_rational(&self) -> Option<BigRational> {
        match *self {
            Distance::Zero => Some(BigRational::zero()),
            Distance::Dyadic { exponent } => Some(BigRational::new(
                BigInt::one(),
                BigInt::one() << exponent as usize,
            )),
            Distance::AgreeToDepth { .. } => None,
        }
    }

    /// Upper bound on the true distance: `2^-(depth+1)` when agreement was
    /// only observed through `depth`.
    pub fn upper_bound(&self) -> BigRational {
        match *self {
            Distance::AgreeToDepth { depth } => Distance::dyadic(depth as u64 + 1)
                .to_rational()
                .expect("dyadic has a value"),
            _ => self.to_rational().expect("exact distance"),
        }
    }

    /// Decimal rendering. Exponents beyond the `f64` range underflow to 0.
    pub fn to_f64(&self) -> Option<f64> {
        match *self {
            Distance::Zero => Some(0.0),
            Distance::Dyadic { exponent } => Some(2f64.powi(-(exponent.min(2000) as i32))),
            Distance::AgreeToDepth { .. } => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Distance::Zero => write!(f, "0"),
            Distance::Dyadic { exponent } => {
                let v = self.to_f64().unwrap_or(0.0);
                if exponent <= 30 {
                    write!(f, "2^-{exponent} = {v}")
                } else {
                    write!(f, "2^-{exponent} = {v:e}")
                }
            }
            Distance::AgreeToDepth { depth } => write!(f, "agree-to-depth {depth}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_rationals_are_exact() {
        let d = Distance::dyadic(1000);
        let r = d.to_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::one());
        assert_eq!(r.denom().bits(), 1001);
        assert_eq!(Distance::dyadic(2).to_string(), "2^-2 = 0.25");
    }

    #[test]
    fn agreement_has_no_value() {
        let d = Distance::AgreeToDepth { depth: 5 };
        assert!(d.to_rational().is_none());
        assert_eq!(d.upper_bound(), BigRational::new(1.into(), 64.into()));
    }
}
