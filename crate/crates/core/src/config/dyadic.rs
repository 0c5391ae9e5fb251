use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-negative dyadic rational `numerator / 2^exponent` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u64,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigUint>, exponent: u64) -> Self {
        let mut d = Self {
            numerator: numerator.into(),
            exponent,
        };
        d.reduce();
        d
    }

    pub fn zero() -> Self {
        Self::new(0u32, 0)
    }

    pub fn one() -> Self {
        Self::new(1u32, 0)
    }

    pub fn half() -> Self {
        Self::new(1u32, 1)
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let twos = self
            .numerator
            .trailing_zeros()
            .expect("nonzero")
            .min(self.exponent);
        self.numerator >>= twos;
        self.exponent -= twos;
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `t / 2`
    pub fn halve(&self) -> Self {
        Self::new(self.numerator.clone(), self.exponent + 1)
    }

    /// `(t + 1) / 2`
    pub fn halve_shifted(&self) -> Self {
        let one = BigUint::one() << self.exponent;
        Self::new(&self.numerator + one, self.exponent + 1)
    }

    /// Whether `0 < self < 1`.
    pub fn in_open_unit(&self) -> bool {
        !self.numerator.is_zero() && self.numerator < (BigUint::one() << self.exponent)
    }

    /// Layout approximation; never used for comparisons.
    pub fn to_f64(&self) -> f64 {
        let num: f64 = self.numerator.to_string().parse().unwrap_or(f64::INFINITY);
        num / 2f64.powi(self.exponent.min(1023) as i32)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &other.numerator << (e - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigUint::one() << self.exponent)
        }
    }
}

/// Accepts `p`, `p/q` with `q` a power of two, and `p/2^k`.
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NonDyadic(s.to_string());
        let digits = |t: &str| -> Result<BigUint> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigUint>().map_err(|_| bad())
        };
        let Some((num, den)) = s.split_once('/') else {
            return Ok(Self::new(digits(s)?, 0));
        };
        let num = digits(num)?;
        let den = den.trim();
        let exponent = if let Some(k) = den.strip_prefix("2^") {
            k.trim().parse::<u64>().map_err(|_| bad())?
        } else {
            let q = digits(den)?;
            if q.is_zero() || q.count_ones() != 1 {
                return Err(bad());
            }
            q.bits() - 1
        };
        Ok(Self::new(num, exponent))
    }
}

impl TryFrom<String> for Dyadic {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Dyadic> for String {
    fn from(d: Dyadic) -> String {
        d.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(d("3/8"), Dyadic::new(3u32, 3));
        assert_eq!(d("3/2^3"), d("3/8"));
        assert_eq!(d("4/8"), Dyadic::half());
        assert_eq!(d("0"), Dyadic::zero());
        assert_eq!(d("2/2"), Dyadic::one());
        assert!(matches!("1/3".parse::<Dyadic>(), Err(Error::NonDyadic(_))));
        assert!("1/0".parse::<Dyadic>().is_err());
        assert!("-1/2".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
        assert!("0.5".parse::<Dyadic>().is_err());
    }

    #[test]
    fn stacking_maps() {
        assert_eq!(Dyadic::half().halve_shifted(), d("3/4"));
        assert_eq!(Dyadic::half().halve(), d("1/4"));
        assert_eq!(Dyadic::one().halve_shifted(), Dyadic::one());
        assert_eq!(Dyadic::zero().halve(), Dyadic::zero());
    }

    #[test]
    fn ordering() {
        assert!(d("3/8") < d("1/2"));
        assert!(d("11/16") > d("5/8"));
        assert!(!Dyadic::zero().in_open_unit());
        assert!(!Dyadic::one().in_open_unit());
        assert!(d("1023/1024").in_open_unit());
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(n in 0u64..1 << 40, e in 0u64..70) {
            let x = Dyadic::new(n, e);
            prop_assert_eq!(x.to_string().parse::<Dyadic>().unwrap(), x);
        }

        #[test]
        fn order_matches_rationals(a in 0u64..1 << 20, ea in 0u64..20, b in 0u64..1 << 20, eb in 0u64..20) {
            let lhs = u128::from(a) << eb;
            let rhs = u128::from(b) << ea;
            prop_assert_eq!(Dyadic::new(a, ea).cmp(&Dyadic::new(b, eb)), lhs.cmp(&rhs));
        }

        #[test]
        fn stacking_stays_in_open_unit(n in 1u64..1 << 20, e in 21u64..40) {
            let x = Dyadic::new(n, e);
            prop_assert!(x.halve().in_open_unit());
            prop_assert!(x.halve_shifted().in_open_unit());
            prop_assert!(x.halve() < x.halve_shifted());
        }
    }
}
