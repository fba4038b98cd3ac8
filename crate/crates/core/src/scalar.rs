//! Scalar abstraction shared by the spectral formulas and the simplex solver.
//!
//! Everything the library reports is computed with [`crate::Rational`]. The
//! same generic code also runs over `f64`/`f32`, which is handy for quick
//! estimates and for cross-checking the exact path.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    fn from_bigint(v: &BigInt) -> Self;

    fn from_rational(v: &BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    fn as_f64(&self) -> f64;

    /// Slack used when testing signs. Zero for exact types.
    fn tolerance() -> Self;

    fn is_exact() -> bool;

    fn is_negligible(&self) -> bool {
        self.abs() <= Self::tolerance()
    }

    fn is_strictly_positive(&self) -> bool {
        *self > Self::tolerance()
    }

    fn is_strictly_negative(&self) -> bool {
        *self < -Self::tolerance()
    }
}

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn from_rational(v: &BigRational) -> Self {
        v.clone()
    }

    fn as_f64(&self) -> f64 {
        ratio_to_f64(self)
    }

    fn tolerance() -> Self {
        BigRational::zero()
    }

    fn is_exact() -> bool {
        true
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn from_bigint(v: &BigInt) -> Self {
                v.to_f64().unwrap_or(<$t>::NAN as f64) as $t
            }

            fn from_rational(v: &BigRational) -> Self {
                ratio_to_f64(v) as $t
            }

            fn as_f64(&self) -> f64 {
                *self as f64
            }

            fn tolerance() -> Self {
                $tol
            }

            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

/// Converts without overflowing when numerator and denominator are both huge.
pub(crate) fn ratio_to_f64(v: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (v.numer().to_f64(), v.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = v.numer().bits().max(v.denom().bits()).saturating_sub(900) as usize;
    let n = (v.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (v.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_ratio_converts() {
        let big = BigInt::from(3) << 2000usize;
        let r = BigRational::new(big.clone() * 5, big * 2);
        assert_eq!(r.as_f64(), 2.5);
        let r = BigRational::new(BigInt::from(1) << 1500usize, BigInt::from(3) << 1500usize);
        assert!((ratio_to_f64(&r) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn float_signs_use_tolerance() {
        assert!(1e-12f64.is_negligible());
        assert!(!1e-12f64.is_strictly_positive());
        assert!(BigRational::new(1.into(), BigInt::from(10).pow(40)).is_strictly_positive());
    }
}
