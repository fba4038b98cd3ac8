//! Small exact-integer helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)`, zero whenever `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn binom_u(n: usize, k: usize) -> BigInt {
    binom(n as i64, k as i64)
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

pub fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(46, 23), BigInt::from(8_233_430_727_600u64));
    }
}
