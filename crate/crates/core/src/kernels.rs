//! Closed-form kernels on the binary Hamming cube: the discrepancy kernel
//! `λ(w)`, ball intersections `μ_t`, ball volumes and their global averages.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{binom, binom_u, int, pow2, rat, sign};
use crate::error::{domain, Error, Result};
use crate::report::IdentityCheck;

/// Largest length accepted by the enumerative oracles unless overridden.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Kernel signature used by the identity suite, so that a deliberately broken
/// kernel can be swapped in.
pub type KernelFn = fn(usize, usize) -> BigInt;

/// `λ(w) = 2^{n-w} · w · C(w-1, ⌈w/2⌉-1)` with `λ(0) = 0`.
pub fn lambda_eval(n: usize, w: usize) -> Result<BigInt> {
    if w > n {
        return domain(format!("distance {w} outside 0..={n}"));
    }
    Ok(lambda_unchecked(n, w))
}

pub(crate) fn lambda_unchecked(n: usize, w: usize) -> BigInt {
    if w == 0 {
        return BigInt::zero();
    }
    let half_up = w.div_ceil(2) as i64;
    pow2(n - w) * BigInt::from(w) * binom(w as i64 - 1, half_up - 1)
}

/// The values `λ(0..=n)` for a fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaProfile {
    n: usize,
    values: Vec<BigInt>,
}

impl LambdaProfile {
    pub fn new(n: usize) -> Self {
        LambdaProfile {
            n,
            values: (0..=n).map(|w| lambda_unchecked(n, w)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: usize) -> &BigInt {
        &self.values[w]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// `(1/2) Σ_u |d(x,u) - d(y,u)|` by enumerating the whole cube.
pub fn lambda_brute(n: usize, x: u64, y: u64) -> Result<BigInt> {
    lambda_brute_limited(n, x, y, DEFAULT_ORACLE_LIMIT)
}

pub fn lambda_brute_limited(n: usize, x: u64, y: u64, limit: usize) -> Result<BigInt> {
    if n > limit {
        return Err(Error::Resource {
            what: "lambda oracle",
            requested: n,
            limit,
        });
    }
    check_word(n, x)?;
    check_word(n, y)?;
    let total: u64 = (0..1u64 << n)
        .map(|u| ((x ^ u).count_ones() as i64 - (y ^ u).count_ones() as i64).unsigned_abs())
        .sum();
    Ok(BigInt::from(total / 2))
}

pub(crate) fn check_word(n: usize, x: u64) -> Result<()> {
    if n > 64 || (n < 64 && x >> n != 0) {
        return domain(format!("word {x:#x} does not fit in length {n}"));
    }
    Ok(())
}

/// `Λ_n = n · C(2n, n) / 2^{n+1}`, the mean of `λ` over all pairs of points.
pub fn lambda_average(n: usize) -> BigRational {
    BigRational::new(BigInt::from(n) * binom_u(2 * n, n), pow2(n + 1))
}

/// The weighted-sum identity `Σ_w C(n,w) λ(w) = (n/2) C(2n,n)` and its
/// alternating companion `Σ_w (-1)^{w+1} C(n,w) λ(w) = C(2n-2, n-1)`.
pub fn closed_form_checks(n: usize) -> Result<[IdentityCheck; 2]> {
    closed_form_checks_with(n, lambda_unchecked)
}

pub fn closed_form_checks_with(n: usize, kernel: KernelFn) -> Result<[IdentityCheck; 2]> {
    if n == 0 {
        return domain("length must be at least 1");
    }
    let mut sum = BigInt::zero();
    let mut alt = BigInt::zero();
    for w in 0..=n {
        let term = binom_u(n, w) * kernel(n, w);
        alt += sign(w + 1) * &term;
        sum += term;
    }
    let params = format!("n={n}");
    Ok([
        IdentityCheck::new(
            "kernel-sum",
            params.clone(),
            int(sum),
            rat(BigInt::from(n) * binom_u(2 * n, n), 2),
        ),
        IdentityCheck::new(
            "kernel-alternating-sum",
            params,
            int(alt),
            int(binom_u(2 * (n - 1), n - 1)),
        ),
    ])
}

/// `μ_t(w) = |B(x,t) ∩ B(y,t)|` for `d(x,y) = w`, by counting points that
/// share `i` of the `w` differing coordinates and `j` of the others.
pub fn mu_t(n: usize, w: usize, t: usize) -> Result<BigInt> {
    if w > n || t > n {
        return domain(format!("need w, t in 0..={n}, got w={w}, t={t}"));
    }
    let mut total = BigInt::zero();
    for i in 0..=w {
        for j in 0..=(n - w) {
            if i + j <= t && (w - i) + j <= t {
                total += binom_u(w, i) * binom_u(n - w, j);
            }
        }
    }
    Ok(total)
}

/// `|B(x,t)| = Σ_{i≤t} C(n,i)`.
pub fn ball_volume(n: usize, t: usize) -> Result<BigInt> {
    if t > n {
        return domain(format!("radius {t} outside 0..={n}"));
    }
    Ok((0..=t).map(|i| binom_u(n, i)).sum())
}

/// `Σ_t |B(x,t)| = (n+2) 2^{n-1}`.
pub fn ball_volume_sum(n: usize) -> BigRational {
    rat(BigInt::from(n + 2) * pow2(n), 2)
}

/// `Σ_t |B(x,t)|² = 2^{2n-1}(n+2) - (n/2) C(2n,n)`.
pub fn ball_volume_sq_sum(n: usize) -> BigRational {
    rat(pow2(2 * n) * BigInt::from(n + 2), 2) - rat(BigInt::from(n) * binom_u(2 * n, n), 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn first_bits(w: usize) -> u64 {
        if w == 64 {
            u64::MAX
        } else {
            (1u64 << w) - 1
        }
    }

    #[test]
    fn lambda_small_values() {
        assert_eq!(lambda_eval(3, 0).unwrap(), BigInt::zero());
        assert_eq!(lambda_eval(3, 1).unwrap(), BigInt::from(4));
        assert_eq!(lambda_eval(3, 3).unwrap(), BigInt::from(6));
        assert_eq!(lambda_eval(4, 4).unwrap(), BigInt::from(12));
        assert!(matches!(lambda_eval(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_brute_examples() {
        assert_eq!(lambda_brute(2, 0b00, 0b00).unwrap(), BigInt::zero());
        assert_eq!(lambda_brute(3, 0b000, 0b011).unwrap(), BigInt::from(4));
        assert_eq!(lambda_brute(4, 0, 0b1111).unwrap(), BigInt::from(12));
        assert!(matches!(
            lambda_brute(21, 0, 1),
            Err(Error::Resource { limit: 20, .. })
        ));
        assert_eq!(
            lambda_brute_limited(21, 0, 1, 21).unwrap(),
            lambda_eval(21, 1).unwrap()
        );
    }

    #[test]
    fn lambda_is_radial_closed_form_up_to_20() {
        // the kernel depends only on d(x,y), so one representative pair per w suffices
        for n in 1..=20 {
            for w in 0..=n {
                assert_eq!(
                    lambda_brute(n, 0, first_bits(w)).unwrap(),
                    lambda_eval(n, w).unwrap(),
                    "n={n} w={w}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn lambda_brute_matches_closed_form(n in 1usize..=12, x in any::<u64>(), y in any::<u64>()) {
            let mask = first_bits(n);
            let (x, y) = (x & mask, y & mask);
            let w = (x ^ y).count_ones() as usize;
            prop_assert_eq!(lambda_brute(n, x, y).unwrap(), lambda_eval(n, w).unwrap());
        }
    }

    #[test]
    fn lambda_profile_shape_up_to_60() {
        for n in 1..=60 {
            let p = LambdaProfile::new(n);
            assert!(p.get(0).is_zero());
            for i in 1..=n / 2 {
                assert_eq!(p.get(2 * i - 1), p.get(2 * i));
                assert_eq!(
                    p.get(2 * i),
                    &(pow2(n - 2 * i) * BigInt::from(i) * binom_u(2 * i, i))
                );
            }
            for i in 1..=(n - 1) / 2 {
                // λ(2i+1)/(2i+1) = λ(2i)/(2i)
                assert_eq!(
                    p.get(2 * i + 1) * BigInt::from(2 * i),
                    p.get(2 * i) * BigInt::from(2 * i + 1)
                );
            }
            for w in 1..n {
                assert!(p.get(w + 1) >= p.get(w));
            }
        }
    }

    #[test]
    fn lambda_average_values() {
        assert_eq!(lambda_average(3), rat(15, 4));
        assert_eq!(lambda_average(1), rat(1, 2));
        let direct: BigInt = (0..=15)
            .map(|w| binom_u(15, w) * lambda_unchecked(15, w))
            .sum();
        assert_eq!(lambda_average(15), BigRational::new(direct, pow2(15)));
    }

    #[test]
    fn lambda_average_matches_pair_enumeration_n3() {
        let mut total = BigInt::zero();
        for x in 0..8u64 {
            for y in 0..8u64 {
                total += lambda_brute(3, x, y).unwrap();
            }
        }
        assert_eq!(BigRational::new(total, pow2(6)), rat(15, 4));
    }

    #[test]
    fn closed_forms_hold_up_to_40() {
        let [s, a] = closed_form_checks(3).unwrap();
        assert_eq!(s.lhs, int(30));
        assert_eq!(a.lhs, int(6));
        let [s, _] = closed_form_checks(1).unwrap();
        assert_eq!(s.lhs, BigRational::one());
        for n in 1..=40 {
            for c in closed_form_checks(n).unwrap() {
                assert!(c.holds(), "{c}");
            }
        }
    }

    #[test]
    fn broken_kernel_is_caught() {
        fn off_by_one(n: usize, w: usize) -> BigInt {
            lambda_unchecked(n, w) + BigInt::from(u8::from(w == 2))
        }
        assert!(closed_form_checks_with(1, off_by_one)
            .unwrap()
            .iter()
            .all(|c| c.holds()));
        assert!(!closed_form_checks_with(2, off_by_one).unwrap()[0].holds());
    }

    #[test]
    fn mu_t_examples() {
        for n in 1..=8 {
            assert_eq!(mu_t(n, 0, n).unwrap(), pow2(n));
        }
        assert_eq!(mu_t(3, 1, 1).unwrap(), BigInt::from(2));
        assert!(mu_t(3, 4, 0).is_err());
    }

    #[test]
    fn mu_t_matches_set_enumeration() {
        for n in 1..=10usize {
            for w in 0..=n {
                let y = first_bits(w);
                for t in 0..=n {
                    let count = (0..1u64 << n)
                        .filter(|z| {
                            z.count_ones() as usize <= t && (z ^ y).count_ones() as usize <= t
                        })
                        .count();
                    assert_eq!(
                        mu_t(n, w, t).unwrap(),
                        BigInt::from(count),
                        "n={n} w={w} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn mu_sum_plus_lambda_is_constant() {
        for n in 1..=14 {
            for w in 0..=n {
                let s: BigInt = (0..=n).map(|t| mu_t(n, w, t).unwrap()).sum();
                assert_eq!(int(s + lambda_unchecked(n, w)), ball_volume_sum(n));
            }
        }
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(3, 0).unwrap(), BigInt::one());
        assert_eq!(ball_volume_sum(3), int(20));
        assert_eq!(ball_volume_sq_sum(2), int(26));
        for n in 1..=14 {
            let sq: BigInt = (0..=n).map(|t| ball_volume(n, t).unwrap().pow(2)).sum();
            assert_eq!(int(sq), ball_volume_sq_sum(n));
            let s: BigInt = (0..=n).map(|t| ball_volume(n, t).unwrap()).sum();
            assert_eq!(int(s), ball_volume_sum(n));
        }
    }
}
