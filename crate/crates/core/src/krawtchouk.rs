//! Binary Krawtchouk polynomials in the normalization `K_k(0) = C(n,k)`, the
//! MacWilliams transform, and the Krawtchouk expansions of `μ_t` and `λ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binom_u, int, pow2, sign};
use crate::error::{domain, Result};
use crate::kernels::{ball_volume, lambda_average, lambda_unchecked, mu_t};
use crate::report::IdentityCheck;
use crate::scalar::Scalar;

/// `K_k^{(n)}(x) = Σ_i (-1)^i C(x,i) C(n-x,k-i)` by direct summation.
pub fn kraw_eval(n: usize, k: usize, x: usize) -> Result<BigInt> {
    if k > n || x > n {
        return domain(format!("need k, x in 0..={n}, got k={k}, x={x}"));
    }
    Ok((0..=k)
        .map(|i| sign(i) * binom_u(x, i) * binom_u(n - x, k - i))
        .sum())
}

/// All values `K_k^{(n)}(x)` for `0 ≤ k, x ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    n: usize,
    // row-major, values[k * (n + 1) + x]
    values: Vec<BigInt>,
}

impl KrawtchoukTable {
    /// Builds the table from the three-term recurrence
    /// `(k+1) K_{k+1}(x) = (n-2x) K_k(x) - (n-k+1) K_{k-1}(x)`.
    pub fn new(n: usize) -> Self {
        let width = n + 1;
        let mut values = vec![BigInt::zero(); width * width];
        for x in 0..=n {
            values[x] = BigInt::one();
            if n >= 1 {
                values[width + x] = BigInt::from(n as i64 - 2 * x as i64);
            }
        }
        for k in 1..n {
            for x in 0..=n {
                let next = BigInt::from(n as i64 - 2 * x as i64) * &values[k * width + x]
                    - BigInt::from(n - k + 1) * &values[(k - 1) * width + x];
                values[(k + 1) * width + x] = next / BigInt::from(k + 1);
            }
        }
        KrawtchoukTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, x: usize) -> &BigInt {
        &self.values[k * (self.n + 1) + x]
    }

    pub fn row(&self, k: usize) -> &[BigInt] {
        let w = self.n + 1;
        &self.values[k * w..(k + 1) * w]
    }

    /// Compares each column `x` with the coefficients of `(1+z)^{n-x} (1-z)^x`.
    pub fn matches_generating_function(&self) -> bool {
        (0..=self.n).all(|x| {
            let mut poly = vec![BigInt::one()];
            for step in 0..self.n {
                let s = if step < self.n - x { 1 } else { -1 };
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (d, c) in poly.iter().enumerate() {
                    next[d] += c;
                    next[d + 1] += c * s;
                }
                poly = next;
            }
            (0..=self.n).all(|k| &poly[k] == self.get(k, x))
        })
    }

    /// `Σ_l C(n,l) K_i(l) K_j(l)` against `2^n C(n,i) δ_ij`.
    pub fn orthogonality_check(&self, i: usize, j: usize) -> IdentityCheck {
        let n = self.n;
        let lhs: BigInt = (0..=n)
            .map(|l| binom_u(n, l) * self.get(i, l) * self.get(j, l))
            .sum();
        let rhs = if i == j {
            pow2(n) * binom_u(n, i)
        } else {
            BigInt::zero()
        };
        IdentityCheck::new(
            "orthogonality",
            format!("n={n} i={i} j={j}"),
            int(lhs),
            int(rhs),
        )
    }

    /// `C(n,i) K_k(i) = C(n,k) K_i(k)`.
    pub fn symmetry_check(&self, k: usize, i: usize) -> IdentityCheck {
        let n = self.n;
        IdentityCheck::new(
            "krawtchouk-symmetry",
            format!("n={n} k={k} i={i}"),
            int(binom_u(n, i) * self.get(k, i)),
            int(binom_u(n, k) * self.get(i, k)),
        )
    }

    /// `K_k(x) = (-1)^k K_k(n-x)`.
    pub fn reflection_check(&self, k: usize, x: usize) -> IdentityCheck {
        let n = self.n;
        IdentityCheck::new(
            "krawtchouk-reflection",
            format!("n={n} k={k} x={x}"),
            int(self.get(k, x).clone()),
            int(sign(k) * self.get(k, n - x)),
        )
    }

    fn as_scalars<T: Scalar>(&self) -> Vec<T> {
        self.values.iter().map(T::from_bigint).collect()
    }
}

pub fn kraw_table(n: usize) -> KrawtchoukTable {
    KrawtchoukTable::new(n)
}

/// Rodrigues-type formula `C(n,x) K_k(x) = C(n,k) ∇^k[C(n-k, x)]` for every `x`.
pub fn rodrigues_check(n: usize, k: usize) -> Result<Vec<IdentityCheck>> {
    if k > n {
        return domain(format!("degree {k} exceeds {n}"));
    }
    let table = KrawtchoukTable::new(n);
    Ok((0..=n)
        .map(|x| {
            let diff: BigInt = (0..=k.min(x))
                .map(|j| sign(j) * binom_u(k, j) * binom_u(n - k, x - j))
                .sum();
            IdentityCheck::new(
                "rodrigues",
                format!("n={n} k={k} x={x}"),
                int(binom_u(n, x) * table.get(k, x)),
                int(binom_u(n, k) * diff),
            )
        })
        .collect())
}

/// Coefficients of `K_i²` on `K_0, K_2, K_4, …`: entry `k` is `C(2k,k) C(n-2k, i-k)`.
pub fn square_expansion(n: usize, i: usize) -> Result<Vec<BigInt>> {
    if i > n {
        return domain(format!("degree {i} exceeds {n}"));
    }
    Ok((0..=i.min(n / 2))
        .map(|k| binom_u(2 * k, k) * binom_u(n - 2 * k, i - k))
        .collect())
}

/// Checks [`square_expansion`] pointwise on `0..=n`.
pub fn square_expansion_check(n: usize, i: usize) -> Result<Vec<IdentityCheck>> {
    let coeffs = square_expansion(n, i)?;
    let table = KrawtchoukTable::new(n);
    Ok((0..=n)
        .map(|x| {
            let rhs: BigInt = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * table.get(2 * k, x))
                .sum();
            IdentityCheck::new(
                "square-linearization",
                format!("n={n} i={i} x={x}"),
                int(table.get(i, x).pow(2)),
                int(rhs),
            )
        })
        .collect())
}

/// `A⊥_w = (1/N) Σ_i K_w(i) A_i`.
pub fn macwilliams_forward<T: Scalar>(distribution: &[T], size: &T) -> Result<Vec<T>> {
    if distribution.is_empty() {
        return domain("empty distribution");
    }
    if !size.is_strictly_positive() {
        return domain("code size must be positive");
    }
    let n = distribution.len() - 1;
    let k = KrawtchoukTable::new(n).as_scalars::<T>();
    Ok((0..=n)
        .map(|w| {
            let mut acc = T::zero();
            for (i, a) in distribution.iter().enumerate() {
                acc = acc + k[w * (n + 1) + i].clone() * a.clone();
            }
            acc / size.clone()
        })
        .collect())
}

/// `A_i = (N/2^n) Σ_w K_i(w) A⊥_w`, the inverse of [`macwilliams_forward`].
pub fn macwilliams_inverse<T: Scalar>(dual: &[T], size: &T) -> Result<Vec<T>> {
    if dual.is_empty() {
        return domain("empty distribution");
    }
    if !size.is_strictly_positive() {
        return domain("code size must be positive");
    }
    let n = dual.len() - 1;
    let k = KrawtchoukTable::new(n).as_scalars::<T>();
    let scale = size.clone() / T::from_bigint(&pow2(n));
    Ok((0..=n)
        .map(|i| {
            let mut acc = T::zero();
            for (w, b) in dual.iter().enumerate() {
                acc = acc + k[i * (n + 1) + w].clone() * b.clone();
            }
            acc * scale.clone()
        })
        .collect())
}

/// Krawtchouk coefficients `c_0(t) … c_n(t)` of the ball indicator, so that
/// `μ_t(w) = 2^{-n} Σ_k c_k(t)² K_k(w)`.
pub fn mu_coefficients(n: usize, t: usize) -> Result<Vec<BigInt>> {
    if n == 0 || t > n {
        return domain(format!("need n ≥ 1 and t in 0..={n}, got n={n}, t={t}"));
    }
    let shorter = KrawtchoukTable::new(n - 1);
    let mut c = Vec::with_capacity(n + 1);
    c.push(ball_volume(n, t)?);
    for k in 1..=n {
        c.push(if t == n {
            BigInt::zero()
        } else {
            shorter.get(t, k - 1).clone()
        });
    }
    Ok(c)
}

/// Reconstructs `μ_t(w)` from [`mu_coefficients`] for every `w` and compares
/// with the counting formula.
pub fn mu_reconstruction_check(n: usize, t: usize) -> Result<Vec<IdentityCheck>> {
    let c = mu_coefficients(n, t)?;
    let table = KrawtchoukTable::new(n);
    (0..=n)
        .map(|w| {
            let s: BigInt = (0..=n).map(|k| c[k].pow(2) * table.get(k, w)).sum();
            Ok(IdentityCheck::new(
                "mu-expansion",
                format!("n={n} t={t} w={w}"),
                BigRational::new(s, pow2(n)),
                int(mu_t(n, w, t)?),
            ))
        })
        .collect()
}

/// `Σ_{t<n} (K_t^{(n-1)}(k-1))²` for `k = 1..=n`, index 0 unused (zero).
pub(crate) fn squared_column_sums(n: usize) -> Vec<BigInt> {
    let shorter = KrawtchoukTable::new(n - 1);
    let mut out = vec![BigInt::zero(); n + 1];
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = (0..n).map(|t| shorter.get(t, k - 1).pow(2)).sum();
    }
    out
}

/// Krawtchouk coefficients of the kernel: `λ(w) = Σ_k λ̂_k K_k(w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaHat {
    n: usize,
    coeffs: Vec<BigRational>,
}

impl LambdaHat {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// `Σ_k λ̂_k K_k(w)`.
    pub fn reconstruct(&self, table: &KrawtchoukTable, w: usize) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(table.get(k, w).clone()))
            .sum()
    }

    /// The coefficient at `(n+1)/2`, which is the largest one for odd `n`.
    pub fn middle(&self) -> Option<&BigRational> {
        (self.n % 2 == 1).then(|| &self.coeffs[self.n.div_ceil(2)])
    }
}

/// `λ̂_0 = Λ_n`, `λ̂_k = -2^{-n} Σ_{t<n} (K_t^{(n-1)}(k-1))²` for `k ≥ 1`.
pub fn lambda_hat(n: usize) -> Result<LambdaHat> {
    if n == 0 {
        return domain("length must be at least 1");
    }
    let sums = squared_column_sums(n);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(lambda_average(n));
    for s in sums.into_iter().skip(1) {
        coeffs.push(-BigRational::new(s, pow2(n)));
    }
    Ok(LambdaHat { n, coeffs })
}

/// `Σ_w K_w(i) λ(w) = (-1)^i Σ_{w<n} K_w^{(n-1)}(2i-2) C(n-1,w)` for
/// `1 ≤ i ≤ (n+1)/2`.
pub fn conj_identity(n: usize, i: usize) -> Result<IdentityCheck> {
    if n == 0 || i == 0 || 2 * i > n + 1 {
        return domain(format!("need 1 ≤ i ≤ (n+1)/2, got n={n}, i={i}"));
    }
    let table = KrawtchoukTable::new(n);
    let shorter = KrawtchoukTable::new(n - 1);
    let lhs: BigInt = (0..=n)
        .map(|w| table.get(w, i) * lambda_unchecked(n, w))
        .sum();
    let rhs: BigInt = (0..n)
        .map(|w| shorter.get(w, 2 * i - 2) * binom_u(n - 1, w))
        .sum();
    Ok(IdentityCheck::new(
        "kernel-transform",
        format!("n={n} i={i}"),
        int(lhs),
        int(sign(i) * rhs),
    ))
}

/// `Σ_{t<n} (K_t^{(n-1)}(k-1))² = -Σ_{w≥1} λ(w) K_w(k)` for `1 ≤ k ≤ n`.
pub fn ctr_identity(n: usize, k: usize) -> Result<IdentityCheck> {
    if n == 0 || k == 0 || k > n {
        return domain(format!("need 1 ≤ k ≤ n, got n={n}, k={k}"));
    }
    let table = KrawtchoukTable::new(n);
    let shorter = KrawtchoukTable::new(n - 1);
    let lhs: BigInt = (0..n).map(|t| shorter.get(t, k - 1).pow(2)).sum();
    let rhs: BigInt = (1..=n)
        .map(|w| lambda_unchecked(n, w) * table.get(w, k))
        .sum();
    Ok(IdentityCheck::new(
        "squared-column-expansion",
        format!("n={n} k={k}"),
        int(lhs),
        int(-rhs),
    ))
}

/// Every `λ̂_k` with `k ≥ 1` is strictly negative.
pub fn lambda_hat_is_negative_definite(hat: &LambdaHat) -> bool {
    hat.coeffs.iter().skip(1).all(|c| c.is_negative())
}
