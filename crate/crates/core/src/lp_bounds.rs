//! Linear-programming bounds on kernel energy and discrepancy: the primal LP,
//! dual certificates, the closed-form certificate families and the
//! perfect-code optimality check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::codes::{dual_of, BinaryCode, DistanceDistribution};
use crate::combinatorics::{binom_u, int, pow2, rat, sign};
use crate::discrepancy::{discrepancy_spectrum, energy};
use crate::display;
use crate::error::{domain, Error, Result};
use crate::kernels::{lambda_average, lambda_unchecked};
use crate::krawtchouk::{lambda_hat, KrawtchoukTable};
use crate::report::IdentityCheck;
use crate::scalar::Scalar;
use crate::simplex::{simplex_solve, LPResult, LinearProgram, Sense};

fn check_size(n: usize, size: u64) -> Result<()> {
    if n == 0 || n > 62 || size == 0 || size > 1u64 << n {
        return domain(format!(
            "need n in 1..=62 and 1 ≤ N ≤ 2^n, got n={n}, N={size}"
        ));
    }
    Ok(())
}

/// `max Σ_{k≥1} λ(k) A_k` subject to `Σ_k A_k K_i(k) ≥ -C(n,i)` for
/// `i = 1..n`, `Σ_k A_k = N - 1`, `A ≥ 0`. Variable `j` is `A_{j+1}`.
pub fn primal_lp<T: Scalar>(n: usize, size: u64) -> Result<LinearProgram<T>> {
    check_size(n, size)?;
    let k = KrawtchoukTable::new(n);
    let mut lp = LinearProgram::maximize(
        (1..=n)
            .map(|w| T::from_bigint(&lambda_unchecked(n, w)))
            .collect(),
    );
    for i in 1..=n {
        lp.constrain(
            (1..=n).map(|w| T::from_bigint(k.get(i, w))).collect(),
            Sense::Ge,
            -T::from_bigint(&binom_u(n, i)),
        );
    }
    lp.constrain(
        vec![T::one(); n],
        Sense::Eq,
        T::from_bigint(&BigInt::from(size - 1)),
    );
    Ok(lp)
}

/// Optimum of the primal LP and the discrepancy bound it implies.
#[derive(Debug, Clone)]
pub struct DiscrepancyLp {
    pub n: usize,
    pub size: u64,
    pub result: LPResult<BigRational>,
    /// `E*`, the largest admissible energy.
    pub energy: BigRational,
    /// `Λ_n - E*/N`, a lower bound on the discrepancy of any `N`-word code.
    pub discrepancy: BigRational,
    /// The optimal `A_0 = 1, A_1, …, A_n`.
    pub distribution: Vec<BigRational>,
}

pub fn primal_discrepancy_lp(n: usize, size: u64) -> Result<DiscrepancyLp> {
    let lp = primal_lp::<BigRational>(n, size)?;
    let result = simplex_solve(&lp);
    let Some(energy) = result.value.clone() else {
        return Err(Error::InternalMismatch(format!(
            "discrepancy LP for n={n}, N={size} is {}",
            result.status
        )));
    };
    if !lp.is_feasible(&result.solution) {
        return Err(Error::InternalMismatch(
            "LP optimum violates a constraint".into(),
        ));
    }
    let mut distribution = vec![int(1)];
    distribution.extend(result.solution.iter().cloned());
    let discrepancy = lambda_average(n) - &energy / int(size);
    Ok(DiscrepancyLp {
        n,
        size,
        result,
        energy,
        discrepancy,
        distribution,
    })
}

/// The dual LP `min Σ_i C(n,i) h_i - N h_0` subject to
/// `Σ_i h_i K_i(k) ≤ -λ(k)` for `k = 1..n` and `h_i ≥ 0` for `i ≥ 1`.
/// The free `h_0` is split as `h_0 = p - q`; variables are
/// `p, q, h_1, …, h_n`.
pub fn dual_lp<T: Scalar>(n: usize, size: u64) -> Result<LinearProgram<T>> {
    check_size(n, size)?;
    let k = KrawtchoukTable::new(n);
    let c0 = T::one() - T::from_bigint(&BigInt::from(size));
    let mut objective = vec![c0.clone(), -c0];
    objective.extend((1..=n).map(|i| T::from_bigint(&binom_u(n, i))));
    let mut lp = LinearProgram::minimize(objective);
    for w in 1..=n {
        let mut row = vec![T::one(), -T::one()];
        row.extend((1..=n).map(|i| T::from_bigint(k.get(i, w))));
        lp.constrain(row, Sense::Le, -T::from_bigint(&lambda_unchecked(n, w)));
    }
    Ok(lp)
}

/// Solves the dual LP and returns the optimal certificate.
pub fn optimal_certificate(n: usize, size: u64) -> Result<DualCertificate> {
    let lp = dual_lp::<BigRational>(n, size)?;
    let res = simplex_solve(&lp);
    if !res.is_optimal() {
        return Err(Error::InternalMismatch(format!(
            "dual LP is {}",
            res.status
        )));
    }
    let x = &res.solution;
    let mut h = vec![&x[0] - &x[1]];
    h.extend(x[2..].iter().cloned());
    check_certificate(n, size, &h)
}

/// A polynomial `h(x) = Σ_i h_i K_i(x)` offered as a dual solution.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCertificate {
    pub n: usize,
    pub size: u64,
    pub h: Vec<BigRational>,
    /// `h(k)` for `k = 0..=n`.
    pub values: Vec<BigRational>,
    /// `h(0) - N h_0`, an upper bound on the energy when feasible.
    pub bound: BigRational,
    /// `h_i ≥ 0` for `i ≥ 1` and `h(k) ≤ -λ(k)` for `k ≥ 1`.
    pub feasible: bool,
    pub violations: Vec<String>,
}

impl DualCertificate {
    /// `Λ_n - bound/N`, a lower bound on discrepancy when feasible.
    pub fn discrepancy_bound(&self) -> BigRational {
        lambda_average(self.n) - &self.bound / int(self.size)
    }

    /// Whether `h(k) = -λ(k)` for every `k ≥ 1`.
    pub fn interpolates(&self) -> bool {
        (1..=self.n).all(|k| self.values[k] == -int(lambda_unchecked(self.n, k)))
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            n: self.n,
            h: self.h.iter().map(display::exact).collect(),
            feasible: self.feasible,
            bound: display::exact(&self.bound),
        }
    }
}

/// Serialized form `{"n", "h": ["p/q", …], "feasible", "bound"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub h: Vec<String>,
    pub feasible: bool,
    pub bound: String,
}

impl CertificateJson {
    /// Re-checks the coefficients for a code size `N`.
    pub fn check(&self, size: u64) -> Result<DualCertificate> {
        let h = self
            .h
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|_| Error::Domain(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        check_certificate(self.n, size, &h)
    }
}

/// Evaluates `h` on `0..=n` and checks feasibility in the universal regime.
pub fn check_certificate(n: usize, size: u64, h: &[BigRational]) -> Result<DualCertificate> {
    check_size(n, size)?;
    if h.len() != n + 1 {
        return domain(format!("expected {} coefficients, got {}", n + 1, h.len()));
    }
    let k = KrawtchoukTable::new(n);
    let values: Vec<BigRational> = (0..=n)
        .map(|x| {
            h.iter()
                .enumerate()
                .map(|(i, c)| c * int(k.get(i, x).clone()))
                .sum()
        })
        .collect();
    let mut violations = Vec::new();
    for (i, c) in h.iter().enumerate().skip(1) {
        if c.is_negative() {
            violations.push(format!("h_{i} = {} < 0", display::exact(c)));
        }
    }
    for (x, v) in values.iter().enumerate().skip(1) {
        let limit = -int(lambda_unchecked(n, x));
        if *v > limit {
            violations.push(format!(
                "h({x}) = {} > -λ({x}) = {}",
                display::exact(v),
                display::exact(&limit)
            ));
        }
    }
    let bound = &values[0] - int(size) * &h[0];
    Ok(DualCertificate {
        n,
        size,
        h: h.to_vec(),
        values,
        bound,
        feasible: violations.is_empty(),
        violations,
    })
}

/// A certificate checked against one code.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeCertificateCheck {
    /// Feasibility restricted to the supports of `A` and `A⊥`.
    pub restricted_feasible: bool,
    pub energy: BigRational,
    pub bound: BigRational,
    /// `N Σ_{k≥1} h_k A⊥_k`.
    pub dual_gap: BigRational,
    /// `Σ_{i≥1} A_i (-λ(i) - h(i))`.
    pub primal_gap: BigRational,
    /// Both gaps vanish, so the bound is attained.
    pub slackness: bool,
}

pub fn check_certificate_for_code(
    cert: &DualCertificate,
    dist: &DistanceDistribution,
) -> Result<CodeCertificateCheck> {
    if dist.n() != cert.n || dist.size() != cert.size {
        return domain("certificate and code parameters differ");
    }
    let n = cert.n;
    let a = dist.values();
    let dual = dual_of(dist)?;
    let restricted_feasible = (1..=n).all(|k| dual.get(k).is_zero() || !cert.h[k].is_negative())
        && (1..=n).all(|i| a[i].is_zero() || cert.values[i] <= -int(lambda_unchecked(n, i)));
    let size = int(dist.size());
    let dual_gap: BigRational = &size
        * (1..=n)
            .map(|k| &cert.h[k] * dual.get(k))
            .sum::<BigRational>();
    let primal_gap: BigRational = (1..=n)
        .map(|i| &a[i] * (-int(lambda_unchecked(n, i)) - &cert.values[i]))
        .sum();
    let e = energy(dist);
    if &cert.bound - &e != &dual_gap + &primal_gap {
        return Err(Error::InternalMismatch(
            "certificate gap identity fails".into(),
        ));
    }
    Ok(CodeCertificateCheck {
        restricted_feasible,
        slackness: dual_gap.is_zero() && primal_gap.is_zero(),
        energy: e,
        bound: cert.bound.clone(),
        dual_gap,
        primal_gap,
    })
}

/// `h ≡ -λ(n)`.
pub fn constant_certificate(n: usize, size: u64) -> Result<DualCertificate> {
    check_size(n, size)?;
    let mut h = vec![BigRational::zero(); n + 1];
    h[0] = -int(lambda_unchecked(n, n));
    check_certificate(n, size, &h)
}

/// `E_λ ≤ (N-1) λ(n)`.
pub fn bound_constant(n: usize, size: u64) -> Result<BigRational> {
    check_size(n, size)?;
    Ok(int(size - 1) * int(lambda_unchecked(n, n)))
}

fn two_term_t(n: usize) -> Result<usize> {
    if n.is_multiple_of(2) {
        return domain(format!("two-term bound needs odd n = 2t - 1, got {n}"));
    }
    Ok(n.div_ceil(2))
}

/// `h = h_0 + h_1 (K_1 + K_n)` with `h_1 = λ(t)/(4t)` and
/// `h_0 = -λ(t)` (t even) or `-λ(t)(1 - 1/(2t))` (t odd), `n = 2t - 1`.
pub fn two_term_certificate(n: usize, size: u64) -> Result<DualCertificate> {
    let t = two_term_t(n)?;
    check_size(n, size)?;
    let l = int(lambda_unchecked(n, t));
    let h1 = &l / int(4 * t);
    let h0 = if t % 2 == 0 {
        -l
    } else {
        -l * (int(1) - rat(1, 2 * t))
    };
    let mut h = vec![BigRational::zero(); n + 1];
    h[0] = h0;
    h[1] += &h1;
    h[n] += &h1;
    check_certificate(n, size, &h)
}

/// `λ(t)(N - 1/2)` for even `t`, `λ(t)(Nn - (n-1)/2)/(n+1)` for odd `t`.
pub fn bound_two_term(n: usize, size: u64) -> Result<BigRational> {
    let t = two_term_t(n)?;
    check_size(n, size)?;
    let l = int(lambda_unchecked(n, t));
    let s = int(size);
    Ok(if t % 2 == 0 {
        l * (s - rat(1, 2))
    } else {
        l * (s * int(n) - rat(n - 1, 2)) / int(n + 1)
    })
}

/// `h_j = λ̂_{(n+1)/2} - λ̂_j` for odd `n` (so `h_{(n+1)/2} = 0`).
pub fn hamming_type_certificate(n: usize, size: u64) -> Result<DualCertificate> {
    if n.is_multiple_of(2) {
        return domain(format!("Hamming-type bound needs odd n, got {n}"));
    }
    check_size(n, size)?;
    let hat = lambda_hat(n)?;
    let mid = hat.middle().unwrap().clone();
    let h: Vec<BigRational> = hat.coeffs().iter().map(|c| &mid - c).collect();
    check_certificate(n, size, &h)
}

/// `E_λ ≤ N Λ_n - (1 - N/2^n) C(n-1, (n-1)/2)` for odd `n`.
pub fn bound_hamming_type(n: usize, size: u64) -> Result<BigRational> {
    if n.is_multiple_of(2) {
        return domain(format!("Hamming-type bound needs odd n, got {n}"));
    }
    check_size(n, size)?;
    Ok(int(size) * lambda_average(n)
        - (int(1) - BigRational::new(BigInt::from(size), pow2(n)))
            * int(binom_u(n - 1, (n - 1) / 2)))
}

/// `D ≥ -(2^n/N - 1) λ̂_{(n+1)/2}` for odd `n`.
pub fn discrepancy_bound_hamming_type(n: usize, size: u64) -> Result<BigRational> {
    if n.is_multiple_of(2) {
        return domain(format!("Hamming-type bound needs odd n, got {n}"));
    }
    check_size(n, size)?;
    let hat = lambda_hat(n)?;
    Ok(-(BigRational::new(pow2(n), BigInt::from(size)) - int(1)) * hat.middle().unwrap())
}

/// Comparison of a code with the LP optimum for its parameters.
#[derive(Debug, Clone)]
pub struct MinimizerReport {
    pub label: String,
    pub discrepancy: BigRational,
    pub lp: DiscrepancyLp,
    /// The code attains the LP bound, so no code of its size does better.
    pub optimal: bool,
}

pub fn certify_minimizer(code: &BinaryCode) -> Result<MinimizerReport> {
    let dist = crate::codes::distance_distribution(code)?;
    let discrepancy = discrepancy_spectrum(&dist);
    let lp = primal_discrepancy_lp(code.n(), code.size())?;
    if discrepancy < lp.discrepancy {
        return Err(Error::InternalMismatch(format!(
            "{} beats the LP bound: {} < {}",
            code.label(),
            discrepancy,
            lp.discrepancy
        )));
    }
    Ok(MinimizerReport {
        label: code.label().to_string(),
        optimal: discrepancy == lp.discrepancy,
        discrepancy,
        lp,
    })
}

/// `a_j = Σ_{w=1}^{j} (-1)^{w-j} C(j,w) λ(w)` for `j = 0..=j_max`, so that
/// `λ(w) = Σ_j C(w,j) a_j`.
pub fn binomial_moment_coeffs(n: usize, j_max: usize) -> Result<Vec<BigInt>> {
    if n == 0 || j_max > n {
        return domain(format!(
            "need n ≥ 1 and j_max ≤ n, got n={n}, j_max={j_max}"
        ));
    }
    Ok((0..=j_max)
        .map(|j| {
            (1..=j)
                .map(|w| sign(j - w) * binom_u(j, w) * lambda_unchecked(n, w))
                .sum()
        })
        .collect())
}

/// Rebuilds `λ(w)` from the binomial-moment coefficients for every `w`.
pub fn binomial_moment_checks(n: usize) -> Result<Vec<IdentityCheck>> {
    let a = binomial_moment_coeffs(n, n)?;
    Ok((0..=n)
        .map(|w| {
            let s: BigInt = (0..=w).map(|j| binom_u(w, j) * &a[j]).sum();
            IdentityCheck::new(
                "binomial-moments",
                format!("n={n} w={w}"),
                int(s),
                int(lambda_unchecked(n, w)),
            )
        })
        .collect())
}

/// Forward-difference table of `λ(2i)`, `i = 1..=⌊n/2⌋`; row `k` holds `Δ^k`.
pub fn even_lambda_differences(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![(1..=n / 2)
        .map(|i| lambda_unchecked(n, 2 * i))
        .collect::<Vec<_>>()];
    while rows.last().unwrap().len() > 1 {
        let prev = rows.last().unwrap();
        rows.push(prev.windows(2).map(|p| &p[1] - &p[0]).collect());
    }
    rows
}
