//! Quadratic discrepancy of binary codes: spectral and dual formulas, the
//! definitional oracle, closed forms, random codes and distance-sum estimates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::codes::{
    dual_of, extend_code, pairwise_distance_distribution, random_code, BinaryCode,
    DistanceDistribution, DualDistribution,
};
use crate::combinatorics::{binom_u, int, pow2, rat};
use crate::display;
use crate::error::{domain, Error, Result};
use crate::kernels::{ball_volume, lambda_average, lambda_unchecked, DEFAULT_ORACLE_LIMIT};
use crate::krawtchouk::{squared_column_sums, KrawtchoukTable};
use crate::report::IdentityCheck;
use crate::scalar::Scalar;

/// `Σ_{w≥1} A_w λ(w)`, the kernel energy of a distance distribution.
pub fn energy(dist: &DistanceDistribution) -> BigRational {
    let n = dist.n();
    let total: BigInt = dist
        .pair_counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(w, &c)| BigInt::from(c) * lambda_unchecked(n, w))
        .sum();
    BigRational::new(total, BigInt::from(dist.size()))
}

/// `Λ_n - (1/N) Σ_{w≥1} A_w λ(w)`.
pub fn discrepancy_spectrum(dist: &DistanceDistribution) -> BigRational {
    lambda_average(dist.n()) - energy(dist) / int(dist.size())
}

/// The same formula for an arbitrary vector `A_0..A_n` and size `N`.
pub fn discrepancy_from_values<T: Scalar>(size: &T, a: &[T]) -> Result<T> {
    if a.is_empty() || !size.is_strictly_positive() {
        return domain("need a nonempty distribution and positive size");
    }
    let n = a.len() - 1;
    let mut e = T::zero();
    for (w, v) in a.iter().enumerate().skip(1) {
        e = e + v.clone() * T::from_bigint(&lambda_unchecked(n, w));
    }
    Ok(T::from_rational(&lambda_average(n)) - e / size.clone())
}

/// Evaluates both dual formulas
/// `-2^{-n} Σ_{i≥1} A⊥_i Σ_w K_w(i) λ(w)` and
/// `2^{-n} Σ_{k≥1} A⊥_k Σ_{t<n} (K_t^{(n-1)}(k-1))²`
/// and returns their common value.
pub fn discrepancy_dual(dual: &DualDistribution) -> Result<BigRational> {
    let n = dual.n();
    if n == 0 {
        return domain("length must be at least 1");
    }
    let table = KrawtchoukTable::new(n);
    let sums = squared_column_sums(n);
    let scale = int(pow2(n));
    let mut transform = BigRational::zero();
    let mut squares = BigRational::zero();
    for i in 1..=n {
        let a = dual.get(i);
        if a.is_zero() {
            continue;
        }
        let k: BigInt = (1..=n)
            .map(|w| table.get(w, i) * lambda_unchecked(n, w))
            .sum();
        transform -= a * int(k);
        squares += a * int(sums[i].clone());
    }
    let (transform, squares) = (transform / &scale, squares / &scale);
    if transform != squares {
        return Err(Error::InternalMismatch(format!(
            "dual formulas disagree: {transform} vs {squares}"
        )));
    }
    Ok(squares)
}

/// Definitional evaluation `Σ_t Σ_x (|B(x,t) ∩ Z|/N - |B(x,t)|/2^n)²` over the
/// whole cube.
pub fn discrepancy_brute(code: &BinaryCode) -> Result<BigRational> {
    discrepancy_brute_limited(code, DEFAULT_ORACLE_LIMIT)
}

///
/// For linear codes the ball counts are constant on cosets, so only one point
/// per coset is visited.
pub fn discrepancy_brute_limited(code: &BinaryCode, limit: usize) -> Result<BigRational> {
    let n = code.n();
    if n > limit {
        return Err(Error::Resource {
            what: "discrepancy oracle",
            requested: n,
            limit,
        });
    }
    match code.coset_leaders() {
        Some(leaders) => Ok(definitional_sum(code, &leaders, code.size() as i128)),
        None => discrepancy_brute_direct(code, limit),
    }
}

/// The definitional sum over every point of the cube, with no use of symmetry.
pub fn discrepancy_brute_direct(code: &BinaryCode, limit: usize) -> Result<BigRational> {
    let n = code.n();
    if n > limit {
        return Err(Error::Resource {
            what: "discrepancy oracle",
            requested: n,
            limit,
        });
    }
    let points: Vec<u64> = (0..1u64 << n).collect();
    Ok(definitional_sum(code, &points, 1))
}

fn definitional_sum(code: &BinaryCode, points: &[u64], multiplicity: i128) -> BigRational {
    let n = code.n();
    let mut words = Vec::with_capacity(code.size() as usize);
    code.for_each_word(|w| words.push(w));
    let size = words.len() as i128;
    let cube = 1i128 << n;
    let volumes: Vec<i128> = (0..=n)
        .map(|t| ball_volume(n, t).unwrap().to_i128().unwrap())
        .collect();
    // each term is scaled by N² 4^n to stay in integers
    let total: i128 = points
        .par_iter()
        .map(|&x| {
            let mut hist = vec![0i128; n + 1];
            for &z in &words {
                hist[(x ^ z).count_ones() as usize] += 1;
            }
            let mut inside = 0i128;
            let mut acc = 0i128;
            for t in 0..=n {
                inside += hist[t];
                let dev = inside * cube - volumes[t] * size;
                acc += dev * dev;
            }
            acc
        })
        .sum();
    BigRational::new(
        BigInt::from(total * multiplicity),
        BigInt::from(size * size) * pow2(2 * n),
    )
}

/// How a discrepancy value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Definition,
    DistanceSpectrum,
    DualSpectrum,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Definition => "definition",
            Method::DistanceSpectrum => "distance-spectrum",
            Method::DualSpectrum => "dual-spectrum",
            Method::ClosedForm => "closed-form",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    pub value: BigRational,
    pub method: Method,
    pub input: String,
}

impl DiscrepancyReport {
    pub fn decimal(&self, digits: usize) -> String {
        display::to_significant(&self.value, digits)
    }
}

impl fmt::Display for DiscrepancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}) [{}; {}]",
            display::exact(&self.value),
            self.decimal(display::DEFAULT_SIGNIFICANT_DIGITS),
            self.method,
            self.input
        )
    }
}

/// Everything computed about one code: spectra and the discrepancy by every
/// available route.
#[derive(Debug, Clone)]
pub struct CodeAnalysis {
    pub distance: DistanceDistribution,
    pub dual: DualDistribution,
    pub reports: Vec<DiscrepancyReport>,
}

impl CodeAnalysis {
    pub fn value(&self) -> &BigRational {
        &self.reports[0].value
    }

    pub fn all_agree(&self) -> bool {
        self.reports.iter().all(|r| &r.value == self.value())
    }
}

/// Runs the spectral and dual formulas, plus the definitional oracle when
/// `oracle_limit` is given. A disagreement is reported as an internal mismatch.
pub fn analyze(code: &BinaryCode, oracle_limit: Option<usize>) -> Result<CodeAnalysis> {
    let distance = crate::codes::distance_distribution(code)?;
    let dual = dual_of(&distance)?;
    let input = code.label().to_string();
    let mut reports = vec![
        DiscrepancyReport {
            value: discrepancy_spectrum(&distance),
            method: Method::DistanceSpectrum,
            input: input.clone(),
        },
        DiscrepancyReport {
            value: discrepancy_dual(&dual)?,
            method: Method::DualSpectrum,
            input: input.clone(),
        },
    ];
    if let Some(limit) = oracle_limit {
        reports.push(DiscrepancyReport {
            value: discrepancy_brute_limited(code, limit)?,
            method: Method::Definition,
            input,
        });
    }
    let analysis = CodeAnalysis {
        distance,
        dual,
        reports,
    };
    if !analysis.all_agree() {
        let values: Vec<String> = analysis
            .reports
            .iter()
            .map(|r| format!("{}={}", r.method, display::exact(&r.value)))
            .collect();
        return Err(Error::InternalMismatch(values.join(", ")));
    }
    Ok(analysis)
}

/// `E D = n C(2n,n) / (N 2^{n+1}) = Λ_n / N` for `N` independent uniform words.
pub fn expected_discrepancy(n: usize, size: u64) -> Result<BigRational> {
    if n == 0 || size == 0 {
        return domain("need n ≥ 1 and N ≥ 1");
    }
    Ok(lambda_average(n) / int(size))
}

/// `((N-1)/N) Λ_n - E D`, clipped at zero.
pub fn variance_bound(n: usize, size: u64) -> Result<BigRational> {
    let e = expected_discrepancy(n, size)?;
    let v = rat(size - 1, size) * lambda_average(n) - e;
    Ok(if v < BigRational::zero() {
        BigRational::zero()
    } else {
        v
    })
}

/// Exact variance of the discrepancy of `N` independent uniform words:
/// `2(N-1)/N³ · Var λ(W)` with `W ~ Bin(n, 1/2)`, since the pairwise
/// distances are pairwise independent.
pub fn exact_variance(n: usize, size: u64) -> Result<BigRational> {
    if n == 0 || size == 0 {
        return domain("need n ≥ 1 and N ≥ 1");
    }
    let cube = int(pow2(n));
    let (mut m1, mut m2) = (BigRational::zero(), BigRational::zero());
    for w in 1..=n {
        let l = int(lambda_unchecked(n, w));
        let p = int(binom_u(n, w)) / &cube;
        m2 += &p * &l * &l;
        m1 += p * l;
    }
    let var = m2 - &m1 * &m1;
    let s = int(size);
    Ok(int(2) * (&s - int(1)) / (&s * &s * &s) * var)
}

fn odd_length(m: usize) -> Result<usize> {
    if !(2..=62).contains(&m) {
        return domain(format!("m must be in 2..=62, got {m}"));
    }
    Ok((1usize << m) - 1)
}

/// `D(H_m) = n 2^{-n} C(n-1, (n-1)/2)` with `n = 2^m - 1`.
pub fn hamming_closed(m: usize) -> Result<BigRational> {
    let n = odd_length(m)?;
    Ok(BigRational::new(
        BigInt::from(n) * binom_u(n - 1, (n - 1) / 2),
        pow2(n),
    ))
}

/// `D = Λ_n - (n/N) λ((n+1)/2)` for the simplex code, `N = 2^m`.
pub fn simplex_closed(m: usize) -> Result<BigRational> {
    let n = odd_length(m)?;
    Ok(lambda_average(n)
        - BigRational::new(
            BigInt::from(n) * lambda_unchecked(n, n.div_ceil(2)),
            pow2(m),
        ))
}

/// One column of the Hamming/Hadamard comparison: `n = 2^m - 1`, Hamming
/// codes of size `2^{n-m}` and their duals of size `2^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct HammingRow {
    pub m: usize,
    pub n: usize,
    pub hamming: BigRational,
    /// `E D` for `2^{n-m}` random words.
    pub hamming_expected: BigRational,
    pub hadamard: BigRational,
    /// `E D` for `2^m` random words.
    pub hadamard_expected: BigRational,
}

impl HammingRow {
    /// `2^{-n} D(H_m⊥)`.
    pub fn hadamard_scaled(&self) -> BigRational {
        &self.hadamard / int(pow2(self.n))
    }

    /// `2^{-n} E D(2^m)`.
    pub fn hadamard_expected_scaled(&self) -> BigRational {
        &self.hadamard_expected / int(pow2(self.n))
    }
}

pub fn hamming_row(m: usize) -> Result<HammingRow> {
    let n = odd_length(m)?;
    let lambda = lambda_average(n);
    Ok(HammingRow {
        m,
        n,
        hamming: hamming_closed(m)?,
        hamming_expected: &lambda / int(pow2(n - m)),
        hadamard: simplex_closed(m)?,
        hadamard_expected: lambda / int(pow2(m)),
    })
}

/// `D(C_{n-1}) = n 2^{-(n+1)} C(2n,n) - (n-1) 2^{-(n-1)} C(2n-2,n-1)`.
pub fn subcube_closed(n: usize) -> Result<BigRational> {
    if n == 0 {
        return domain("length must be at least 1");
    }
    Ok(lambda_average(n)
        - BigRational::new(BigInt::from(n - 1) * binom_u(2 * n - 2, n - 1), pow2(n - 1)))
}

/// `D(Z^ex) = 2 D(Z) + 2^{-(n+1)} C(2n,n)` for a code of odd length `n`.
pub fn extension_identity(code: &BinaryCode) -> Result<IdentityCheck> {
    let n = code.n();
    if n.is_multiple_of(2) {
        return domain(format!("extension identity needs odd length, got {n}"));
    }
    let d = discrepancy_spectrum(&crate::codes::distance_distribution(code)?);
    let ext = extend_code(code)?;
    let lhs = discrepancy_spectrum(&crate::codes::distance_distribution(&ext)?);
    let rhs = int(2) * d + BigRational::new(binom_u(2 * n, n), pow2(n + 1));
    Ok(IdentityCheck::new(
        "extension",
        code.label().to_string(),
        lhs,
        rhs,
    ))
}

/// `⟨d⟩_Z = (1/N) Σ_w w A_w`.
pub fn avg_distance(dist: &DistanceDistribution) -> BigRational {
    let total: u128 = dist
        .pair_counts()
        .iter()
        .enumerate()
        .map(|(w, &c)| w as u128 * c)
        .sum();
    BigRational::new(
        BigInt::from(total),
        BigInt::from(dist.size()) * BigInt::from(dist.size()),
    )
}

/// `⟨d⟩_Z = n/2 - A⊥_1/2`.
pub fn dual_avg_relation(code: &BinaryCode) -> Result<IdentityCheck> {
    let dist = crate::codes::distance_distribution(code)?;
    let dual = dual_of(&dist)?;
    let n = code.n();
    Ok(IdentityCheck::new(
        "average-distance",
        code.label().to_string(),
        avg_distance(&dist),
        rat(n, 2) - dual.get(1) / int(2),
    ))
}

/// Default for the constant `c` in `c/√(πn) ≤ C(2n,n)/4^n`.
pub fn default_center_constant() -> BigRational {
    rat(9, 10)
}

/// The estimate interval for `D` in terms of `⟨d⟩_Z`:
/// `2^n/√(πn) · (c n/2 - √(n⟨d⟩/2))  ≤  D  ≤  2^n/√(πn) · (n/2 - (c/2)⟨d⟩)`.
pub fn distance_sum_bounds(dist: &DistanceDistribution, c: &BigRational) -> (f64, f64) {
    let n = dist.n() as f64;
    let c = c.as_f64();
    let d = avg_distance(dist).as_f64();
    let scale = 2f64.powi(dist.n() as i32) / (std::f64::consts::PI * n).sqrt();
    (
        scale * (c * n / 2.0 - (n * d / 2.0).sqrt()),
        scale * (n / 2.0 - c / 2.0 * d),
    )
}

/// `2^n/√(πn) · (c' n/2 + c 2^{n-3}/N)` with `c' = 1 - c/2`, valid for
/// `N ≤ 2^{n-1}`.
pub fn fu_discrepancy_bound(n: usize, size: u64, c: &BigRational) -> Result<f64> {
    if n == 0 || n > 62 || size == 0 || size > 1u64 << (n - 1) {
        return domain(format!("need 1 ≤ N ≤ 2^(n-1), got n={n}, N={size}"));
    }
    let c = c.as_f64();
    let c_prime = 1.0 - c / 2.0;
    let nf = n as f64;
    let scale = 2f64.powi(n as i32) / (std::f64::consts::PI * nf).sqrt();
    Ok(scale * (c_prime * nf / 2.0 + c * 2f64.powi(n as i32 - 3) / size as f64))
}

/// Outcome of a seeded random-code experiment.
#[derive(Debug, Clone)]
pub struct MonteCarlo {
    pub n: usize,
    pub size: u64,
    pub seed: u64,
    pub values: Vec<BigRational>,
    pub mean: BigRational,
    /// Unbiased sample variance, zero for a single trial.
    pub variance: BigRational,
    pub expected: BigRational,
    pub variance_bound: BigRational,
    pub exact_variance: BigRational,
}

impl MonteCarlo {
    pub fn standard_error(&self) -> f64 {
        (self.variance.as_f64() / self.values.len() as f64).sqrt()
    }

    /// Whether the sample mean is within `k` standard errors of `E D`.
    pub fn mean_within(&self, k: f64) -> bool {
        (self.mean.as_f64() - self.expected.as_f64()).abs() <= k * self.standard_error()
    }
}

/// Trial `i` draws `random_code(n, N, seed + i)`.
pub fn monte_carlo(n: usize, size: u64, trials: usize, seed: u64) -> Result<MonteCarlo> {
    if trials == 0 {
        return domain("need at least one trial");
    }
    let values = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let code = random_code(n, size as usize, seed.wrapping_add(i))?;
            Ok(discrepancy_spectrum(&pairwise_distance_distribution(
                &code,
            )?))
        })
        .collect::<Result<Vec<_>>>()?;
    let count = int(trials);
    let mean: BigRational = values.iter().sum::<BigRational>() / &count;
    let variance = if trials > 1 {
        values
            .iter()
            .map(|v| (v - &mean) * (v - &mean))
            .sum::<BigRational>()
            / int(trials - 1)
    } else {
        BigRational::zero()
    };
    Ok(MonteCarlo {
        n,
        size,
        seed,
        mean,
        variance,
        expected: expected_discrepancy(n, size)?,
        variance_bound: variance_bound(n, size)?,
        exact_variance: exact_variance(n, size)?,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::*;

    #[test]
    fn hamming_rows() {
        let r = hamming_row(4).unwrap();
        assert_eq!(r.hamming_expected, expected_discrepancy(15, 2048).unwrap());
        assert_eq!(r.hadamard_expected, expected_discrepancy(15, 16).unwrap());
        assert_eq!(r.hamming, spectrum_of(&hamming_code(4).unwrap()));
        assert_eq!(r.hadamard, spectrum_of(&simplex_code(4).unwrap()));
        let r = hamming_row(10).unwrap();
        assert_eq!(display::to_fixed(&r.hamming, 3), "12.763");
        assert_eq!(display::to_fixed(&r.hamming_expected, 2), "9238.04");
        assert_eq!(display::to_fixed(&r.hadamard_scaled(), 3), "0.008");
    }

    fn spectrum_of(code: &BinaryCode) -> BigRational {
        discrepancy_spectrum(&distance_distribution(code).unwrap())
    }

    #[test]
    fn spectrum_examples() {
        assert!(spectrum_of(&full_cube(5).unwrap()).is_zero());
        assert_eq!(spectrum_of(&repetition(3).unwrap()), rat(3, 4));
        // displayed as 390.75
        let golay = spectrum_of(&golay23());
        assert_eq!(golay, rat(409732557, 1048576));
        assert_eq!(display::to_fixed(&golay, 2), "390.75");
        assert_eq!(spectrum_of(&hamming_code(3).unwrap()), rat(35, 32));
    }

    #[test]
    fn singleton_discrepancy_is_the_kernel_average() {
        for n in 1..=10 {
            let c = BinaryCode::from_words(n, vec![0], "single").unwrap();
            let a = analyze(&c, Some(20)).unwrap();
            assert_eq!(a.value(), &lambda_average(n));
        }
    }

    #[test]
    fn brute_examples() {
        assert!(discrepancy_brute(&full_cube(4).unwrap()).unwrap().is_zero());
        assert_eq!(
            discrepancy_brute(&hamming_code(3).unwrap()).unwrap(),
            rat(35, 32)
        );
        let c = BinaryCode::from_words(1, vec![0], "x").unwrap();
        assert_eq!(discrepancy_brute(&c).unwrap(), rat(1, 2));
        for id in [
            "hamming:3",
            "simplex:3",
            "subcube:6:2",
            "extend:hamming:3",
            "repetition:9",
        ] {
            let c = code_from_id(id).unwrap();
            assert_eq!(
                discrepancy_brute(&c).unwrap(),
                discrepancy_brute_direct(&c, 20).unwrap(),
                "{id}"
            );
        }
        assert!(matches!(
            discrepancy_brute_limited(&golay23(), 20),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn three_routes_agree_on_random_and_multiset_codes() {
        for n in 1..=9 {
            for seed in 0..10 {
                let size = 1 + (seed as usize * 7) % (1 << n).min(20);
                let c = random_code(n, size, seed).unwrap();
                let a = analyze(&c, Some(20)).unwrap();
                assert!(a.all_agree());
                assert!(a.value() >= &BigRational::zero());
            }
        }
    }

    #[test]
    fn golay_by_cosets() {
        let g = golay23();
        assert_eq!(discrepancy_brute_limited(&g, 23).unwrap(), spectrum_of(&g));
    }

    #[test]
    fn dual_examples() {
        let h = hamming_code(4).unwrap();
        let d = dual_of(&distance_distribution(&h).unwrap()).unwrap();
        assert_eq!(discrepancy_dual(&d).unwrap(), hamming_closed(4).unwrap());
    }

    #[test]
    fn generic_values_formula() {
        let d = distance_distribution(&hamming_code(3).unwrap()).unwrap();
        let exact = discrepancy_from_values(&int(16), &d.values()).unwrap();
        assert_eq!(exact, rat(35, 32));
        let f: Vec<f64> = d.values().iter().map(|v| v.as_f64()).collect();
        let approx = discrepancy_from_values(&16.0, &f).unwrap();
        assert!((approx - 35.0 / 32.0).abs() < 1e-9);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(hamming_closed(4).unwrap(), rat(6435, 4096));
        assert_eq!(display::to_fixed(&hamming_closed(4).unwrap(), 3), "1.571");
        for m in 2..=4 {
            assert_eq!(
                hamming_closed(m).unwrap(),
                spectrum_of(&hamming_code(m).unwrap())
            );
            assert_eq!(
                simplex_closed(m).unwrap(),
                spectrum_of(&simplex_code(m).unwrap())
            );
        }
        assert_eq!(
            hamming_closed(5).unwrap(),
            spectrum_of(&hamming_code(5).unwrap())
        );
        let s = simplex_closed(4).unwrap() / int(pow2(15));
        assert_eq!(display::to_fixed(&s, 3), "0.058");
        for n in 2..=12 {
            assert_eq!(
                subcube_closed(n).unwrap(),
                spectrum_of(&subcube(n, 1).unwrap())
            );
        }
        assert!(hamming_closed(1).is_err());
    }

    #[test]
    fn expectation_and_variance() {
        assert_eq!(
            display::to_fixed(&expected_discrepancy(15, 2048).unwrap(), 3),
            "17.336"
        );
        assert_eq!(
            display::to_fixed(&expected_discrepancy(23, 4096).unwrap(), 2),
            "2755.68"
        );
        assert_eq!(
            expected_discrepancy(6, 64).unwrap(),
            lambda_average(6) / int(64)
        );
        assert!(variance_bound(5, 1).unwrap().is_zero());
        assert_eq!(
            variance_bound(10, 32).unwrap(),
            rat(30, 32) * lambda_average(10)
        );
        assert!(exact_variance(10, 32).unwrap() < variance_bound(10, 32).unwrap());
        assert!(exact_variance(10, 1).unwrap().is_zero());
    }

    #[test]
    fn extension_examples() {
        assert!(extension_identity(&hamming_code(3).unwrap())
            .unwrap()
            .holds());
        assert!(extension_identity(&repetition(1).unwrap()).unwrap().holds());
        assert!(extension_identity(&random_code(5, 6, 2).unwrap())
            .unwrap()
            .holds());
        assert!(extension_identity(&repetition(4).unwrap()).is_err());
    }

    #[test]
    fn average_distance() {
        for id in [
            "cube:5",
            "hamming:3",
            "simplex:3",
            "golay23",
            "repetition:6",
            "subcube:6:2",
            "random:7:9:3",
        ] {
            let c = code_from_id(id).unwrap();
            let check = dual_avg_relation(&c).unwrap();
            assert!(check.holds(), "{check}");
            let dual = dual_distribution(&c).unwrap();
            let half = rat(c.n(), 2);
            assert!(check.lhs <= half);
            assert_eq!(check.lhs == half, dual.get(1).is_zero());
        }
    }

    #[test]
    fn estimates() {
        let d = distance_distribution(&hamming_code(3).unwrap()).unwrap();
        let (lo, hi) = distance_sum_bounds(&d, &default_center_constant());
        assert!(lo <= 35.0 / 32.0 && 35.0 / 32.0 <= hi);
        assert!(fu_discrepancy_bound(7, 65, &default_center_constant()).is_err());
        let fu = fu_discrepancy_bound(7, 16, &default_center_constant()).unwrap();
        assert!(fu >= 35.0 / 32.0);
    }

    #[test]
    fn two_word_codes_prefer_antipodes() {
        let n = 8;
        let values: Vec<BigRational> = (1..=n)
            .map(|w| {
                let c = BinaryCode::from_words(n, vec![0, (1u64 << w) - 1], "pair").unwrap();
                spectrum_of(&c)
            })
            .collect();
        let min = values.iter().min().unwrap();
        assert_eq!(min, &values[n - 1]);
    }

    #[test]
    fn small_monte_carlo() {
        let mc = monte_carlo(6, 8, 200, 1).unwrap();
        assert_eq!(mc.values.len(), 200);
        assert!(mc.mean_within(4.0));
        let again = monte_carlo(6, 8, 200, 1).unwrap();
        assert_eq!(mc.values, again.values);
        assert!(monte_carlo(6, 8, 1, 1).unwrap().variance.is_zero());
    }
}
