//! The exact identity suite behind `verify`: kernel sums, ball-volume sums,
//! the Krawtchouk toolkit, the λ̂ expansion, MacWilliams round trips and the
//! agreement of θ with λ.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::codes::{distance_distribution, random_code};
use crate::combinatorics::{binom_u, int};
use crate::error::{domain, Result};
use crate::kernels::{
    ball_volume, ball_volume_sq_sum, ball_volume_sum, closed_form_checks_with, lambda_average,
    lambda_unchecked, mu_t, KernelFn,
};
use crate::krawtchouk::{
    conj_identity, ctr_identity, lambda_hat, lambda_hat_is_negative_definite, macwilliams_forward,
    macwilliams_inverse, mu_reconstruction_check, rodrigues_check, square_expansion_check,
    KrawtchoukTable,
};
use crate::metric_space::{hamming_cube, theta_metric};
use crate::report::IdentityCheck;

/// Largest `n_max` accepted by [`run_suite`].
pub const MAX_SUITE_LENGTH: usize = 40;

/// Largest cube materialized as a distance matrix for the θ check.
pub const THETA_MATRIX_LIMIT: usize = 8;

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds()).collect()
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds())
    }

    /// Number of checks per identity name, in first-seen order.
    pub fn counts(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for c in &self.checks {
            let i = match out.iter().position(|e| e.0 == c.identity) {
                Some(i) => i,
                None => {
                    out.push((c.identity, 0, 0));
                    out.len() - 1
                }
            };
            out[i].1 += 1;
            if !c.holds() {
                out[i].2 += 1;
            }
        }
        out
    }
}

pub fn run_suite(n_max: usize) -> Result<SuiteReport> {
    run_suite_with(n_max, lambda_unchecked)
}

/// Runs every identity for `n = 1..=n_max` with `kernel` standing in for λ
/// wherever λ is compared against something computed independently.
pub fn run_suite_with(n_max: usize, kernel: KernelFn) -> Result<SuiteReport> {
    if n_max == 0 || n_max > MAX_SUITE_LENGTH {
        return domain(format!(
            "n_max must be in 1..={MAX_SUITE_LENGTH}, got {n_max}"
        ));
    }
    let per_n: Vec<Vec<IdentityCheck>> = (1..=n_max)
        .into_par_iter()
        .map(|n| checks_for(n, kernel))
        .collect::<Result<_>>()?;
    Ok(SuiteReport {
        checks: per_n.into_iter().flatten().collect(),
    })
}

fn checks_for(n: usize, kernel: KernelFn) -> Result<Vec<IdentityCheck>> {
    let mut out: Vec<IdentityCheck> = closed_form_checks_with(n, kernel)?.into();
    let average: BigInt = (0..=n).map(|w| binom_u(n, w) * kernel(n, w)).sum();
    out.push(IdentityCheck::new(
        "kernel-average",
        format!("n={n}"),
        BigRational::new(average, crate::combinatorics::pow2(n)),
        lambda_average(n),
    ));

    let volumes = (0..=n)
        .map(|t| ball_volume(n, t))
        .collect::<Result<Vec<_>>>()?;
    out.push(IdentityCheck::new(
        "ball-volume-sum",
        format!("n={n}"),
        int(volumes.iter().sum::<BigInt>()),
        ball_volume_sum(n),
    ));
    out.push(IdentityCheck::new(
        "ball-volume-square-sum",
        format!("n={n}"),
        int(volumes.iter().map(|v| v * v).sum::<BigInt>()),
        ball_volume_sq_sum(n),
    ));

    for i in 1..=n.div_ceil(2) {
        out.push(conj_identity(n, i)?);
    }
    for k in 1..=n {
        out.push(ctr_identity(n, k)?);
    }
    for t in 0..=n {
        out.extend(mu_reconstruction_check(n, t)?);
    }

    let table = KrawtchoukTable::new(n);
    let hat = lambda_hat(n)?;
    for w in 0..=n {
        out.push(IdentityCheck::new(
            "kernel-from-dual-coefficients",
            format!("n={n} w={w}"),
            hat.reconstruct(&table, w),
            int(kernel(n, w)),
        ));
    }
    out.push(IdentityCheck::new(
        "dual-coefficients-negative",
        format!("n={n}"),
        int(i64::from(lambda_hat_is_negative_definite(&hat))),
        int(1),
    ));
    out.push(IdentityCheck::new(
        "generating-function",
        format!("n={n}"),
        int(i64::from(table.matches_generating_function())),
        int(1),
    ));
    for i in 0..=n {
        for j in 0..=n {
            out.push(table.orthogonality_check(i, j));
            out.push(table.symmetry_check(i, j));
            out.push(table.reflection_check(i, j));
        }
        out.extend(rodrigues_check(n, i)?);
        out.extend(square_expansion_check(n, i)?);
    }

    out.extend(macwilliams_round_trips(n)?);

    for w in 0..=n {
        let volumes: BigInt = volumes.iter().sum();
        let meets: BigInt = (0..=n).map(|t| mu_t(n, w, t)).sum::<Result<BigInt>>()?;
        out.push(IdentityCheck::new(
            "theta-kernel",
            format!("n={n} w={w}"),
            int(volumes - meets),
            int(kernel(n, w)),
        ));
    }
    if n <= THETA_MATRIX_LIMIT {
        let cube = hamming_cube(n)?;
        for w in 0..=n {
            let y = (1usize << w) - 1;
            out.push(IdentityCheck::new(
                "theta-matrix",
                format!("n={n} w={w}"),
                theta_metric(&cube, 0, y)?,
                int(kernel(n, w)),
            ));
        }
    }
    Ok(out)
}

/// Round trips for the singleton, the repetition code, the whole cube and a
/// seeded random code.
fn macwilliams_round_trips(n: usize) -> Result<Vec<IdentityCheck>> {
    let mut cases: Vec<(String, u64, Vec<BigRational>)> = Vec::new();
    let mut single = vec![int(0); n + 1];
    single[0] = int(1);
    cases.push(("singleton".into(), 1, single.clone()));
    let mut rep = single;
    rep[n] += int(1);
    cases.push(("repetition".into(), 2, rep));
    if n <= 62 {
        cases.push((
            "cube".into(),
            1u64 << n,
            (0..=n).map(|w| int(binom_u(n, w))).collect(),
        ));
    }
    if n <= 16 {
        let size = (n as u64 + 3).min(1 << n);
        let code = random_code(n, size as usize, n as u64)?;
        let dist = distance_distribution(&code)?;
        cases.push((format!("random:{n}:{size}:{n}"), size, dist.values()));
    }
    let mut out = Vec::new();
    for (label, size, a) in cases {
        let size = int(size);
        let back = macwilliams_inverse(&macwilliams_forward(&a, &size)?, &size)?;
        for (w, (x, y)) in back.into_iter().zip(&a).enumerate() {
            out.push(IdentityCheck::new(
                "macwilliams-round-trip",
                format!("n={n} {label} w={w}"),
                x,
                y.clone(),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn off_by_one(n: usize, w: usize) -> BigInt {
        let v = lambda_unchecked(n, w);
        if w == 2 {
            v + 1
        } else {
            v
        }
    }

    #[test]
    fn suite_passes() {
        let r = run_suite(10).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(r.counts().len() > 15);
        assert!(run_suite(1).unwrap().passed());
        assert!(run_suite(0).is_err());
    }

    #[test]
    fn mutant_kernel_fails_first_at_n2() {
        let r = run_suite_with(6, off_by_one).unwrap();
        let first = r.first_failure().unwrap();
        assert_eq!(first.identity, "kernel-sum");
        assert_eq!(first.params, "n=2");
    }
}
