//! Finite distance-invariant metric spaces: the general invariance principle,
//! weighted discrepancy, and metric association schemes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::codes::DualDistribution;
use crate::combinatorics::{binom_u, int, pow2};
use crate::error::{domain, Error, Result};
use crate::kernels::mu_t;
use crate::krawtchouk::mu_coefficients;

/// A validated distance matrix on `P` points with diameter `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetricSpace {
    points: usize,
    diameter: usize,
    dist: Vec<u32>,
    // |B(x,t)|, identical for every center
    volumes: Vec<u64>,
}

fn invalid<T>(msg: String) -> Result<T> {
    Err(Error::Validation(msg))
}

impl FiniteMetricSpace {
    /// Validates the metric axioms and distance-invariance.
    pub fn new(points: usize, dist: Vec<u32>) -> Result<Self> {
        if points == 0 {
            return domain("a space needs at least one point");
        }
        if dist.len() != points * points {
            return domain(format!(
                "expected {} entries, got {}",
                points * points,
                dist.len()
            ));
        }
        let d = |x: usize, y: usize| dist[x * points + y];
        for x in 0..points {
            if d(x, x) != 0 {
                return invalid(format!("d({x},{x}) = {} ≠ 0", d(x, x)));
            }
            for y in 0..points {
                if d(x, y) != d(y, x) {
                    return invalid(format!(
                        "d({x},{y}) = {} but d({y},{x}) = {}",
                        d(x, y),
                        d(y, x)
                    ));
                }
                if x != y && d(x, y) == 0 {
                    return invalid(format!("distinct points {x} and {y} at distance 0"));
                }
            }
        }
        let violation = (0..points).into_par_iter().find_map_first(|x| {
            for y in 0..points {
                for z in 0..points {
                    if d(x, z) > d(x, y) + d(y, z) {
                        return Some((x, y, z));
                    }
                }
            }
            None
        });
        if let Some((x, y, z)) = violation {
            return invalid(format!(
                "triangle inequality fails: d({x},{z}) = {} > d({x},{y}) + d({y},{z}) = {}",
                d(x, z),
                d(x, y) + d(y, z)
            ));
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        let profile = |x: usize| {
            let mut counts = vec![0u64; diameter + 1];
            for y in 0..points {
                counts[d(x, y) as usize] += 1;
            }
            let mut acc = 0;
            counts
                .into_iter()
                .map(|c| {
                    acc += c;
                    acc
                })
                .collect::<Vec<u64>>()
        };
        let volumes = profile(0);
        for x in 1..points {
            let other = profile(x);
            if let Some(t) = (0..=diameter).find(|&t| other[t] != volumes[t]) {
                return invalid(format!(
                    "not distance-invariant: |B(0,{t})| = {} but |B({x},{t})| = {}",
                    volumes[t], other[t]
                ));
            }
        }
        Ok(FiniteMetricSpace {
            points,
            diameter,
            dist,
            volumes,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn d(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.points + y] as usize
    }

    /// `|B(x,t)|` for `t = 0..=n`.
    pub fn ball_volumes(&self) -> &[u64] {
        &self.volumes
    }

    fn row(&self, x: usize) -> &[u32] {
        &self.dist[x * self.points..(x + 1) * self.points]
    }

    /// Header line and matrix rows in the load format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.points, self.diameter);
        for x in 0..self.points {
            let row: Vec<String> = self.row(x).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses `P n` followed by `P` rows of `P` integers; `#` starts a comment.
pub fn load_space(text: &str) -> Result<FiniteMetricSpace> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_err = |line, message: String| Error::Parse { line, message };
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing header \"P n\"".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [p, n] = fields.as_slice() else {
        return Err(parse_err(
            hline,
            format!("header must be \"P n\", got {header:?}"),
        ));
    };
    let points: usize = p
        .parse()
        .map_err(|_| parse_err(hline, format!("bad point count {p:?}")))?;
    let diameter: usize = n
        .parse()
        .map_err(|_| parse_err(hline, format!("bad diameter {n:?}")))?;
    let mut dist = Vec::with_capacity(points * points);
    let mut last = hline;
    for r in 0..points {
        let (line, body) = lines
            .next()
            .ok_or_else(|| parse_err(last, format!("expected {points} rows, found {r}")))?;
        last = line;
        let row = body
            .split_whitespace()
            .map(|v| {
                v.parse::<u32>()
                    .map_err(|_| parse_err(line, format!("bad distance {v:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if row.len() != points {
            return Err(parse_err(
                line,
                format!("row has {} entries, expected {points}", row.len()),
            ));
        }
        dist.extend(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected extra row".into()));
    }
    let space = FiniteMetricSpace::new(points, dist)?;
    if space.diameter != diameter {
        return invalid(format!(
            "header diameter {diameter} but largest distance is {}",
            space.diameter
        ));
    }
    Ok(space)
}

fn from_fn(points: usize, f: impl Fn(usize, usize) -> u32) -> Result<FiniteMetricSpace> {
    let dist = (0..points * points)
        .map(|i| f(i / points, i % points))
        .collect();
    FiniteMetricSpace::new(points, dist)
}

/// `{0,1}^n` with the Hamming distance; point `x` is the word with bits of `x`.
pub fn hamming_cube(n: usize) -> Result<FiniteMetricSpace> {
    if n == 0 || n > 10 {
        return domain(format!("cube dimension must be in 1..=10, got {n}"));
    }
    from_fn(1 << n, |x, y| (x ^ y).count_ones())
}

/// Cycle graph `C_m` with graph distance.
pub fn cycle(m: usize) -> Result<FiniteMetricSpace> {
    if m < 3 {
        return domain("a cycle needs at least 3 vertices");
    }
    from_fn(m, |x, y| {
        let d = x.abs_diff(y);
        d.min(m - d) as u32
    })
}

/// Path graph on `m` vertices; not distance-invariant for `m ≥ 3`.
pub fn path(m: usize) -> Result<FiniteMetricSpace> {
    from_fn(m, |x, y| x.abs_diff(y) as u32)
}

/// Johnson graph `J(v,k)`: `k`-subsets of a `v`-set, distance `k - |A ∩ B|`.
/// Points are the subsets in increasing order of their bitmasks.
pub fn johnson(v: usize, k: usize) -> Result<FiniteMetricSpace> {
    if k == 0 || k >= v || v > 16 {
        return domain(format!("need 0 < k < v ≤ 16, got v={v}, k={k}"));
    }
    let sets: Vec<u32> = (0u32..1 << v)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    from_fn(sets.len(), |x, y| {
        k as u32 - (sets[x] & sets[y]).count_ones()
    })
}

/// Builds a space from `cube:n`, `cycle:m`, `path:m` or `johnson:v:k`.
pub fn space_from_id(id: &str) -> Result<FiniteMetricSpace> {
    let parts: Vec<&str> = id.split(':').collect();
    let num = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Domain(format!("bad number {s:?} in space id {id:?}")))
    };
    match parts.as_slice() {
        ["cube", n] => hamming_cube(num(n)?),
        ["cycle", m] => cycle(num(m)?),
        ["path", m] => path(num(m)?),
        ["johnson", v, k] => johnson(num(v)?, num(k)?),
        _ => domain(format!("unknown space id {id:?}")),
    }
}

fn check_subset(space: &FiniteMetricSpace, subset: &[usize]) -> Result<()> {
    if subset.is_empty() {
        return domain("subset must be nonempty");
    }
    if let Some(&z) = subset.iter().find(|&&z| z >= space.points) {
        return domain(format!(
            "point {z} is not in a space of {} points",
            space.points
        ));
    }
    Ok(())
}

fn check_point(space: &FiniteMetricSpace, x: usize) -> Result<()> {
    check_subset(space, &[x])
}

/// `Σ_u |d(x,u) - d(y,u)|`, twice the kernel.
fn lambda_twice(space: &FiniteMetricSpace, x: usize, y: usize) -> u64 {
    space
        .row(x)
        .iter()
        .zip(space.row(y))
        .map(|(a, b)| u64::from(a.abs_diff(*b)))
        .sum()
}

/// `λ(x,y) = (1/2) Σ_u |d(x,u) - d(y,u)|`.
pub fn general_lambda(space: &FiniteMetricSpace, x: usize, y: usize) -> Result<BigRational> {
    check_point(space, x)?;
    check_point(space, y)?;
    Ok(BigRational::new(
        BigInt::from(lambda_twice(space, x, y)),
        BigInt::from(2),
    ))
}

/// `μ_t(x,y) = |B(x,t) ∩ B(y,t)|`.
fn mu(space: &FiniteMetricSpace, x: usize, y: usize, t: usize) -> u64 {
    space
        .row(x)
        .iter()
        .zip(space.row(y))
        .filter(|(a, b)| (**a as usize) <= t && (**b as usize) <= t)
        .count() as u64
}

/// `θ(x,y) = Σ_t |B(x,t)| - Σ_t |B(x,t) ∩ B(y,t)|`.
pub fn theta_metric(space: &FiniteMetricSpace, x: usize, y: usize) -> Result<BigRational> {
    check_point(space, x)?;
    check_point(space, y)?;
    let volumes: u64 = space.volumes.iter().sum();
    let meets: u64 = (0..=space.diameter).map(|t| mu(space, x, y, t)).sum();
    Ok(int(volumes) - int(meets))
}

/// Mean of `f` over all ordered pairs of the space, and over all ordered
/// pairs of the subset.
fn averages(
    space: &FiniteMetricSpace,
    subset: &[usize],
    f: impl Fn(usize, usize) -> BigInt + Sync,
) -> (BigRational, BigRational) {
    let p = space.points;
    let whole: BigInt = (0..p)
        .into_par_iter()
        .map(|x| (0..p).map(|y| f(x, y)).sum::<BigInt>())
        .sum();
    let part: BigInt = subset
        .par_iter()
        .map(|&x| subset.iter().map(|&y| f(x, y)).sum::<BigInt>())
        .sum();
    let n = subset.len();
    (
        BigRational::new(whole, BigInt::from(p * p)),
        BigRational::new(part, BigInt::from(n * n)),
    )
}

/// The discrepancy by the λ-kernel and the μ-kernel forms, which must agree.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralDiscrepancy {
    /// `⟨λ⟩_X - ⟨λ⟩_Z`.
    pub lambda_form: BigRational,
    /// `⟨μ⟩_Z - ⟨μ⟩_X` with `μ = Σ_t μ_t`.
    pub mu_form: BigRational,
}

impl GeneralDiscrepancy {
    pub fn value(&self) -> &BigRational {
        &self.lambda_form
    }
}

/// Invariance-principle evaluation for a subset given by point indices
/// (repetitions allowed).
pub fn general_discrepancy(
    space: &FiniteMetricSpace,
    subset: &[usize],
) -> Result<GeneralDiscrepancy> {
    check_subset(space, subset)?;
    let (lx, lz) = averages(space, subset, |x, y| {
        BigInt::from(lambda_twice(space, x, y))
    });
    let lambda_form = (lx - lz) / int(2);
    let mu_sum = |x: usize, y: usize| -> BigInt {
        space
            .row(x)
            .iter()
            .zip(space.row(y))
            .map(|(a, b)| BigInt::from(space.diameter + 1 - (*a.max(b) as usize)))
            .sum()
    };
    let (mx, mz) = averages(space, subset, mu_sum);
    let mu_form = mz - mx;
    if lambda_form != mu_form {
        return Err(Error::InternalMismatch(format!(
            "λ form {lambda_form} ≠ μ form {mu_form}"
        )));
    }
    Ok(GeneralDiscrepancy {
        lambda_form,
        mu_form,
    })
}

/// `D_t(Z)²` for `t = 0..=n`, straight from the definition.
pub fn radius_discrepancies(
    space: &FiniteMetricSpace,
    subset: &[usize],
) -> Result<Vec<BigRational>> {
    check_subset(space, subset)?;
    let n = space.diameter;
    let size = subset.len() as i128;
    let p = space.points as i128;
    let sums: Vec<i128> = (0..space.points)
        .into_par_iter()
        .map(|x| {
            let mut hist = vec![0i128; n + 1];
            for &z in subset {
                hist[space.d(x, z)] += 1;
            }
            let mut inside = 0;
            (0..=n)
                .map(|t| {
                    inside += hist[t];
                    let dev = inside * p - space.volumes[t] as i128 * size;
                    dev * dev
                })
                .collect::<Vec<i128>>()
        })
        .reduce(
            || vec![0; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(s, v)| *s += v);
                a
            },
        );
    let denom = BigInt::from(size * size) * BigInt::from(p * p);
    Ok(sums
        .into_iter()
        .map(|s| BigRational::new(BigInt::from(s), denom.clone()))
        .collect())
}

/// `Σ_t D_t(Z)²`.
pub fn definitional_discrepancy(
    space: &FiniteMetricSpace,
    subset: &[usize],
) -> Result<BigRational> {
    Ok(radius_discrepancies(space, subset)?.into_iter().sum())
}

/// Nonnegative radius weights `g_0..g_n` with tail sums `γ(t) = Σ_{i≥t} g_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    g: Vec<BigRational>,
    gamma: Vec<BigRational>,
}

impl WeightVector {
    pub fn new(g: Vec<BigRational>) -> Result<Self> {
        if g.is_empty() {
            return domain("weight vector is empty");
        }
        if let Some(t) = g.iter().position(|v| v.is_negative()) {
            return domain(format!("weight g_{t} = {} is negative", g[t]));
        }
        let mut gamma = vec![BigRational::zero(); g.len() + 1];
        for t in (0..g.len()).rev() {
            gamma[t] = &gamma[t + 1] + &g[t];
        }
        gamma.pop();
        Ok(WeightVector { g, gamma })
    }

    pub fn ones(n: usize) -> Self {
        Self::new(vec![int(1); n + 1]).unwrap()
    }

    pub fn indicator(n: usize, t: usize) -> Result<Self> {
        if t > n {
            return domain(format!("radius {t} exceeds {n}"));
        }
        let mut g = vec![BigRational::zero(); n + 1];
        g[t] = int(1);
        Self::new(g)
    }

    /// Largest radius covered, so the vector has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.g.len() - 1
    }

    pub fn g(&self) -> &[BigRational] {
        &self.g
    }

    pub fn gamma(&self, t: usize) -> &BigRational {
        &self.gamma[t]
    }
}

/// Whitespace-separated integers or fractions `p/q`; `#` starts a comment.
pub fn parse_weights(text: &str) -> Result<WeightVector> {
    let mut g = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        for tok in raw.split('#').next().unwrap_or("").split_whitespace() {
            let v: BigRational = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("bad weight {tok:?}"),
            })?;
            g.push(v);
        }
    }
    WeightVector::new(g)
}

fn check_weights(space: &FiniteMetricSpace, weights: &WeightVector) -> Result<()> {
    if weights.n() != space.diameter {
        return domain(format!(
            "weights cover radii 0..={} but the diameter is {}",
            weights.n(),
            space.diameter
        ));
    }
    Ok(())
}

/// `λ_G(x,y) = (1/2) Σ_z |γ(d(x,z)) - γ(d(y,z))|`.
pub fn weighted_lambda(
    space: &FiniteMetricSpace,
    weights: &WeightVector,
    x: usize,
    y: usize,
) -> Result<BigRational> {
    check_weights(space, weights)?;
    check_point(space, x)?;
    check_point(space, y)?;
    Ok(weighted_lambda_unchecked(space, weights, x, y))
}

fn weighted_lambda_unchecked(
    space: &FiniteMetricSpace,
    weights: &WeightVector,
    x: usize,
    y: usize,
) -> BigRational {
    let s: BigRational = space
        .row(x)
        .iter()
        .zip(space.row(y))
        .map(|(a, b)| (weights.gamma(*a as usize) - weights.gamma(*b as usize)).abs())
        .sum();
    s / int(2)
}

/// Which sign convention of the weighted kernel identity matches the
/// definitional value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `D_G = ⟨λ_G⟩_X - ⟨λ_G⟩_Z`.
    SpaceMinusSubset,
    /// `D_G = ⟨λ_G⟩_Z - ⟨λ_G⟩_X`.
    SubsetMinusSpace,
    /// The value is zero, so both conventions hold.
    Both,
    Neither,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::SpaceMinusSubset => "<λ_G>_X - <λ_G>_Z",
            Orientation::SubsetMinusSpace => "<λ_G>_Z - <λ_G>_X",
            Orientation::Both => "either sign (value is zero)",
            Orientation::Neither => "neither sign",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDiscrepancy {
    /// `Σ_t g_t D_t(Z)²`.
    pub definitional: BigRational,
    /// `⟨λ_G⟩_X - ⟨λ_G⟩_Z`.
    pub kernel_difference: BigRational,
    pub orientation: Orientation,
}

impl WeightedDiscrepancy {
    pub fn value(&self) -> &BigRational {
        &self.definitional
    }
}

/// The weighted discrepancy from its definition, together with the kernel
/// difference and the sign convention that reproduces it.
pub fn weighted_discrepancy(
    space: &FiniteMetricSpace,
    subset: &[usize],
    weights: &WeightVector,
) -> Result<WeightedDiscrepancy> {
    check_weights(space, weights)?;
    let definitional: BigRational = radius_discrepancies(space, subset)?
        .iter()
        .zip(weights.g())
        .map(|(d, g)| d * g)
        .sum();
    let p = space.points;
    let whole: BigRational = (0..p)
        .into_par_iter()
        .map(|x| {
            (0..p)
                .map(|y| weighted_lambda_unchecked(space, weights, x, y))
                .sum::<BigRational>()
        })
        .sum::<BigRational>()
        / int(p * p);
    let part: BigRational = subset
        .iter()
        .flat_map(|&x| subset.iter().map(move |&y| (x, y)))
        .map(|(x, y)| weighted_lambda_unchecked(space, weights, x, y))
        .sum::<BigRational>()
        / int(subset.len() * subset.len());
    let kernel_difference = whole - part;
    let orientation = match (
        kernel_difference == definitional,
        -&kernel_difference == definitional,
    ) {
        (true, true) => Orientation::Both,
        (true, false) => Orientation::SpaceMinusSubset,
        (false, true) => Orientation::SubsetMinusSpace,
        (false, false) => Orientation::Neither,
    };
    Ok(WeightedDiscrepancy {
        definitional,
        kernel_difference,
        orientation,
    })
}

fn check_cube_weights(n: usize, weights: &WeightVector) -> Result<()> {
    if n == 0 || weights.n() != n {
        return domain(format!(
            "need n ≥ 1 weights g_0..g_n, got n={n}, {} weights",
            weights.n() + 1
        ));
    }
    Ok(())
}

/// `λ_G(w) = Σ_i C(n,i) γ(i) - Σ_t g_t μ_t(w)` on `{0,1}^n`.
pub fn weighted_lambda_cube(n: usize, weights: &WeightVector, w: usize) -> Result<BigRational> {
    check_cube_weights(n, weights)?;
    let total: BigRational = (0..=n).map(|i| int(binom_u(n, i)) * weights.gamma(i)).sum();
    let mut meets = BigRational::zero();
    for (t, g) in weights.g().iter().enumerate() {
        meets += g * int(mu_t(n, w, t)?);
    }
    Ok(total - meets)
}

/// Krawtchouk coefficients of `λ_G` on `{0,1}^n`: entry 0 is `⟨λ_G⟩_X` and,
/// for `k ≥ 1`, `-2^{-n} Σ_{t<n} g_t (K_t^{(n-1)}(k-1))²`.
pub fn weighted_lambda_hat(n: usize, weights: &WeightVector) -> Result<Vec<BigRational>> {
    check_cube_weights(n, weights)?;
    let cube = int(pow2(n));
    let mut average = BigRational::zero();
    for w in 0..=n {
        average += int(binom_u(n, w)) * weighted_lambda_cube(n, weights, w)?;
    }
    let mut hat = vec![average / &cube];
    let columns: Vec<Vec<BigInt>> = (0..n)
        .map(|t| mu_coefficients(n, t))
        .collect::<Result<_>>()?;
    for k in 1..=n {
        let s: BigRational = (0..n)
            .map(|t| &weights.g()[t] * int(columns[t][k].pow(2)))
            .sum();
        hat.push(-s / &cube);
    }
    Ok(hat)
}

/// `2^{-n} Σ_{k≥1} A⊥_k Σ_{t<n} g_t (K_t^{(n-1)}(k-1))²`.
pub fn weighted_dual_discrepancy(
    dual: &DualDistribution,
    weights: &WeightVector,
) -> Result<BigRational> {
    let n = dual.n();
    let hat = weighted_lambda_hat(n, weights)?;
    Ok((1..=n).map(|k| -(dual.get(k) * &hat[k])).sum())
}

/// Intersection numbers `p_{ij}^k` of a metric association scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    n: usize,
    points: usize,
    valencies: Vec<u64>,
    // p[(i * (n+1) + j) * (n+1) + k]
    p: Vec<u64>,
}

impl AssociationScheme {
    pub fn classes(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        let m = self.n + 1;
        self.p[(i * m + j) * m + k]
    }

    /// `μ_t` at distance `w`: `Σ_{i,j ≤ t} p_{ij}^w`.
    pub fn mu(&self, t: usize, w: usize) -> u64 {
        (0..=t)
            .flat_map(|i| (0..=t).map(move |j| (i, j)))
            .map(|(i, j)| self.p(i, j, w))
            .sum()
    }
}

fn intersection_counts(space: &FiniteMetricSpace, x: usize, y: usize) -> Vec<u64> {
    let m = space.diameter + 1;
    let mut counts = vec![0u64; m * m];
    for (a, b) in space.row(x).iter().zip(space.row(y)) {
        counts[*a as usize * m + *b as usize] += 1;
    }
    counts
}

/// Computes intersection numbers by counting, after checking that
/// `|{u : d(x,u)=i, d(y,u)=j}|` depends only on `d(x,y)`.
pub fn scheme_from_space(space: &FiniteMetricSpace) -> Result<AssociationScheme> {
    let n = space.diameter;
    let m = n + 1;
    let pts = space.points;
    let mut reps: Vec<Option<(usize, usize)>> = vec![None; m];
    for x in 0..pts {
        for y in 0..pts {
            reps[space.d(x, y)].get_or_insert((x, y));
        }
    }
    let tables: Vec<Option<Vec<u64>>> = reps
        .iter()
        .map(|r| r.map(|(x, y)| intersection_counts(space, x, y)))
        .collect();
    let witness = (0..pts * pts).into_par_iter().find_map_first(|idx| {
        let (x, y) = (idx / pts, idx % pts);
        let k = space.d(x, y);
        let here = intersection_counts(space, x, y);
        let reference = tables[k].as_ref().unwrap();
        here.iter()
            .zip(reference)
            .position(|(a, b)| a != b)
            .map(|pos| (x, y, k, pos / m, pos % m, here[pos], reference[pos]))
    });
    if let Some((x, y, k, i, j, got, want)) = witness {
        let (rx, ry) = reps[k].unwrap();
        return invalid(format!(
            "not distance-regular: points ({x},{y}) at distance {k} have {got} points u with d(x,u)={i}, d(y,u)={j}, but ({rx},{ry}) have {want}"
        ));
    }
    let mut p = vec![0u64; m * m * m];
    for k in 0..m {
        if let Some(t) = &tables[k] {
            for i in 0..m {
                for j in 0..m {
                    p[(i * m + j) * m + k] = t[i * m + j];
                }
            }
        }
    }
    let valencies = (0..m).map(|i| p[(i * m + i) * m]).collect();
    Ok(AssociationScheme {
        n,
        points: pts,
        valencies,
        p,
    })
}

/// `A_k = (1/N) |{(z, z') ∈ Z² : d(z, z') = k}|`.
pub fn class_distribution(space: &FiniteMetricSpace, subset: &[usize]) -> Result<Vec<BigRational>> {
    check_subset(space, subset)?;
    let mut counts = vec![0u64; space.diameter + 1];
    for &x in subset {
        for &y in subset {
            counts[space.d(x, y)] += 1;
        }
    }
    Ok(counts
        .into_iter()
        .map(|c| BigRational::new(BigInt::from(c), BigInt::from(subset.len())))
        .collect())
}

/// `(1/2)[ |X|^{-1} Σ_{i,j,k} n_k p_{ij}^k |i-j|  -  N^{-1} Σ_{k≥1} A_k Σ_{i,j} p_{ij}^k |i-j| ]`.
pub fn scheme_discrepancy(
    scheme: &AssociationScheme,
    classes: &[BigRational],
    size: usize,
) -> Result<BigRational> {
    let n = scheme.n;
    if classes.len() != n + 1 || size == 0 {
        return domain(format!("expected {} class values and N ≥ 1", n + 1));
    }
    let spread = |k: usize| -> u64 {
        (0..=n)
            .flat_map(|i| (0..=n).map(move |j| (i, j)))
            .map(|(i, j)| scheme.p(i, j, k) * i.abs_diff(j) as u64)
            .sum()
    };
    let whole: u64 = (0..=n).map(|k| scheme.valencies[k] * spread(k)).sum();
    let part: BigRational = (1..=n).map(|k| &classes[k] * int(spread(k))).sum();
    Ok(
        (BigRational::new(BigInt::from(whole), BigInt::from(scheme.points)) - part / int(size))
            / int(2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{distance_distribution, dual_of, hamming_code, BinaryCode};
    use crate::combinatorics::rat;
    use crate::discrepancy::discrepancy_spectrum;
    use crate::kernels::lambda_eval;

    #[test]
    fn space_ids() {
        assert_eq!(space_from_id("cycle:6").unwrap(), cycle(6).unwrap());
        assert_eq!(space_from_id("johnson:5:2").unwrap().points(), 10);
        assert!(matches!(space_from_id("path:4"), Err(Error::Validation(_))));
        assert!(space_from_id("torus:3").is_err());
        assert!(space_from_id("cube:x").is_err());
    }

    #[test]
    fn load_and_validate() {
        let cube = hamming_cube(3).unwrap();
        let again = load_space(&format!("# cube\n{}", cube.to_text())).unwrap();
        assert_eq!(again, cube);
        assert!(path(3).is_err());
        let err = load_space("3 2\n0 1 2\n1 0 1\n2 1 0\n").unwrap_err();
        assert!(
            matches!(err, Error::Validation(ref m) if m.contains("|B(0,1)| = 2") && m.contains("|B(1,1)| = 3"))
        );
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.diameter(), 3);
        assert!(matches!(
            load_space("2 1\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            load_space("2 1\n0 1\n2 0\n"),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            load_space("2 2\n0 1\n1 0\n"),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            FiniteMetricSpace::new(3, vec![0, 1, 5, 1, 0, 1, 5, 1, 0]),
            Err(Error::Validation(ref m)) if m.contains("triangle")
        ));
    }

    #[test]
    fn lambda_and_theta() {
        let cube = hamming_cube(3).unwrap();
        assert!(general_lambda(&cube, 5, 5).unwrap().is_zero());
        assert_eq!(
            general_lambda(&cube, 0, 3).unwrap(),
            int(lambda_eval(3, 2).unwrap())
        );
        for space in [
            cube,
            cycle(6).unwrap(),
            cycle(7).unwrap(),
            johnson(5, 2).unwrap(),
        ] {
            for x in 0..space.points() {
                for y in 0..space.points() {
                    assert_eq!(
                        theta_metric(&space, x, y).unwrap(),
                        general_lambda(&space, x, y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn general_discrepancy_agrees_with_definition() {
        let c6 = cycle(6).unwrap();
        let g = general_discrepancy(&c6, &[0, 3]).unwrap();
        assert_eq!(g.value(), &definitional_discrepancy(&c6, &[0, 3]).unwrap());
        let all: Vec<usize> = (0..6).collect();
        assert!(general_discrepancy(&c6, &all).unwrap().value().is_zero());
        assert!(general_discrepancy(&c6, &[6]).is_err());

        let cube = hamming_cube(7).unwrap();
        let h = hamming_code(3).unwrap();
        let idx: Vec<usize> = h.words().unwrap().iter().map(|&w| w as usize).collect();
        assert_eq!(
            general_discrepancy(&cube, &idx).unwrap().value(),
            &rat(35, 32)
        );
    }

    #[test]
    fn weighted_reduces_to_unweighted() {
        let c6 = cycle(6).unwrap();
        let z = [0, 1, 3];
        let w = weighted_discrepancy(&c6, &z, &WeightVector::ones(3)).unwrap();
        assert_eq!(w.value(), general_discrepancy(&c6, &z).unwrap().value());
        assert_eq!(w.orientation, Orientation::SpaceMinusSubset);
        let radii = radius_discrepancies(&c6, &z).unwrap();
        for t in 0..=3 {
            let w = weighted_discrepancy(&c6, &z, &WeightVector::indicator(3, t).unwrap()).unwrap();
            assert_eq!(w.value(), &radii[t]);
        }
        assert!(WeightVector::new(vec![int(1), int(-1)]).is_err());
        let parsed = parse_weights("1 1/2 # tail\n0 3\n").unwrap();
        assert_eq!(parsed.gamma(1), &rat(7, 2));
    }

    #[test]
    fn weighted_cube_kernel_and_dual() {
        let n = 5;
        let cube = hamming_cube(n).unwrap();
        let g = parse_weights("2 0 1/3 5 1 7/2").unwrap();
        for w in 0..=n {
            let y = (1usize << w) - 1;
            assert_eq!(
                weighted_lambda(&cube, &g, 0, y).unwrap(),
                weighted_lambda_cube(n, &g, w).unwrap()
            );
        }
        let code = BinaryCode::from_words(n, vec![0, 3, 12, 21, 30], "t").unwrap();
        let idx: Vec<usize> = code.words().unwrap().iter().map(|&w| w as usize).collect();
        let direct = weighted_discrepancy(&cube, &idx, &g).unwrap();
        let dual = dual_of(&distance_distribution(&code).unwrap()).unwrap();
        assert_eq!(
            &weighted_dual_discrepancy(&dual, &g).unwrap(),
            direct.value()
        );
        let ones = weighted_lambda_hat(n, &WeightVector::ones(n)).unwrap();
        let plain = crate::krawtchouk::lambda_hat(n).unwrap();
        assert_eq!(ones.as_slice(), plain.coeffs());
    }

    #[test]
    fn schemes() {
        for n in 1..=5 {
            let s = scheme_from_space(&hamming_cube(n).unwrap()).unwrap();
            for i in 0..=n {
                for j in 0..=n {
                    for k in 0..=n {
                        let expect = if (i + k) >= j && (i + j + k) % 2 == 0 && i + j >= k {
                            binom_u(k, (i + k - j) / 2) * binom_u(n - k, (i + j - k) / 2)
                        } else {
                            BigInt::zero()
                        };
                        assert_eq!(BigInt::from(s.p(i, j, k)), expect, "n={n} {i} {j} {k}");
                    }
                    for t in 0..=n {
                        assert_eq!(BigInt::from(s.mu(t, i)), mu_t(n, i, t).unwrap());
                    }
                }
            }
        }
        let j52 = johnson(5, 2).unwrap();
        let s = scheme_from_space(&j52).unwrap();
        assert_eq!(s.valencies(), &[1, 6, 3]);
        let z = [0, 4, 7];
        let classes = class_distribution(&j52, &z).unwrap();
        assert_eq!(
            scheme_discrepancy(&s, &classes, 3).unwrap(),
            *general_discrepancy(&j52, &z).unwrap().value()
        );
        let code = hamming_code(3).unwrap();
        let cube = hamming_cube(7).unwrap();
        let idx: Vec<usize> = code.words().unwrap().iter().map(|&w| w as usize).collect();
        let s = scheme_from_space(&cube).unwrap();
        let d = scheme_discrepancy(&s, &class_distribution(&cube, &idx).unwrap(), 16).unwrap();
        assert_eq!(
            d,
            discrepancy_spectrum(&distance_distribution(&code).unwrap())
        );
    }

    #[test]
    fn non_regular_space_is_rejected_with_witness() {
        // circulant C_8(1,2): vertex-transitive but not distance-regular
        let m = 8;
        let space = from_fn(m, |x, y| {
            let d = x.abs_diff(y).min(m - x.abs_diff(y));
            d.div_ceil(2) as u32
        })
        .unwrap();
        let err = scheme_from_space(&space).unwrap_err();
        assert!(matches!(err, Error::Validation(ref msg) if msg.contains("not distance-regular")));
    }
}
