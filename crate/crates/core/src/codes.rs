//! Binary codes: construction, parsing, named families and distance spectra.
//!
//! A word of length `n ≤ 64` is packed into a `u64`; bit `i` holds coordinate
//! `i`, which is the `i`-th character (from the left) in the text format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::combinatorics::pow2;
use crate::error::{domain, Error, Result};
use crate::gf2;
use crate::krawtchouk::macwilliams_forward;

pub const MAX_LENGTH: usize = 64;

/// Linear codes of larger dimension keep only their basis and are enumerated
/// on demand.
pub const MATERIALIZE_DIMENSION: usize = 22;

/// Largest word count accepted for O(N²) pair enumeration.
pub const MAX_PAIRWISE_SIZE: usize = 1 << 16;

const GOLAY23: &str = include_str!("../data/golay23.txt");
const QR17: &str = include_str!("../data/qr17.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    // empty when a large linear code is held by its basis only
    words: Vec<u64>,
    basis: Option<Vec<u64>>,
    multiset: bool,
    label: String,
}

fn check_length(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LENGTH {
        return domain(format!("length must be in 1..={MAX_LENGTH}, got {n}"));
    }
    Ok(())
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BinaryCode {
    /// A set of distinct words; linearity is detected automatically.
    pub fn from_words(n: usize, words: Vec<u64>, label: impl Into<String>) -> Result<Self> {
        Self::build(n, words, false, label.into())
    }

    /// Words with repetitions allowed, as produced by independent sampling.
    pub fn from_multiset(n: usize, words: Vec<u64>, label: impl Into<String>) -> Result<Self> {
        Self::build(n, words, true, label.into())
    }

    fn build(n: usize, words: Vec<u64>, multiset: bool, label: String) -> Result<Self> {
        check_length(n)?;
        if words.is_empty() {
            return domain("a code needs at least one word");
        }
        if let Some(w) = words.iter().find(|&&w| w & !mask(n) != 0) {
            return domain(format!("word {w:#x} does not fit in length {n}"));
        }
        let mut sorted = words.clone();
        sorted.sort_unstable();
        let distinct = sorted.windows(2).all(|p| p[0] != p[1]);
        if !distinct && !multiset {
            let dup = sorted.windows(2).find(|p| p[0] == p[1]).unwrap()[0];
            return Err(Error::Validation(format!(
                "duplicate word {}",
                word_to_string(dup, n)
            )));
        }
        let basis = if distinct && words.len().is_power_of_two() && sorted[0] == 0 {
            let (reduced, _) = gf2::rref(&words, n);
            (1usize << reduced.len() == words.len()).then_some(reduced)
        } else {
            None
        };
        Ok(BinaryCode {
            n,
            words,
            basis,
            multiset,
            label,
        })
    }

    /// The span of `rows`; dependent rows are dropped.
    pub fn from_basis(n: usize, rows: &[u64], label: impl Into<String>) -> Result<Self> {
        check_length(n)?;
        if let Some(w) = rows.iter().find(|&&w| w & !mask(n) != 0) {
            return domain(format!("row {w:#x} does not fit in length {n}"));
        }
        let (basis, _) = gf2::rref(rows, n);
        if basis.len() > 62 {
            return domain(format!("dimension {} is too large", basis.len()));
        }
        let words = if basis.len() <= MATERIALIZE_DIMENSION {
            gf2::span(&basis)
        } else {
            Vec::new()
        };
        Ok(BinaryCode {
            n,
            words,
            basis: Some(basis),
            multiset: false,
            label: label.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        match &self.basis {
            Some(b) if self.words.is_empty() => 1u64 << b.len(),
            _ => self.words.len() as u64,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_linear(&self) -> bool {
        self.basis.is_some()
    }

    /// Reduced basis of a linear code.
    pub fn basis(&self) -> Option<&[u64]> {
        self.basis.as_deref()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.basis.as_ref().map(Vec::len)
    }

    pub fn is_multiset(&self) -> bool {
        self.multiset
    }

    /// The word list, unless the code is a large linear code held by its basis.
    pub fn words(&self) -> Option<&[u64]> {
        (!self.words.is_empty()).then_some(self.words.as_slice())
    }

    /// Visits every word (with multiplicity).
    pub fn for_each_word(&self, mut f: impl FnMut(u64)) {
        match (&self.basis, self.words.is_empty()) {
            (Some(b), true) => gf2::for_each_in_span(b, f),
            _ => self.words.iter().for_each(|&w| f(w)),
        }
    }

    /// The dual code `{x : <x,z> = 0 for all z}` of a linear code.
    pub fn dual_code(&self) -> Result<BinaryCode> {
        let Some(basis) = &self.basis else {
            return domain(format!("{} is not linear", self.label));
        };
        BinaryCode::from_basis(
            self.n,
            &gf2::null_space(basis, self.n),
            format!("dual:{}", self.label),
        )
    }

    /// One word from each coset of a linear code.
    pub fn coset_leaders(&self) -> Option<Vec<u64>> {
        let basis = self.basis.as_ref()?;
        let (_, pivots) = gf2::rref(basis, self.n);
        let complement: Vec<u64> = (0..self.n)
            .filter(|c| !pivots.contains(c))
            .map(|c| 1u64 << c)
            .collect();
        Some(gf2::span(&complement))
    }

    /// One word per line in the parse format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.for_each_word(|w| {
            out.push_str(&word_to_string(w, self.n));
            out.push('\n');
        });
        out
    }
}

pub fn word_to_string(w: u64, n: usize) -> String {
    (0..n)
        .map(|i| if w >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Result of parsing a code file; warnings do not prevent use of the code.
#[derive(Debug, Clone)]
pub struct ParsedCode {
    pub code: BinaryCode,
    pub warnings: Vec<String>,
}

fn parse_rows(text: &str) -> Result<(usize, Vec<(usize, u64)>)> {
    let mut n = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(c) = body.chars().find(|c| *c != '0' && *c != '1') {
            return Err(Error::Parse {
                line,
                message: format!("unexpected character {c:?}"),
            });
        }
        let len = body.len();
        if len > MAX_LENGTH {
            return Err(Error::Parse {
                line,
                message: format!("length {len} exceeds {MAX_LENGTH}"),
            });
        }
        match n {
            None => n = Some(len),
            Some(expected) if expected != len => {
                return Err(Error::Parse {
                    line,
                    message: format!("length {len}, expected {expected}"),
                })
            }
            _ => {}
        }
        let w = body
            .bytes()
            .enumerate()
            .fold(0u64, |acc, (i, b)| acc | (u64::from(b - b'0') << i));
        rows.push((line, w));
    }
    match n {
        Some(n) => Ok((n, rows)),
        None => Err(Error::Parse {
            line: text.lines().count(),
            message: "no words found".into(),
        }),
    }
}

/// Parses one 0/1 word per line. Duplicate words are an error unless
/// `allow_duplicates` is set.
pub fn parse_code(text: &str, allow_duplicates: bool) -> Result<ParsedCode> {
    let (n, rows) = parse_rows(text)?;
    if !allow_duplicates {
        let mut seen = std::collections::HashMap::new();
        for &(line, w) in &rows {
            if let Some(first) = seen.insert(w, line) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate of the word on line {first}"),
                });
            }
        }
    }
    let words = rows.into_iter().map(|(_, w)| w).collect();
    let code = if allow_duplicates {
        BinaryCode::from_multiset(n, words, "file")?
    } else {
        BinaryCode::from_words(n, words, "file")?
    };
    Ok(ParsedCode {
        code,
        warnings: Vec::new(),
    })
}

/// Parses generator rows and returns their span.
pub fn parse_generator(text: &str) -> Result<ParsedCode> {
    let (n, rows) = parse_rows(text)?;
    let rows: Vec<u64> = rows.into_iter().map(|(_, w)| w).collect();
    let code = BinaryCode::from_basis(n, &rows, "generator")?;
    let rank = code.dimension().unwrap_or(0);
    let mut warnings = Vec::new();
    if rank < rows.len() {
        warnings.push(format!(
            "{} generator rows have rank {rank}; code has {} words",
            rows.len(),
            code.size()
        ));
    }
    Ok(ParsedCode { code, warnings })
}

/// Parity-check matrix of the Hamming code: column `j-1` is `j` in binary,
/// most significant bit in row 0.
pub fn hamming_parity_check(m: usize) -> Result<Vec<u64>> {
    if !(2..=6).contains(&m) {
        return domain(format!("Hamming parameter m must be in 2..=6, got {m}"));
    }
    let n = (1usize << m) - 1;
    Ok((0..m)
        .map(|r| {
            (1..=n)
                .filter(|j| j >> (m - 1 - r) & 1 == 1)
                .fold(0u64, |acc, j| acc | 1u64 << (j - 1))
        })
        .collect())
}

/// The `[2^m - 1, 2^m - 1 - m, 3]` Hamming code.
pub fn hamming_code(m: usize) -> Result<BinaryCode> {
    let h = hamming_parity_check(m)?;
    let n = (1usize << m) - 1;
    BinaryCode::from_basis(n, &gf2::null_space(&h, n), format!("hamming:{m}"))
}

/// The `[2^m - 1, m]` simplex code, spanned by the Hamming parity checks.
pub fn simplex_code(m: usize) -> Result<BinaryCode> {
    let h = hamming_parity_check(m)?;
    BinaryCode::from_basis((1 << m) - 1, &h, format!("simplex:{m}"))
}

fn from_data(text: &str, label: &str) -> BinaryCode {
    parse_generator(text)
        .expect("bundled generator matrix parses")
        .code
        .with_label(label)
}

/// The `[23, 12, 7]` Golay code.
pub fn golay23() -> BinaryCode {
    from_data(GOLAY23, "golay23")
}

/// The `[17, 9, 5]` quadratic-residue code.
pub fn qr17() -> BinaryCode {
    from_data(QR17, "qr17")
}

pub fn repetition(n: usize) -> Result<BinaryCode> {
    check_length(n)?;
    BinaryCode::from_basis(n, &[mask(n)], format!("repetition:{n}"))
}

/// Words vanishing on the last `m` coordinates.
pub fn subcube(n: usize, m: usize) -> Result<BinaryCode> {
    check_length(n)?;
    if m >= n || n - m > 62 {
        return domain(format!(
            "subcube needs 0 ≤ m < n and n - m ≤ 62, got n={n}, m={m}"
        ));
    }
    let rows: Vec<u64> = (0..n - m).map(|i| 1u64 << i).collect();
    BinaryCode::from_basis(n, &rows, format!("subcube:{n}:{m}"))
}

pub fn full_cube(n: usize) -> Result<BinaryCode> {
    Ok(subcube(n, 0)?.with_label(format!("cube:{n}")))
}

/// `size` words drawn independently and uniformly, bits taken from successive
/// SplitMix64 outputs, most significant bit first.
pub fn random_code(n: usize, size: usize, seed: u64) -> Result<BinaryCode> {
    check_length(n)?;
    if size == 0 {
        return domain("a code needs at least one word");
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut buf = 0u64;
    let mut left = 0u32;
    let mut words = Vec::with_capacity(size);
    for _ in 0..size {
        let mut w = 0u64;
        for i in 0..n {
            if left == 0 {
                buf = rng.next_u64();
                left = 64;
            }
            left -= 1;
            w |= (buf >> left & 1) << i;
        }
        words.push(w);
    }
    BinaryCode::from_multiset(n, words, format!("random:{n}:{size}:{seed}"))
}

/// Appends an overall parity bit to every word.
pub fn extend_code(code: &BinaryCode) -> Result<BinaryCode> {
    let n = code.n;
    if n >= MAX_LENGTH {
        return domain("cannot extend a code of length 64");
    }
    let ext = |w: u64| w | u64::from(w.count_ones() & 1) << n;
    let label = format!("extend:{}", code.label);
    match (&code.basis, code.words.is_empty()) {
        (Some(b), true) => {
            let rows: Vec<u64> = b.iter().map(|&w| ext(w)).collect();
            BinaryCode::from_basis(n + 1, &rows, label)
        }
        _ => {
            let words = code.words.iter().map(|&w| ext(w)).collect();
            BinaryCode::build(n + 1, words, code.multiset, label)
        }
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, id: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Domain(format!("bad number {s:?} in code id {id:?}")))
}

/// Builds a code from an identifier such as `hamming:3`, `simplex:4`,
/// `golay23`, `qr17`, `repetition:5`, `subcube:6:2`, `cube:4`,
/// `random:10:32:7` or `extend:<id>`.
pub fn code_from_id(id: &str) -> Result<BinaryCode> {
    if let Some(inner) = id.strip_prefix("extend:") {
        return extend_code(&code_from_id(inner)?);
    }
    let parts: Vec<&str> = id.split(':').collect();
    match parts.as_slice() {
        ["golay23"] => Ok(golay23()),
        ["qr17"] => Ok(qr17()),
        ["hamming", m] => hamming_code(parse_num(m, id)?),
        ["simplex", m] => simplex_code(parse_num(m, id)?),
        ["repetition", n] => repetition(parse_num(n, id)?),
        ["cube", n] => full_cube(parse_num(n, id)?),
        ["subcube", n, m] => subcube(parse_num(n, id)?, parse_num(m, id)?),
        ["random", n, size, seed] => random_code(
            parse_num(n, id)?,
            parse_num(size, id)?,
            parse_num(seed, id)?,
        ),
        _ => domain(format!("unknown code id {id:?}")),
    }
}

/// Ordered-pair distance counts: `pairs[w] = N · A_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    n: usize,
    size: u64,
    pairs: Vec<u128>,
}

impl DistanceDistribution {
    /// Validates `Σ pairs = N²` and `pairs[0] ≥ N`.
    pub fn from_pair_counts(n: usize, size: u64, pairs: Vec<u128>) -> Result<Self> {
        if pairs.len() != n + 1 {
            return domain(format!("expected {} entries, got {}", n + 1, pairs.len()));
        }
        if size == 0 {
            return domain("code size must be positive");
        }
        let total: u128 = pairs.iter().sum();
        if total != u128::from(size) * u128::from(size) || pairs[0] < u128::from(size) {
            return Err(Error::Validation(format!(
                "pair counts {pairs:?} are not a distance distribution of {size} words"
            )));
        }
        Ok(DistanceDistribution { n, size, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn pair_counts(&self) -> &[u128] {
        &self.pairs
    }

    /// `A_w`.
    pub fn a(&self, w: usize) -> BigRational {
        BigRational::new(BigInt::from(self.pairs[w]), BigInt::from(self.size))
    }

    pub fn values(&self) -> Vec<BigRational> {
        (0..=self.n).map(|w| self.a(w)).collect()
    }

    /// Smallest nonzero distance that occurs, if any.
    pub fn minimum_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&w| self.pairs[w] != 0)
    }
}

/// The MacWilliams transform `A⊥` of a distance distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct DualDistribution {
    n: usize,
    values: Vec<BigRational>,
}

impl DualDistribution {
    /// Validates `A⊥_0 = 1`, nonnegativity and `Σ A⊥ = 2^n A_0 / N`.
    pub fn new(values: Vec<BigRational>, size: &BigRational, a0: &BigRational) -> Result<Self> {
        if values.is_empty() {
            return domain("empty dual distribution");
        }
        let n = values.len() - 1;
        if !values[0].is_one() {
            return Err(Error::Validation(format!("A⊥_0 = {} ≠ 1", values[0])));
        }
        if let Some(k) = values.iter().position(|v| v.is_negative()) {
            return Err(Error::Validation(format!("A⊥_{k} = {} < 0", values[k])));
        }
        let total: BigRational = values.iter().sum();
        if &total * size != BigRational::from_integer(pow2(n)) * a0 {
            return Err(Error::Validation(format!(
                "Σ A⊥ = {total} ≠ 2^{n}·{a0}/{size}"
            )));
        }
        Ok(DualDistribution { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &BigRational {
        &self.values[k]
    }
}

/// Weight counts of every word, for codes where distance and weight
/// distributions coincide.
fn weight_counts(code: &BinaryCode) -> Vec<u128> {
    let mut counts = vec![0u128; code.n + 1];
    code.for_each_word(|w| counts[w.count_ones() as usize] += 1);
    counts
}

/// Counts ordered pairs of words at each distance, `O(N²)`.
pub fn pairwise_distance_distribution(code: &BinaryCode) -> Result<DistanceDistribution> {
    let Some(words) = code.words() else {
        return Err(Error::Resource {
            what: "pairwise distance count",
            requested: code.size() as usize,
            limit: MAX_PAIRWISE_SIZE,
        });
    };
    if words.len() > MAX_PAIRWISE_SIZE {
        return Err(Error::Resource {
            what: "pairwise distance count",
            requested: words.len(),
            limit: MAX_PAIRWISE_SIZE,
        });
    }
    let n = code.n;
    let pairs = words
        .par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, &x| {
                for &y in words {
                    acc[(x ^ y).count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(s, v)| *s += v);
                a
            },
        );
    DistanceDistribution::from_pair_counts(
        n,
        code.size(),
        pairs.into_iter().map(u128::from).collect(),
    )
}

/// The distance distribution. Linear codes use weight counting (equal to the
/// distance distribution by translation invariance); others count pairs.
pub fn distance_distribution(code: &BinaryCode) -> Result<DistanceDistribution> {
    if code.is_linear() {
        let size = u128::from(code.size());
        let pairs = weight_counts(code).into_iter().map(|c| c * size).collect();
        DistanceDistribution::from_pair_counts(code.n, code.size(), pairs)
    } else {
        pairwise_distance_distribution(code)
    }
}

/// `A⊥` from the MacWilliams transform of `A`.
pub fn dual_of(dist: &DistanceDistribution) -> Result<DualDistribution> {
    let size = BigRational::from_integer(BigInt::from(dist.size));
    let values = macwilliams_forward(&dist.values(), &size)?;
    DualDistribution::new(values, &size, &dist.a(0))
}

/// `A⊥(Z)`. For a linear code whose dual has at most `2^22` words the result
/// is also checked against the weight distribution of the dual code.
pub fn dual_distribution(code: &BinaryCode) -> Result<DualDistribution> {
    let dual = dual_of(&distance_distribution(code)?)?;
    if let Some(k) = code.dimension() {
        if code.n - k <= MATERIALIZE_DIMENSION {
            let direct = weight_counts(&code.dual_code()?);
            let agree = direct
                .iter()
                .zip(dual.values())
                .all(|(c, v)| v.is_integer() && v.numer() == &BigInt::from(*c));
            if !agree {
                return Err(Error::InternalMismatch(format!(
                    "MacWilliams transform of {} disagrees with its dual code",
                    code.label
                )));
            }
        }
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binom_u;

    fn counts(d: &DistanceDistribution) -> Vec<u128> {
        let n = u128::from(d.size());
        d.pair_counts().iter().map(|c| c / n).collect()
    }

    #[test]
    fn parse_examples() {
        let c = parse_code("0\n1\n", false).unwrap().code;
        assert_eq!((c.n(), c.size()), (1, 2));
        assert!(c.is_linear());
        assert_eq!(c.words().unwrap(), &[0, 1]);

        let g = parse_generator("1110000\n0011100\n0000111\n").unwrap();
        assert!(g.warnings.is_empty());
        let d = distance_distribution(&g.code).unwrap();
        assert_eq!(counts(&d), vec![1, 0, 0, 3, 2, 1, 1, 0]);

        let g = parse_generator("# rows\n1100\n1100 # again\n\n0011\n").unwrap();
        assert_eq!(g.code.size(), 4);
        assert_eq!(g.warnings.len(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_code("01\n# c\n011\n", false).unwrap_err(),
            Error::Parse {
                line: 3,
                message: "length 3, expected 2".into()
            }
        );
        assert!(matches!(
            parse_code("01\n0x\n", false),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_code("01\n10\n01\n", false),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_code("# nothing\n", false),
            Err(Error::Parse { .. })
        ));
        let m = parse_code("01\n01\n", true).unwrap().code;
        assert!(m.is_multiset());
        assert!(!m.is_linear());
        assert_eq!(counts(&distance_distribution(&m).unwrap()), vec![2, 0, 0]);
    }

    #[test]
    fn text_round_trip() {
        let c = hamming_code(3).unwrap();
        let back = parse_code(&c.to_text(), false).unwrap().code;
        assert_eq!(back.words(), c.words());
        assert!(back.is_linear());
    }

    #[test]
    fn hamming_and_simplex() {
        for m in 2..=4 {
            let h = hamming_code(m).unwrap();
            let n = (1 << m) - 1;
            assert_eq!((h.n(), h.size()), (n, 1u64 << (n - m)));
            assert_eq!(
                distance_distribution(&h).unwrap().minimum_distance(),
                Some(3)
            );
            let s = simplex_code(m).unwrap();
            let d = distance_distribution(&s).unwrap();
            let c = counts(&d);
            assert_eq!(c[n.div_ceil(2)], (1 << m) - 1);
            assert_eq!(c.iter().sum::<u128>(), 1 << m);
        }
        let dual = dual_distribution(&hamming_code(3).unwrap()).unwrap();
        assert_eq!(*dual.get(4), BigRational::from_integer(7.into()));
        assert!(hamming_code(1).is_err());
    }

    #[test]
    fn large_hamming_is_held_by_basis() {
        let h = hamming_code(5).unwrap();
        assert!(h.words().is_none());
        assert_eq!(h.size(), 1 << 26);
        let d = dual_distribution(&h).unwrap();
        assert_eq!(*d.get(16), BigRational::from_integer(31.into()));
        assert!(pairwise_distance_distribution(&h).is_err());
    }

    #[test]
    fn golay_and_qr() {
        let g = golay23();
        assert_eq!((g.n(), g.size()), (23, 4096));
        let c = counts(&pairwise_distance_distribution(&g).unwrap());
        assert_eq!(c[7], 253);
        assert_eq!(c[8], 506);
        assert_eq!(c[11], 1288);
        assert_eq!(c[23], 1);
        let q = qr17();
        assert_eq!((q.n(), q.size()), (17, 512));
        assert_eq!(
            distance_distribution(&q).unwrap().minimum_distance(),
            Some(5)
        );
    }

    #[test]
    fn small_families() {
        let r = repetition(5).unwrap();
        assert_eq!(
            counts(&distance_distribution(&r).unwrap()),
            vec![1, 0, 0, 0, 0, 1]
        );
        let cube = full_cube(6).unwrap();
        let c = counts(&distance_distribution(&cube).unwrap());
        for w in 0..=6 {
            assert_eq!(BigInt::from(c[w]), binom_u(6, w));
        }
        let s = subcube(5, 2).unwrap();
        assert_eq!(s.size(), 8);
        assert!(s.words().unwrap().iter().all(|w| w >> 3 == 0));
        assert!(subcube(3, 3).is_err());
    }

    #[test]
    fn random_codes_are_reproducible() {
        let a = random_code(10, 32, 7).unwrap();
        assert_eq!(a, random_code(10, 32, 7).unwrap());
        assert_ne!(a.words(), random_code(10, 32, 8).unwrap().words());
        assert_eq!(random_code(5, 1, 3).unwrap().size(), 1);
        let mut rng = SplitMix64::seed_from_u64(0);
        let first = rng.next_u64();
        let w = random_code(64, 1, 0).unwrap().words().unwrap()[0];
        let expect = (0..64).fold(0u64, |acc, i| acc | (first >> (63 - i) & 1) << i);
        assert_eq!(w, expect);
        // words straddle output boundaries
        let two = random_code(40, 2, 0).unwrap();
        let second = rng.next_u64();
        let w1 = two.words().unwrap()[1];
        for i in 0..40 {
            let s = 40 + i;
            let bit = if s < 64 {
                first >> (63 - s) & 1
            } else {
                second >> (127 - s) & 1
            };
            assert_eq!(w1 >> i & 1, bit);
        }
    }

    #[test]
    fn extension() {
        let e = extend_code(&repetition(3).unwrap()).unwrap();
        let mut w = e.words().unwrap().to_vec();
        w.sort_unstable();
        assert_eq!(w, vec![0, 0b1111]);
        let h = hamming_code(3).unwrap();
        let a = counts(&distance_distribution(&h).unwrap());
        let ext = extend_code(&h).unwrap();
        assert!(ext.is_linear());
        let b = counts(&distance_distribution(&ext).unwrap());
        for j in 1..=4 {
            assert_eq!(b[2 * j], a[2 * j - 1] + a.get(2 * j).copied().unwrap_or(0));
            assert_eq!(b[2 * j - 1], 0);
        }
        let big = extend_code(&hamming_code(5).unwrap()).unwrap();
        assert_eq!((big.n(), big.size()), (32, 1 << 26));
    }

    #[test]
    fn ids() {
        assert_eq!(code_from_id("hamming:3").unwrap().size(), 16);
        assert_eq!(code_from_id("extend:golay23").unwrap().n(), 24);
        assert_eq!(code_from_id("subcube:6:2").unwrap().size(), 16);
        assert_eq!(code_from_id("random:8:5:1").unwrap().size(), 5);
        assert!(code_from_id("nope").is_err());
        assert!(code_from_id("hamming:x").is_err());
    }

    #[test]
    fn dual_code_matches_macwilliams() {
        for id in [
            "hamming:3",
            "hamming:4",
            "simplex:3",
            "golay23",
            "qr17",
            "extend:hamming:3",
        ] {
            let c = code_from_id(id).unwrap();
            let d = dual_distribution(&c).unwrap();
            let direct = distance_distribution(&c.dual_code().unwrap()).unwrap();
            assert_eq!(d.values(), direct.values().as_slice(), "{id}");
        }
    }

    #[test]
    fn linear_distance_equals_weight_distribution() {
        for id in ["hamming:3", "simplex:4", "golay23", "qr17", "subcube:7:3"] {
            let c = code_from_id(id).unwrap();
            assert_eq!(
                distance_distribution(&c).unwrap(),
                pairwise_distance_distribution(&c).unwrap(),
                "{id}"
            );
        }
    }
}
