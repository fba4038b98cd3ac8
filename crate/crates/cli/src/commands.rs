//! One function per subcommand. Each returns what to print and the exit code.

use std::fmt;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use quadisc::codes::{code_from_id, parse_code, parse_generator, BinaryCode};
use quadisc::combinatorics::{binom_u, pow2};
use quadisc::discrepancy::{analyze, avg_distance, expected_discrepancy, hamming_row};
use quadisc::display;
use quadisc::identities::run_suite;
use quadisc::kernels::{lambda_average, lambda_eval};
use quadisc::krawtchouk::{lambda_hat, KrawtchoukTable};
use quadisc::lp_bounds::{
    binomial_moment_coeffs, certify_minimizer, constant_certificate, hamming_type_certificate,
    optimal_certificate, primal_discrepancy_lp, two_term_certificate, CertificateJson,
    DualCertificate,
};
use quadisc::metric_space::{
    class_distribution, general_discrepancy, load_space, parse_weights, radius_discrepancies,
    scheme_discrepancy, scheme_from_space, space_from_id, weighted_discrepancy, FiniteMetricSpace,
};
use quadisc::{Error, Rational};

use crate::output::{Format, Report, Table};
use crate::{BoundArgs, Cli, Command, DiscArgs, RandomArgs, SpaceArgs, TableArgs, TableKind};

pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_IDENTITY: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

const DEFAULT_DIGITS: usize = 6;
const TABLE_DIGITS: usize = 3;
const TABLE_MAX_LENGTH: usize = 128;

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Resource { .. }) => EXIT_RESOURCE,
            CliError::Lib(Error::InternalMismatch(_)) => EXIT_IDENTITY,
            _ => EXIT_VALIDATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: Vec::new(),
            code: 0,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let digits = |default: usize| cli.digits.map_or(default, |d| d as usize);
    let f = cli.format;
    match &cli.command {
        Command::Disc(a) => disc(a, f, digits(DEFAULT_DIGITS)),
        Command::Bound(a) => bound(a, f, digits(DEFAULT_DIGITS)),
        Command::Table(a) => table(a, f, digits(TABLE_DIGITS)),
        Command::Verify { n_max } => verify(*n_max, f),
        Command::Random(a) => random(a, f, digits(DEFAULT_DIGITS)),
        Command::Space(a) => space(a, f, digits(DEFAULT_DIGITS)),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_code(a: &DiscArgs) -> CliResult<(BinaryCode, Vec<String>)> {
    if let Some(id) = &a.input.code {
        return Ok((code_from_id(id)?, Vec::new()));
    }
    let path = a.input.file.as_ref().expect("clap enforces one input");
    let text = read(path)?;
    let parsed = if a.generator {
        parse_generator(&text)?
    } else {
        parse_code(&text, a.multiset)?
    };
    let label = path.display().to_string();
    Ok((parsed.code.with_label(label), parsed.warnings))
}

fn structure(code: &BinaryCode) -> String {
    match code.dimension() {
        Some(k) => format!("linear [{}, {k}]", code.n()),
        None if code.is_multiset() => "multiset".to_string(),
        None => "nonlinear".to_string(),
    }
}

fn disc(a: &DiscArgs, format: Format, digits: usize) -> CliResult<Outcome> {
    let (code, warnings) = load_code(a)?;
    let analysis = analyze(&code, a.brute.then_some(a.oracle_limit))?;
    let n = code.n();
    let mut rep = Report::new(digits);
    rep.text("code", code.label())
        .count("n", n as u64)
        .count("N", code.size())
        .text("structure", structure(&code));
    if let Some(d) = analysis.distance.minimum_distance() {
        rep.count("minimum distance", d as u64);
    }
    rep.exacts("distance distribution", analysis.distance.values())
        .exacts("dual distribution", analysis.dual.values().to_vec())
        .exact("average distance", &avg_distance(&analysis.distance))
        .exact("D", analysis.value());
    let methods: Vec<String> = analysis
        .reports
        .iter()
        .map(|r| r.method.to_string())
        .collect();
    rep.text("agreeing methods", methods.join(", ")).exact(
        "E D (random, same N)",
        &expected_discrepancy(n, code.size())?,
    );
    if a.lp {
        let m = certify_minimizer(&code)?;
        rep.exact("LP bound", &m.lp.discrepancy)
            .flag("LP optimal", m.optimal);
    }
    Ok(Outcome {
        stdout: rep.render(format),
        stderr: warnings
            .into_iter()
            .map(|w| format!("warning: {w}"))
            .collect(),
        code: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Lp,
    Constant,
    TwoTerm,
    HammingType,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Lp => "lp",
            Kind::Constant => "constant",
            Kind::TwoTerm => "two-term",
            Kind::HammingType => "hamming-type",
        }
    }

    fn certificate(self, n: usize, size: u64) -> CliResult<DualCertificate> {
        Ok(match self {
            Kind::Lp => optimal_certificate(n, size)?,
            Kind::Constant => constant_certificate(n, size)?,
            Kind::TwoTerm => two_term_certificate(n, size)?,
            Kind::HammingType => hamming_type_certificate(n, size)?,
        })
    }
}

fn bound(a: &BoundArgs, format: Format, digits: usize) -> CliResult<Outcome> {
    let (n, size) = (a.n, a.size);
    if let Some(path) = &a.check_cert {
        return check_cert(path, n, size, format, digits);
    }
    let chosen: Vec<Kind> = [
        (a.lp, Kind::Lp),
        (a.constant, Kind::Constant),
        (a.two_term, Kind::TwoTerm),
        (a.hamming_type, Kind::HammingType),
    ]
    .into_iter()
    .filter_map(|(on, k)| on.then_some(k))
    .collect();
    if a.emit_cert.is_some() && chosen.len() != 1 {
        return Err(CliError::Usage(
            "--emit-cert needs exactly one of --lp, --constant, --two-term, --hamming-type".into(),
        ));
    }
    let kinds = if chosen.is_empty() {
        let mut all = vec![Kind::Lp, Kind::Constant];
        if n % 2 == 1 {
            all.extend([Kind::TwoTerm, Kind::HammingType]);
        }
        all
    } else {
        chosen
    };

    let mut rep = Report::new(digits);
    rep.count("n", n as u64).count("N", size);
    rep.exact("Λ_n", &lambda_average(n));
    let mut emitted = None;
    for kind in kinds {
        let p = kind.name();
        if kind == Kind::Lp {
            let lp = primal_discrepancy_lp(n, size)?;
            rep.exact(format!("{p}.energy"), &lp.energy)
                .exact(format!("{p}.discrepancy"), &lp.discrepancy)
                .exacts(format!("{p}.distribution"), lp.distribution.clone())
                .count(format!("{p}.pivots"), lp.result.log.len() as u64);
        } else {
            let c = kind.certificate(n, size)?;
            rep.exact(format!("{p}.energy"), &c.bound)
                .exact(format!("{p}.discrepancy"), &c.discrepancy_bound())
                .flag(format!("{p}.feasible"), c.feasible);
            if !c.feasible {
                rep.text(format!("{p}.violations"), c.violations.join("; "));
            }
        }
        if let Some(path) = &a.emit_cert {
            let c = kind.certificate(n, size)?;
            let text = serde_json::to_string_pretty(&c.to_json()).expect("json") + "\n";
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            emitted = Some(path.display().to_string());
        }
    }
    if let Some(path) = emitted {
        rep.text("certificate", path);
    }
    Ok(Outcome::ok(rep.render(format)))
}

fn check_cert(
    path: &Path,
    n: usize,
    size: u64,
    format: Format,
    digits: usize,
) -> CliResult<Outcome> {
    let cert: CertificateJson = serde_json::from_str(&read(path)?).map_err(|e| {
        CliError::Lib(Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    })?;
    if cert.n != n {
        return Err(CliError::Lib(Error::Validation(format!(
            "certificate is for n = {}, not {n}",
            cert.n
        ))));
    }
    let c = cert.check(size)?;
    let mut rep = Report::new(digits);
    rep.count("n", n as u64)
        .count("N", size)
        .flag("feasible", c.feasible)
        .exact("energy", &c.bound)
        .exact("discrepancy", &c.discrepancy_bound());
    let mut out = Outcome::ok(rep.render(format));
    if !c.feasible {
        out.stderr = c.violations;
        out.code = EXIT_VALIDATION;
    }
    Ok(out)
}

fn require_n(a: &TableArgs) -> CliResult<usize> {
    match a.n {
        Some(n) if (1..=TABLE_MAX_LENGTH).contains(&n) => Ok(n),
        Some(n) => Err(CliError::Usage(format!(
            "n must be in 1..={TABLE_MAX_LENGTH}, got {n}"
        ))),
        None => Err(CliError::Usage("this table needs a length n".into())),
    }
}

fn table(a: &TableArgs, format: Format, digits: usize) -> CliResult<Outcome> {
    let dec = |r: &Rational| display::to_fixed(r, digits);
    let t = match a.which {
        TableKind::Hamming => {
            let mut headers = vec!["family", "m", "n", "N", "D", "E[D]"];
            if a.exact {
                headers.extend(["D exact", "E[D] exact"]);
            }
            let mut t = Table::new(headers);
            let rows = (4..=10).map(hamming_row).collect::<Result<Vec<_>, _>>()?;
            for r in &rows {
                let mut cells = vec![
                    "hamming".into(),
                    r.m.to_string(),
                    r.n.to_string(),
                    format!("2^{}", r.n - r.m),
                    dec(&r.hamming),
                    dec(&r.hamming_expected),
                ];
                if a.exact {
                    cells.extend([
                        display::exact(&r.hamming),
                        display::exact(&r.hamming_expected),
                    ]);
                }
                t.row(cells);
            }
            for r in &rows {
                let (d, e) = (r.hadamard_scaled(), r.hadamard_expected_scaled());
                let mut cells = vec![
                    "hadamard (x 2^-n)".into(),
                    r.m.to_string(),
                    r.n.to_string(),
                    format!("2^{}", r.m),
                    dec(&d),
                    dec(&e),
                ];
                if a.exact {
                    cells.extend([display::exact(&d), display::exact(&e)]);
                }
                t.row(cells);
            }
            t
        }
        TableKind::Lambda => {
            let n = require_n(a)?;
            let mut t = Table::new(["w", "C(n,w)", "lambda"]);
            for w in 0..=n {
                t.row(vec![
                    w.to_string(),
                    binom_u(n, w).to_string(),
                    lambda_eval(n, w)?.to_string(),
                ]);
            }
            t
        }
        TableKind::Krawtchouk => {
            let n = require_n(a)?;
            let k = KrawtchoukTable::new(n);
            let mut headers = vec!["k".to_string()];
            headers.extend((0..=n).map(|x| format!("x={x}")));
            let mut t = Table::new(headers);
            for i in 0..=n {
                let mut cells = vec![i.to_string()];
                cells.extend(k.row(i).iter().map(BigInt::to_string));
                t.row(cells);
            }
            t
        }
        TableKind::LambdaHat => {
            let n = require_n(a)?;
            let hat = lambda_hat(n)?;
            let mut t = Table::new(["k", "exact", "decimal"]);
            for (k, c) in hat.coeffs().iter().enumerate() {
                t.row(vec![k.to_string(), display::exact(c), dec(c)]);
            }
            t
        }
        TableKind::Moments => {
            let n = require_n(a)?;
            let mut t = Table::new(["j", "a_j", "a_j / 2^(n-1)"]);
            for (j, c) in binomial_moment_coeffs(n, n)?.iter().enumerate() {
                let scaled = Rational::new(c.clone(), pow2(n - 1));
                t.row(vec![j.to_string(), c.to_string(), dec(&scaled)]);
            }
            t
        }
    };
    Ok(Outcome::ok(t.render(format)))
}

fn verify(n_max: usize, format: Format) -> CliResult<Outcome> {
    let report = run_suite(n_max)?;
    let mut t = Table::new(["identity", "checks", "failed"]);
    for (name, checks, failed) in report.counts() {
        t.row(vec![
            name.to_string(),
            checks.to_string(),
            failed.to_string(),
        ]);
    }
    let failures: Vec<String> = report.failures().iter().map(|c| c.to_string()).collect();
    let mut out = Outcome::ok(t.render(format));
    if !failures.is_empty() {
        out.stderr = failures;
        out.code = EXIT_IDENTITY;
    }
    Ok(out)
}

fn random(a: &RandomArgs, format: Format, digits: usize) -> CliResult<Outcome> {
    let mc = quadisc::discrepancy::monte_carlo(a.n, a.size, a.trials as usize, a.seed)?;
    if a.values {
        let mut t = Table::new(["trial", "seed", "exact", "decimal"]);
        for (i, v) in mc.values.iter().enumerate() {
            t.row(vec![
                i.to_string(),
                a.seed.wrapping_add(i as u64).to_string(),
                display::exact(v),
                display::to_fixed(v, digits),
            ]);
        }
        return Ok(Outcome::ok(t.render(format)));
    }
    let mut rep = Report::new(digits);
    rep.count("n", a.n as u64)
        .count("N", a.size)
        .count("trials", a.trials)
        .count("seed", a.seed)
        .exact("mean", &mc.mean)
        .exact("expected", &mc.expected)
        .float("standard error", mc.standard_error())
        .flag("mean within 3 SE", mc.mean_within(3.0))
        .exact("sample variance", &mc.variance)
        .exact("exact variance", &mc.exact_variance)
        .exact("variance bound", &mc.variance_bound)
        .flag("variance below bound", mc.variance <= mc.variance_bound);
    Ok(Outcome::ok(rep.render(format)))
}

fn parse_subset(text: &str, points: usize) -> CliResult<Vec<usize>> {
    let subset = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad point index {s:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if let Some(z) = subset.iter().find(|&&z| z >= points) {
        return Err(CliError::Usage(format!(
            "point {z} is not in a space of {points} points"
        )));
    }
    Ok(subset)
}

fn subset_from_code(id: &str, space: &FiniteMetricSpace) -> CliResult<Vec<usize>> {
    let code = code_from_id(id)?;
    if code.n() >= usize::BITS as usize || space.points() != 1usize << code.n() {
        return Err(CliError::Lib(Error::Validation(format!(
            "{id} has length {} but the space has {} points",
            code.n(),
            space.points()
        ))));
    }
    let mut subset = Vec::new();
    code.for_each_word(|w| subset.push(w as usize));
    Ok(subset)
}

fn space(a: &SpaceArgs, format: Format, digits: usize) -> CliResult<Outcome> {
    let (sp, label) = match (&a.input.space, &a.input.file) {
        (Some(id), _) => (space_from_id(id)?, id.clone()),
        (_, Some(path)) => (load_space(&read(path)?)?, path.display().to_string()),
        _ => unreachable!("clap enforces one input"),
    };
    let subset = match (&a.subset, &a.subset_code) {
        (Some(s), _) => parse_subset(s, sp.points())?,
        (_, Some(id)) => subset_from_code(id, &sp)?,
        _ => unreachable!("clap enforces one subset"),
    };
    let general = general_discrepancy(&sp, &subset)?;
    let radii = radius_discrepancies(&sp, &subset)?;
    let definition: Rational = radii.iter().sum();

    let mut rep = Report::new(digits);
    rep.text("space", label)
        .count("points", sp.points() as u64)
        .count("diameter", sp.diameter() as u64)
        .text(
            "ball volumes",
            sp.ball_volumes()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        )
        .count("subset size", subset.len() as u64)
        .exacts("class distribution", class_distribution(&sp, &subset)?)
        .exacts("D_t^2", radii)
        .exact("D (definition)", &definition)
        .exact("D (lambda kernel)", &general.lambda_form)
        .exact("D (ball intersections)", &general.mu_form);
    let mut agree = definition == general.lambda_form;
    match scheme_from_space(&sp) {
        Ok(scheme) => {
            let classes = class_distribution(&sp, &subset)?;
            let d = scheme_discrepancy(&scheme, &classes, subset.len())?;
            agree &= d == definition;
            rep.exact("D (association scheme)", &d);
        }
        Err(e) => {
            rep.text("association scheme", format!("none ({e})"));
        }
    }
    rep.flag("formulas agree", agree);
    if let Some(path) = &a.weights {
        let w = parse_weights(&read(path)?)?;
        let wd = weighted_discrepancy(&sp, &subset, &w)?;
        rep.exact("weighted D (definition)", &wd.definitional)
            .exact("weighted kernel difference", &wd.kernel_difference)
            .text("weighted orientation", wd.orientation.to_string());
    }
    let mut out = Outcome::ok(rep.render(format));
    if !agree {
        out.code = EXIT_IDENTITY;
        out.stderr
            .push("error: discrepancy formulas disagree".into());
    }
    Ok(out)
}
