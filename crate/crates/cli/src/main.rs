//! Command-line front end: every library operation behind a subcommand,
//! with file-based exact input and a deterministic key/value report format.
//!
//! Exit codes: 0 when all checks pass or a verdict was computed, 1 when a
//! mathematical identity check failed, 2 on input errors (with a
//! line/column diagnostic for malformed files).

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hsc_core::criteria::{self, EinsteinSign};
use hsc_core::curvature::{self, KahlerCurvature};
use hsc_core::error::Error;
use hsc_core::polysphere::{self, MultiPoly};
use hsc_core::scalar::{parse_rational, Rational};
use hsc_core::verdict::{Scalar, Status, Verdict};
use hsc_core::{chern, covers, partitions, suite};

use report::{Mode, Report};

#[derive(Parser)]
#[command(
    name = "hsc",
    about = "Exact curvature-invariant, Chern-density, and threshold computations",
    version
)]
struct Cli {
    /// Print exact values only.
    #[arg(long, global = true, conflicts_with = "decimal")]
    exact: bool,
    /// Print decimal approximations only.
    #[arg(long, global = true)]
    decimal: bool,
    /// Digits after the decimal point for approximations (at least 6).
    #[arg(long, global = true, default_value_t = 12)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TensorSource {
    /// Built-in model: fs | product | mixed.
    #[arg(long, conflicts_with = "file")]
    model: Option<String>,
    /// Complex dimension for a built-in model.
    #[arg(long)]
    n: Option<usize>,
    /// Scale factor for the fs model (default 1).
    #[arg(long)]
    scale: Option<String>,
    /// Curvature tensor file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a homogeneous polynomial over the unit sphere.
    Integrate {
        /// Polynomial file: a `nvars N` header line, then the polynomial.
        #[arg(long)]
        file: PathBuf,
    },
    /// Decompose a homogeneous polynomial into harmonic components.
    Decompose {
        #[arg(long)]
        file: PathBuf,
    },
    /// Partition table: class sizes and power-sum coefficients.
    Partitions {
        #[arg(long)]
        n: u32,
        /// Print only the power-sum identity evaluated at x = 1.
        #[arg(long)]
        identity: bool,
    },
    /// Curvature invariants of a tensor: traces, Einstein data, average.
    Invariants {
        #[command(flatten)]
        source: TensorSource,
    },
    /// Sphere moments of the sectional curvature: closed form and oracle.
    Moments {
        #[command(flatten)]
        source: TensorSource,
    },
    /// Two-sided pointwise check of the Chern-variance identity.
    Theorem1 {
        #[command(flatten)]
        source: TensorSource,
    },
    /// All threshold criteria for a manifold-data file.
    Thresholds {
        #[arg(long)]
        file: PathBuf,
    },
    /// Chern numbers of a double cover of projective space.
    Cover {
        #[arg(long)]
        n: usize,
        /// Even branch degree (default 2n + 4).
        #[arg(long)]
        d: Option<u32>,
    },
    /// Run the complete verification suite.
    PaperSuite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.precision < 6 {
        eprintln!("error: --precision must be at least 6, got {}", cli.precision);
        return ExitCode::from(2);
    }
    let mode = if cli.exact {
        Mode::Exact
    } else if cli.decimal {
        Mode::Decimal
    } else {
        Mode::Both
    };
    let mut report = Report::new(mode, cli.precision);
    match dispatch(cli.command, &mut report) {
        Ok(code) => {
            print!("{}", report.render());
            ExitCode::from(code)
        }
        Err(err) => {
            print!("{}", report.render());
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        // An internal identity cross-check failed.
        Error::DensityMismatch { .. } => 1,
        _ => 2,
    }
}

fn dispatch(command: Command, report: &mut Report) -> Result<u8, Error> {
    match command {
        Command::Integrate { file } => integrate(&file, report),
        Command::Decompose { file } => decompose(&file, report),
        Command::Partitions { n, identity } => partition_table(n, identity, report),
        Command::Invariants { source } => invariants(&source, report),
        Command::Moments { source } => moments(&source, report),
        Command::Theorem1 { source } => theorem1(&source, report),
        Command::Thresholds { file } => thresholds(&file, report),
        Command::Cover { n, d } => cover(n, d, report),
        Command::PaperSuite => paper_suite(report),
    }
}

/// Read a polynomial file: `nvars N` on the first non-comment line, the
/// polynomial text on the remaining lines. `#` starts a comment line.
fn load_poly_file(path: &PathBuf) -> Result<MultiPoly, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut nvars: Option<usize> = None;
    let mut body = String::new();
    let mut body_offset = 0usize;
    for (line_number, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if nvars.is_none() {
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let rest = trimmed.strip_prefix("nvars").ok_or(Error::Parse {
                line: line_number + 1,
                column: 1,
                message: "expected a `nvars N` header line".into(),
            })?;
            let value: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: line_number + 1,
                column: 7,
                message: format!("malformed variable count {:?}", rest.trim()),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    line: line_number + 1,
                    column: 7,
                    message: "variable count must be positive".into(),
                });
            }
            nvars = Some(value);
            body_offset = line_number + 1;
            continue;
        }
        if trimmed.starts_with('#') {
            body.push('\n');
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let nvars = nvars.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `nvars N` header line".into(),
    })?;
    polysphere::parse_poly(&body, nvars).map_err(|err| match err {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line: line + body_offset,
            column,
            message,
        },
        other => other,
    })
}

fn integrate(path: &PathBuf, report: &mut Report) -> Result<u8, Error> {
    let poly = load_poly_file(path)?;
    let degree = poly.homogeneous_degree()?;
    let value = polysphere::sphere_integral(&poly)?;
    report.push("command", "integrate");
    report.push("nvars", poly.nvars());
    report.push("degree", degree);
    report.push("polynomial", &poly);
    report.push_scalar("integral", &Scalar::Pi(value));
    Ok(0)
}

fn decompose(path: &PathBuf, report: &mut Report) -> Result<u8, Error> {
    let poly = load_poly_file(path)?;
    let degree = poly.homogeneous_degree()?;
    let components = polysphere::harmonic_decompose(&poly)?;
    report.push("command", "decompose");
    report.push("nvars", poly.nvars());
    report.push("degree", degree);
    report.push("components", components.len());
    for (j, component) in components.iter().enumerate() {
        report.push(
            format!("component.{j}.degree"),
            degree.saturating_sub(2 * j as u32),
        );
        report.push(format!("component.{j}"), component);
    }
    let recomposed = polysphere::recompose(&components, poly.nvars());
    let consistent = recomposed == poly;
    report.push("recomposition", if consistent { "ok" } else { "mismatch" });
    Ok(if consistent { 0 } else { 1 })
}

fn partition_table(n: u32, identity_only: bool, report: &mut Report) -> Result<u8, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    report.push("command", "partitions");
    report.push("n", n);
    let identity = partitions::power_sum_identity_at_one(n);
    if identity_only {
        report.push("identity_at_one", &identity);
        return Ok(if identity == Rational::from_integer(1.into()) {
            0
        } else {
            1
        });
    }
    let listed = partitions::enumerate_partitions(n);
    let expansion = partitions::power_sum_expansion(n);
    report.push("count", listed.len());
    let mut total = Rational::from_integer(0.into());
    for (position, partition) in listed.iter().enumerate() {
        report.push(format!("partition.{position}"), partition);
        report.push(
            format!("partition.{position}.class_size"),
            partition.class_size(),
        );
        report.push(
            format!("partition.{position}.power_sum_coef"),
            &expansion[partition],
        );
        total += Rational::from_integer(partition.class_size());
    }
    report.push("class_size_total", &total);
    let factorial = Rational::from_integer(hsc_core::scalar::factorial(n));
    report.push("factorial", &factorial);
    report.push("identity_at_one", &identity);
    let consistent = total == factorial && identity == Rational::from_integer(1.into());
    Ok(if consistent { 0 } else { 1 })
}

fn load_tensor_source(source: &TensorSource, report: &mut Report) -> Result<KahlerCurvature, Error> {
    if let Some(path) = &source.file {
        report.push("source", "file");
        return curvature::load_tensor(path);
    }
    let model = source
        .model
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("supply either --model or --file".into()))?;
    let n = source
        .n
        .ok_or_else(|| Error::InvalidInput("--model needs --n".into()))?;
    if !(1..=255).contains(&n) {
        return Err(Error::InvalidInput(
            "model dimension must lie in 1..=255".into(),
        ));
    }
    let scale = source
        .scale
        .as_deref()
        .map(parse_rational)
        .transpose()?
        .unwrap_or_else(|| Rational::from_integer(1.into()));
    report.push("model", model);
    report.push("n", n);
    match model {
        "fs" => {
            report.push("scale", &scale);
            Ok(KahlerCurvature::fubini_study(n, scale))
        }
        "product" => KahlerCurvature::product_model(&vec![(1usize, scale); n]),
        "mixed" => {
            if n < 2 {
                return Err(Error::InvalidInput("the mixed model needs n >= 2".into()));
            }
            // Blocks (1, n/2) and (n-1, 1): both have block Ricci n.
            KahlerCurvature::product_model(&[
                (1, Rational::new((n as i64).into(), 2.into())),
                (n - 1, Rational::from_integer(1.into())),
            ])
        }
        other => Err(Error::InvalidInput(format!(
            "unknown model {other:?}; expected fs, product, or mixed"
        ))),
    }
}

fn invariants(source: &TensorSource, report: &mut Report) -> Result<u8, Error> {
    report.push("command", "invariants");
    let tensor = load_tensor_source(source, report)?;
    let n = tensor.dimension();
    report.push("dimension", n);
    report.push_scalar("r1_1", &Scalar::Rational(tensor.invariant_r1(1)?));
    report.push_scalar("r1_2", &Scalar::Rational(tensor.invariant_r1(2)?));
    report.push_scalar("r2_2", &Scalar::Rational(tensor.invariant_r2(2)?));
    if n >= 2 {
        report.push_scalar(
            "r1_n",
            &Scalar::Rational(tensor.invariant_r1(n as u32)?),
        );
        report.push_scalar(
            "r2_n",
            &Scalar::Rational(tensor.invariant_r2(n as u32)?),
        );
    }
    let einstein = tensor.einstein_constant();
    report.push("einstein", einstein.is_einstein);
    if einstein.is_einstein {
        report.push_scalar("mu", &Scalar::Rational(einstein.mu));
    }
    report.push_scalar("ave", &Scalar::Rational(tensor.average_hsc()));
    Ok(0)
}

fn moments(source: &TensorSource, report: &mut Report) -> Result<u8, Error> {
    report.push("command", "moments");
    let tensor = load_tensor_source(source, report)?;
    let n = tensor.dimension();
    report.push("dimension", n);
    report.push_scalar("volume", &Scalar::Pi(curvature::moment_volume(n)?));
    let (first, second) = tensor.moments_oracle()?;
    let ave_route = curvature::moment_volume(n)?.scale(&tensor.average_hsc());
    report.push_scalar("moment1.oracle", &Scalar::Pi(first.clone()));
    report.push_scalar("moment1.average_route", &Scalar::Pi(ave_route.clone()));
    report.push_scalar("moment2.oracle", &Scalar::Pi(second.clone()));
    let einstein = tensor.einstein_constant().is_einstein;
    report.push("einstein", einstein);
    if !einstein {
        report.push("moment2.closed", "skipped: the closed form assumes an Einstein tensor");
        return Ok(if first == ave_route { 0 } else { 1 });
    }
    let closed = tensor.moment_h2()?;
    report.push_scalar("moment2.closed", &Scalar::Pi(closed.clone()));
    let (coef_a, coef_b) = curvature::moment_coefficients(n)?;
    let (solved_a, solved_b) = curvature::solve_moment_coefficients(n)?;
    report.push_scalar("coef_a.closed", &Scalar::Pi(coef_a.clone()));
    report.push_scalar("coef_a.solved", &Scalar::Pi(solved_a.clone()));
    report.push_scalar("coef_b.closed", &Scalar::Pi(coef_b.clone()));
    report.push_scalar("coef_b.solved", &Scalar::Pi(solved_b.clone()));
    let consistent =
        closed == second && first == ave_route && coef_a == solved_a && coef_b == solved_b;
    report.push("agreement", if consistent { "ok" } else { "mismatch" });
    Ok(if consistent { 0 } else { 1 })
}

fn push_verdict(report: &mut Report, prefix: &str, verdict: &Verdict) {
    report.push_scalar(format!("{prefix}.lhs"), &verdict.lhs);
    report.push_scalar(format!("{prefix}.rhs"), &verdict.rhs);
    report.push(format!("{prefix}.status"), verdict.status);
    report.push(format!("{prefix}.conclusion"), &verdict.conclusion);
    for (name, value) in &verdict.details {
        report.push_scalar(format!("{prefix}.{name}"), value);
    }
}

fn theorem1(source: &TensorSource, report: &mut Report) -> Result<u8, Error> {
    report.push("command", "theorem1");
    let tensor = load_tensor_source(source, report)?;
    report.push("dimension", tensor.dimension());
    let verdict = chern::variance_identity_check(&tensor)?;
    push_verdict(report, "identity", &verdict);
    let densities = chern::density_report(&tensor)?;
    report.push_scalar("density.c1n", &Scalar::Rational(densities.c1n_density));
    report.push_scalar("density.c1c2", &Scalar::Rational(densities.c1c2_density));
    report.push("density.convention", densities.convention);
    Ok(if verdict.status == Status::Satisfied { 0 } else { 1 })
}

fn thresholds(path: &Path, report: &mut Report) -> Result<u8, Error> {
    let data = criteria::load_manifold(path)?;
    report.push("command", "thresholds");
    report.push("n", data.n);
    report.push_scalar("c1n", &Scalar::Rational(data.c1n.clone()));
    report.push_scalar("c2c1", &Scalar::Rational(data.c2c1.clone()));
    report.push("einstein_sign", data.einstein_sign);

    if data.c1n != Rational::from_integer(0.into()) {
        let reverse = criteria::reverse_yau(&data)?;
        push_verdict(report, "reverse_yau", &reverse);
        if data.h_m.is_some() {
            let bounded = criteria::ample_bound(&data)?;
            push_verdict(report, "bounded_curvature", &bounded);
        } else {
            report.push("bounded_curvature", "skipped: no H_m supplied");
        }
        let c1n_abs = if data.c1n < Rational::from_integer(0.into()) {
            -data.c1n.clone()
        } else {
            data.c1n.clone()
        };
        let pinch = criteria::pinch_threshold(data.n, &c1n_abs)?;
        report.push_scalar("pinch.threshold", &Scalar::Root(pinch));
        if let Some(delta) = &data.delta {
            let verdict = criteria::pinch_verdict(data.n, &c1n_abs, delta, data.einstein_sign)?;
            push_verdict(report, "pinch", &verdict);
        }
        let small = criteria::small_hsc_bound(data.n, &c1n_abs)?;
        report.push_scalar("small_hsc.bound", &Scalar::Root(small));
    } else {
        report.push("reverse_yau", "skipped: c1^n = 0");
    }

    match (&data.v_mx, &data.torus_amplitude) {
        (Some(v_mx), Some(amplitude)) => {
            let verdict = criteria::torus_verdict(data.n, v_mx, amplitude, None)?;
            push_verdict(report, "torus", &verdict);
        }
        _ => report.push("torus", "skipped: needs v_mx and a"),
    }
    Ok(0)
}

fn cover(n: usize, d: Option<u32>, report: &mut Report) -> Result<u8, Error> {
    let d = d.unwrap_or(2 * n as u32 + 4);
    let numbers = covers::double_cover_pn(n, d)?;
    report.push("command", "cover");
    report.push("n", n);
    report.push("d", d);
    report.push_scalar("c1n", &Scalar::Rational(numbers.c1n.clone()));
    report.push_scalar("c1c2", &Scalar::Rational(numbers.c1c2.clone()));
    report.push("canonical_ample", numbers.canonical_ample);
    let expanded = covers::double_cover_c1c2_expanded(n, d)?;
    let routes_agree = expanded == numbers.c1c2;
    report.push("routes_agree", routes_agree);
    if numbers.c1n != Rational::from_integer(0.into()) {
        let data = criteria::ManifoldData {
            n,
            c1n: numbers.c1n,
            c2c1: numbers.c1c2,
            h_m: Some(Rational::from_integer(1.into())),
            delta: None,
            v_mx: None,
            einstein_sign: EinsteinSign::Negative,
            torus_amplitude: None,
        };
        let verdict = criteria::reverse_yau(&data)?;
        push_verdict(report, "reverse_yau", &verdict);
    } else {
        report.push("reverse_yau", "skipped: c1^n = 0");
    }
    Ok(if routes_agree { 0 } else { 1 })
}

fn paper_suite(report: &mut Report) -> Result<u8, Error> {
    let checks = suite::run_all();
    report.push("command", "paper-suite");
    report.push("checks", checks.len());
    for (position, check) in checks.iter().enumerate() {
        report.push(
            format!("check.{}.name", position + 1),
            check.name,
        );
        report.push(
            format!("check.{}.status", position + 1),
            if check.passed { "pass" } else { "fail" },
        );
        if !check.passed {
            report.push(format!("check.{}.detail", position + 1), &check.detail);
        }
        eprintln!(
            "check {} ({}): {} in {} ms",
            position + 1,
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            check.millis
        );
    }
    let all = suite::all_passed(&checks);
    report.push("result", if all { "pass" } else { "fail" });
    Ok(if all { 0 } else { 1 })
}
