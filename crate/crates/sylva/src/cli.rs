//! Command-line front end: the library's constructions and checks as
//! reproducible subcommands with JSON/CSV reports.
//!
//! Exit-code protocol: 0 = pass/verified, 2 = mathematical failure (a failed
//! check or a counterexample), 3 = budget exceeded, 4 = usage error. Code 1
//! is reserved for operational faults such as unwritable report files.
//!
//! With a fixed configuration and seed, every run is byte-identical: report
//! wall times are zeroed unless `timing = true` is configured, random checks
//! derive from the configured seed, and all rendering is canonical.

use crate::combinat::{
    forest_genpoly, matching_genpoly, perm_genpoly, sfraction_expand, touchard_riordan, Weighting,
};
use crate::config::RunConfig;
use crate::families::{
    bessel_matrix, family_matrix, family_names, improper_forests_matrix, named_poly_seq,
    pq_stirling_matrix, q_forests_matrix, rst_forests_matrix, rst_trees_matrix,
};
use crate::matrixkit::{Scalar, TriMat};
use crate::networks::{catalog, catalog_names, CatalogNet, Layer, NetKind, PlanarNet, TransferFactor};
use crate::polyring::qcalc::pq_int_in;
use crate::polyring::{Poly, RatFn, Sequence, Var};
use crate::report::{render_json, write_csv, write_json, CheckRecord};
use crate::tpcheck::{check_tp, conjecture_suite, hankel, neville, suite_names, Mode, TpError};
use crate::verify::{manifest, run_target, Ctx};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;
use std::ffi::OsString;
use std::path::PathBuf;
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_OPERATIONAL: i32 = 1;
pub const EXIT_MATH_FAILURE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// Faults that end a run without a mathematical verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Operational(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Operational(_) => EXIT_OPERATIONAL,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn operational(e: impl std::fmt::Display) -> CliError {
    CliError::Operational(e.to_string())
}

#[derive(Parser)]
#[command(
    name = "sylva",
    version,
    about = "Exact matrix families from forest enumeration: construction, verification, and positivity sweeps"
)]
struct Cli {
    /// TOML run-configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Report directory; overrides both the config file and SYLVA_OUTPUT_DIR.
    #[arg(long, global = true, value_name = "DIR")]
    output_dir: Option<PathBuf>,
    /// Seed for randomized checks; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a family matrix (rows 0..=n) as JSON.
    Family {
        /// Family name; see the error message for the full list.
        name: String,
        /// Largest row index (the matrix has n+1 rows).
        #[arg(long)]
        n: usize,
    },
    /// Print a catalog network's weight tables and path matrix as JSON.
    Network {
        /// Network name; see the error message for the full list.
        name: String,
        /// Largest row index of the path matrix.
        #[arg(long)]
        n: usize,
    },
    /// Compare one brute-force generating polynomial against its closed form.
    Oracle {
        /// One of: forests, permutations, matchings, touchard.
        class: String,
        #[arg(long)]
        n: usize,
        /// Component count (forests) or left-to-right-maximum count
        /// (permutations).
        #[arg(long)]
        k: Option<usize>,
        /// Statistic for the forests class: q, rst, leaf, or improper.
        #[arg(long)]
        weighting: Option<String>,
    },
    /// Run a registered identity/property target and write its report.
    Verify {
        /// Target id or alias; try --list.
        target: Option<String>,
        /// Size override; each target interprets it at its natural scale.
        #[arg(long)]
        n: Option<usize>,
        /// List every registered target with its summary.
        #[arg(long)]
        list: bool,
    },
    /// Run a positivity-conjecture suite within the configured budget.
    Conjecture {
        /// Suite name; see the error message for the full list.
        name: String,
        /// Hankel window size (for equality suites: the oracle depth).
        #[arg(long, alias = "n")]
        hankel: Option<usize>,
        /// Cap on minor order; defaults to the suite's own cap.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Neville elimination of a family matrix: pivots and the certificate.
    Neville {
        /// Family name, as for `family`.
        family: String,
        /// Largest row index of the eliminated window.
        #[arg(long)]
        n: usize,
    },
    /// Hankel matrix of a named sequence with a coefficientwise minor sweep.
    Hankel {
        /// Sequence name; see the error message for the full list.
        sequence: String,
        /// Hankel window size (entry (i,j) is term i+j of the sequence).
        #[arg(long)]
        size: usize,
        /// Cap on minor order; defaults to the configured order cap.
        #[arg(long)]
        order: Option<usize>,
    },
}

/// Parses real process arguments and dispatches; returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Same as [`run`] over explicit arguments, for tests.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig, CliError> {
    // Precedence for the output directory: --output-dir flag, then the
    // SYLVA_OUTPUT_DIR environment variable (applied inside load), then the
    // config file, then the built-in default.
    let mut config = RunConfig::load(cli.config.as_deref()).map_err(usage)?;
    if let Some(dir) = &cli.output_dir {
        config.output_dir = dir.clone();
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    config.validate().map_err(usage)?;
    Ok(config)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let config = resolve_config(&cli)?;
    if config.parallelism > 0 {
        // Only the first global-pool initialization can win; later calls
        // (tests, repeated dispatch) are deliberately ignored.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallelism)
            .build_global();
    }
    match &cli.cmd {
        Cmd::Family { name, n } => cmd_family(name, *n),
        Cmd::Network { name, n } => cmd_network(name, *n),
        Cmd::Oracle { class, n, k, weighting } => {
            cmd_oracle(class, *n, *k, weighting.as_deref())
        }
        Cmd::Verify { target, n, list } => cmd_verify(target.as_deref(), *n, *list, &config),
        Cmd::Conjecture { name, hankel, order } => {
            cmd_conjecture(name, *hankel, *order, &config)
        }
        Cmd::Neville { family, n } => cmd_neville(family, *n),
        Cmd::Hankel { sequence, size, order } => cmd_hankel(sequence, *size, *order, &config),
    }
}

/// Writes a line to stdout, treating a closed pipe (e.g. `| head`) as
/// success rather than a fault.
fn emit(text: std::fmt::Arguments) -> Result<(), CliError> {
    use std::io::Write;
    match writeln!(std::io::stdout(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(operational(e)),
    }
}

macro_rules! emit {
    ($($arg:tt)*) => { emit(format_args!($($arg)*))? };
}

fn print_json(value: &serde_json::Value) -> Result<i32, CliError> {
    emit!("{}", serde_json::to_string_pretty(value).map_err(operational)?);
    Ok(EXIT_PASS)
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

fn cmd_family(name: &str, n: usize) -> Result<i32, CliError> {
    let (matrix, spec) = family_matrix(name, n + 1).map_err(|e| {
        CliError::Usage(format!("{e}; known families: {}", family_names().join(", ")))
    })?;
    print_json(&json!({
        "family": spec.name,
        "liveVars": spec.live_vars,
        "n": n,
        "rows": matrix.render_rows(),
    }))
}

// ---------------------------------------------------------------------------
// network
// ---------------------------------------------------------------------------

fn cmd_network(name: &str, n: usize) -> Result<i32, CliError> {
    let dump = match catalog(name).map_err(|e| {
        CliError::Usage(format!("{e}; known networks: {}", catalog_names().join(", ")))
    })? {
        CatalogNet::Poly(net) => network_dump(&net, n)?,
        CatalogNet::Rational(net) => network_dump(&net, n)?,
    };
    print_json(&dump)
}

fn network_dump<S: Scalar>(net: &PlanarNet<S>, n: usize) -> Result<serde_json::Value, CliError> {
    let truncation = n + 1;
    let path = net.path_matrix_transfer(truncation).map_err(usage)?;
    let weights = match &net.kind {
        NetKind::BinomialLike { alpha, beta } => json!({
            "representation": "binomial-like",
            // Row i lists the weights at source row i+1; horizontal steps
            // are indexed from l = 1, diagonal steps from l = 0.
            "alpha": (1..=n)
                .map(|i| (1..=n).map(|l| alpha(i, l).to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "beta": (1..=n)
                .map(|i| (0..=n).map(|l| beta(i, l).to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
        NetKind::ColumnTransfers { factors } => {
            let dumped: Vec<serde_json::Value> = factors(truncation)
                .iter()
                .map(|f| factor_dump(f, truncation))
                .collect();
            json!({ "representation": "column-transfers", "factors": dumped })
        }
    };
    Ok(json!({
        "network": net.name,
        "n": n,
        "weights": weights,
        "pathMatrix": path.render_rows(),
    }))
}

fn factor_dump<S: Scalar>(factor: &TransferFactor<S>, truncation: usize) -> serde_json::Value {
    let window = truncation.saturating_sub(factor.shift);
    let layers: Vec<serde_json::Value> = factor
        .layers
        .iter()
        .map(|layer| match layer {
            Layer::Bidiag { diag, sub } => json!({
                "form": "bidiagonal",
                "diag": seq_strings(diag, window),
                "sub": seq_strings(sub, window.saturating_sub(1)),
            }),
            Layer::InvBidiag { seq } => json!({
                "form": "inverse-bidiagonal",
                "seq": seq_strings(seq, window.saturating_sub(1)),
            }),
            Layer::Diag { seq } => json!({
                "form": "diagonal",
                "seq": seq_strings(seq, window),
            }),
            Layer::Binom { sub } => json!({
                "form": "binomial-block",
                "sub": seq_strings(sub, window.saturating_sub(1)),
            }),
        })
        .collect();
    json!({ "shift": factor.shift, "layers": layers })
}

fn seq_strings<S: Scalar>(seq: &Sequence<S>, len: usize) -> Vec<String> {
    (0..len).map(|k| seq.at(k).to_string()).collect()
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn oracle_verdict(
    class: &str,
    n: usize,
    k: Option<usize>,
    weighting: Option<&str>,
    oracle: Poly,
    closed: Poly,
) -> Result<i32, CliError> {
    let matches = oracle == closed;
    let dump = json!({
        "class": class,
        "n": n,
        "k": k,
        "weighting": weighting,
        "oracle": oracle.to_string(),
        "closedForm": closed.to_string(),
        "matches": matches,
    });
    emit!("{}", serde_json::to_string_pretty(&dump).map_err(operational)?);
    Ok(if matches { EXIT_PASS } else { EXIT_MATH_FAILURE })
}

fn require_k(class: &str, n: usize, k: Option<usize>) -> Result<usize, CliError> {
    let k = k.ok_or_else(|| CliError::Usage(format!("class '{class}' needs --k")))?;
    if n == 0 || k == 0 || k > n {
        return Err(CliError::Usage(format!(
            "class '{class}' needs 1 <= k <= n, got (n, k) = ({n}, {k})"
        )));
    }
    Ok(k)
}

fn forbid(class: &str, flag: &str, given: bool) -> Result<(), CliError> {
    if given {
        return Err(CliError::Usage(format!("class '{class}' takes no {flag}")));
    }
    Ok(())
}

fn cmd_oracle(
    class: &str,
    n: usize,
    k: Option<usize>,
    weighting: Option<&str>,
) -> Result<i32, CliError> {
    match class {
        "forests" => {
            let k = require_k(class, n, k)?;
            let chosen = weighting.unwrap_or("q");
            let (statistic, closed): (Weighting, TriMat<Poly>) = match chosen {
                "q" => (Weighting::QStatistic, q_forests_matrix(n + 1)),
                "rst" => (Weighting::RstStatistic, rst_forests_matrix(n + 1)),
                "leaf" => (Weighting::RstLeafVariant, rst_trees_matrix(n + 1)),
                "improper" => (
                    Weighting::YzImproper,
                    improper_forests_matrix(n + 1).map_err(usage)?,
                ),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown weighting '{other}'; expected q, rst, leaf, or improper"
                    )))
                }
            };
            let oracle = forest_genpoly(n, k, statistic);
            let entry = closed.get(n, k).clone();
            oracle_verdict(class, n, Some(k), Some(chosen), oracle, entry)
        }
        "permutations" => {
            forbid(class, "--weighting", weighting.is_some())?;
            let k = require_k(class, n, k)?;
            let oracle = perm_genpoly(n)[k].clone();
            let closed = pq_stirling_matrix(n + 1)
                .get(n, k)
                .subst_many(&[(Var::P, Poly::one())]);
            oracle_verdict(class, n, Some(k), None, oracle, closed)
        }
        "matchings" => {
            forbid(class, "--k", k.is_some())?;
            forbid(class, "--weighting", weighting.is_some())?;
            let oracle = matching_genpoly(n);
            let lam = Sequence::new(|i| pq_int_in(Var::R, Var::S, i));
            let closed = sfraction_expand(&lam, n)[n].clone();
            oracle_verdict(class, n, None, None, oracle, closed)
        }
        "touchard" => {
            forbid(class, "--k", k.is_some())?;
            forbid(class, "--weighting", weighting.is_some())?;
            if n == 0 {
                return Err(CliError::Usage("class 'touchard' needs n >= 1".into()));
            }
            let oracle = touchard_riordan(n).map_err(usage)?;
            let ones = [
                (Var::S, Poly::one()),
                (Var::M, Poly::one()),
                (Var::Y, Poly::one()),
            ];
            let closed = bessel_matrix(n + 1)
                .map_err(usage)?
                .get(n, 1)
                .subst_many(&ones);
            oracle_verdict(class, n, None, None, oracle, closed)
        }
        other => Err(CliError::Usage(format!(
            "unknown oracle class '{other}'; expected forests, permutations, matchings, or touchard"
        ))),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    target: Option<&str>,
    n: Option<usize>,
    list: bool,
    config: &RunConfig,
) -> Result<i32, CliError> {
    if list {
        let width = manifest().iter().map(|(id, _)| id.len()).max().unwrap_or(0);
        for (id, summary) in manifest() {
            emit!("{id:width$}  {summary}");
        }
        return Ok(EXIT_PASS);
    }
    let id = target.ok_or_else(|| CliError::Usage("name a verify target, or pass --list".into()))?;
    let ctx = Ctx::new(n, config.seed);
    let report = run_target(id, &ctx).map_err(usage)?;
    let stem = format!("verify-{}", report.target);
    write_json(&config.output_dir, &stem, &report).map_err(operational)?;
    write_csv(&config.output_dir, &stem, &report.records).map_err(operational)?;
    for record in &report.records {
        if record.passed {
            emit!("PASS {}: {}", record.target, record.check);
        } else {
            emit!("FAIL {}: {} — {}", record.target, record.check, record.detail);
        }
    }
    if report.passed {
        Ok(EXIT_PASS)
    } else {
        // Put the full JSON on screen so the failing records carry their
        // details without opening the report file.
        emit!("{}", render_json(&report).map_err(operational)?.trim_end());
        Ok(EXIT_MATH_FAILURE)
    }
}

// ---------------------------------------------------------------------------
// conjecture
// ---------------------------------------------------------------------------

fn cmd_conjecture(
    name: &str,
    hankel_size: Option<usize>,
    order: Option<usize>,
    config: &RunConfig,
) -> Result<i32, CliError> {
    // Accept the short spelling of the equality suite.
    let canonical = if name == "matchings" { "matchings_sfraction" } else { name };
    let mut report = match conjecture_suite(canonical, hankel_size, order, &config.budget()) {
        Ok(report) => report,
        Err(TpError::UnknownSuite(s)) => {
            return Err(CliError::Usage(format!(
                "unknown conjecture suite '{s}'; expected one of {}",
                suite_names().join(", ")
            )))
        }
        Err(TpError::BudgetExceeded(msg)) => return Err(CliError::Budget(msg)),
        Err(e) => return Err(usage(e)),
    };
    if !config.timing {
        report.wall_time_ms = 0;
    }
    let stem = format!("conjecture-{canonical}");
    write_json(&config.output_dir, &stem, &report).map_err(operational)?;
    let scope = format!(
        "{}; window {}, minor order <= {}, {} minors",
        report.mode, report.size, report.order_cap, report.minors_checked
    );
    let mut records = vec![if report.verdict_positive() {
        CheckRecord::pass(&report.matrix, scope.clone())
    } else {
        CheckRecord::fail(
            &report.matrix,
            scope.clone(),
            format!("{} failing minors", report.failures.len()),
        )
    }];
    for failure in &report.failures {
        records.push(CheckRecord::fail(
            &report.matrix,
            format!("minor rows {:?} cols {:?}", failure.rows, failure.cols),
            failure.polynomial.clone(),
        ));
    }
    write_csv(&config.output_dir, &stem, &records).map_err(operational)?;
    if report.verdict_positive() {
        emit!("verified at scale: {} — {scope}", report.matrix);
        Ok(EXIT_PASS)
    } else {
        emit!(
            "counterexample found: {} — {} of {} minors fail",
            report.matrix,
            report.failures.len(),
            report.minors_checked
        );
        emit!("{}", render_json(&report).map_err(operational)?.trim_end());
        Ok(EXIT_MATH_FAILURE)
    }
}

// ---------------------------------------------------------------------------
// neville
// ---------------------------------------------------------------------------

fn cmd_neville(family: &str, n: usize) -> Result<i32, CliError> {
    let (matrix, spec) = family_matrix(family, n + 1).map_err(|e| {
        CliError::Usage(format!("{e}; known families: {}", family_names().join(", ")))
    })?;
    let rational: TriMat<RatFn> = matrix.map(|p| RatFn::from_poly(p.clone()));
    match neville(&rational) {
        Ok((pivots, net)) => {
            let certificate = pivots.certificate_available();
            let entries: Vec<serde_json::Value> = pivots
                .entries()
                .into_iter()
                .map(|(i, l, value)| json!({ "i": i, "l": l, "pivot": value.to_string() }))
                .collect();
            let code = print_json(&json!({
                "family": spec.name,
                "n": n,
                "network": net.name,
                "certificateAvailable": certificate,
                "pivots": entries,
            }))?;
            // Without the certificate the elimination says nothing positive.
            Ok(if certificate { code } else { EXIT_MATH_FAILURE })
        }
        Err(e) => {
            emit!("elimination breakdown: {e}");
            Ok(EXIT_MATH_FAILURE)
        }
    }
}

// ---------------------------------------------------------------------------
// hankel
// ---------------------------------------------------------------------------

fn cmd_hankel(
    sequence: &str,
    size: usize,
    order: Option<usize>,
    config: &RunConfig,
) -> Result<i32, CliError> {
    if size == 0 {
        return Err(CliError::Usage("Hankel size must be positive".into()));
    }
    if size > config.max_hankel {
        return Err(CliError::Budget(format!(
            "Hankel size {size} exceeds the configured maximum {}",
            config.max_hankel
        )));
    }
    let seq = named_poly_seq(sequence).map_err(|e| {
        CliError::Usage(format!(
            "{e}; known sequences: abel-bar, general-abel, rothe, schlafli-gessel-seo, reverse-bessel, stirling-cycle"
        ))
    })?;
    let window = hankel(&seq, size);
    let cap = order.unwrap_or(config.order_cap).min(size);
    let mut report = check_tp(&window, &format!("hankel-{sequence}"), cap, &Mode::Coefficientwise);
    if !config.timing {
        report.wall_time_ms = 0;
    }
    let stem = format!("hankel-{sequence}");
    write_json(&config.output_dir, &stem, &report).map_err(operational)?;
    let records: Vec<CheckRecord> = if report.verdict_positive() {
        vec![CheckRecord::pass(
            &report.matrix,
            format!(
                "all minors of order <= {} of the {size}x{size} Hankel window are coefficientwise nonnegative",
                report.order_cap
            ),
        )]
    } else {
        report
            .failures
            .iter()
            .map(|f| {
                CheckRecord::fail(
                    &report.matrix,
                    format!("minor rows {:?} cols {:?}", f.rows, f.cols),
                    f.polynomial.clone(),
                )
            })
            .collect()
    };
    write_csv(&config.output_dir, &stem, &records).map_err(operational)?;
    emit!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "sequence": sequence,
            "size": size,
            "orderCap": report.order_cap,
            "minorsChecked": report.minors_checked,
            "failures": report.failures.len(),
            "rows": window.render_rows(),
        }))
        .map_err(operational)?
    );
    Ok(if report.verdict_positive() {
        EXIT_PASS
    } else {
        EXIT_MATH_FAILURE
    })
}
