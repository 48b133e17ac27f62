//! Runs the open-positivity conjecture suites at their default desk-scale
//! windows and prints one verdict line per suite.
//!
//! Each suite builds a family matrix, applies its diagonal rescaling, forms
//! row-generating polynomials, and sweeps Hankel minors coefficientwise
//! after shifting the designated variables by 1. Failures are findings, not
//! panics: a counterexample would be printed with its exact minor.
//!
//! Pass suite names as arguments to run a subset:
//!
//! ```text
//! cargo run --release --example conjecture_suites -- modFq Mprime_shifted
//! ```

use sylva::tpcheck::{conjecture_suite, suite_names, Budget};

fn main() {
    let requested: Vec<String> = std::env::args().skip(1).collect();
    let budget = Budget::default();
    let mut any_failure = false;
    for &name in suite_names() {
        if !requested.is_empty() && !requested.iter().any(|r| r == name) {
            continue;
        }
        match conjecture_suite(name, None, None, &budget) {
            Ok(report) => {
                let verdict = if report.verdict_positive() {
                    "verified at scale"
                } else {
                    any_failure = true;
                    "COUNTEREXAMPLE"
                };
                println!(
                    "{name:<22} {verdict:<18} {} checks, mode: {}, {} ms",
                    report.minors_checked, report.mode, report.wall_time_ms
                );
                for f in &report.failures {
                    println!(
                        "    minor rows {:?} cols {:?}: {}",
                        f.rows, f.cols, f.polynomial
                    );
                }
            }
            Err(e) => {
                any_failure = true;
                println!("{name:<22} error: {e}");
            }
        }
    }
    std::process::exit(if any_failure { 2 } else { 0 });
}
