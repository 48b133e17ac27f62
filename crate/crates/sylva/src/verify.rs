//! The `verify` registry: every library invariant as a runnable target.
//!
//! Each target re-checks one documented invariant — an identity between
//! construction routes, a recurrence, a specialization, a randomized
//! property, or a pinned negative result — and reports per-check records
//! suitable for JSON and CSV output. Targets accept an optional size
//! override where a truncation is meaningful, and use the configured seed
//! for randomized checks, so runs are reproducible.

use crate::combinat::{
    enum_forests, forest_genpoly, matching_genpoly, perm_genpoly, prufer_decode, prufer_encode,
    series_to_sfraction, sfraction_expand, touchard_riordan, Weighting,
};
use crate::families::{
    abel_bar_seq, bessel_matrix, eightvar_forests_matrix, family_matrix, forests_matrix,
    generic_lah, improper_forests_matrix, improper_production_matrix, pq_stirling_matrix,
    q_forests_matrix, q_forests_shifted_matrix, q_trees_matrix, rothe_seq, row_gen_polys,
    rst_forests_matrix, rst_trees_matrix, stirling_cycle_seq, trees_matrix,
};
use crate::matrixkit::{
    bareiss_det, build_bidiagonal, build_inv_bidiagonal, minor_det, output_matrix, Scalar, Shape,
    TriMat,
};
use crate::networks::{catalog, catalog_names, switch_transform, CatalogNet, PlanarNet};
use crate::polyring::qcalc::{binom, pq_int, pq_int_in, q_binom, q_fact, q_int};
use crate::polyring::{Poly, RatFn, Sequence, Var};
use crate::report::CheckRecord;
use crate::tpcheck::{
    check_tp, conjecture_suite, neville, qforest_telescoping_identity, Budget, Mode,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown verify target '{0}'")]
    UnknownTarget(String),
}

/// Inputs a target may consult.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    /// Size override (`--n`); targets interpret it as their natural scale.
    pub n: Option<usize>,
    /// Seed for randomized checks.
    pub seed: u64,
}

impl Ctx {
    pub fn new(n: Option<usize>, seed: u64) -> Ctx {
        Ctx { n, seed }
    }

    fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }
}

/// A registered verify target.
pub struct Target {
    pub id: &'static str,
    /// Stable alternate spellings accepted on the command line.
    pub aliases: &'static [&'static str],
    pub module: &'static str,
    pub summary: &'static str,
    run: fn(&Ctx) -> Vec<CheckRecord>,
}

/// Outcome of running one target.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TargetReport {
    pub target: String,
    pub passed: bool,
    pub records: Vec<CheckRecord>,
}

/// Looks up a target by id or alias.
pub fn find_target(id: &str) -> Option<&'static Target> {
    targets()
        .iter()
        .find(|t| t.id == id || t.aliases.contains(&id))
}

/// Runs a target by id or alias.
pub fn run_target(id: &str, ctx: &Ctx) -> Result<TargetReport, VerifyError> {
    let target = find_target(id).ok_or_else(|| VerifyError::UnknownTarget(id.into()))?;
    let records = (target.run)(ctx);
    Ok(TargetReport {
        target: target.id.into(),
        passed: records.iter().all(|r| r.passed),
        records,
    })
}

pub fn target_names() -> Vec<&'static str> {
    targets().iter().map(|t| t.id).collect()
}

// ---------------------------------------------------------------------------
// Record helpers
// ---------------------------------------------------------------------------

fn ok_or(target: &str, check: String, good: bool, detail: String) -> CheckRecord {
    if good {
        CheckRecord::pass(target, check)
    } else {
        CheckRecord::fail(target, check, detail)
    }
}

fn eq_record<T: PartialEq + std::fmt::Display>(
    target: &str,
    check: String,
    got: &T,
    want: &T,
) -> CheckRecord {
    ok_or(
        target,
        check,
        got == want,
        format!("expected {want}, got {got}"),
    )
}

fn matrices_equal<S: Scalar>(a: &TriMat<S>, b: &TriMat<S>) -> Option<(usize, usize)> {
    let n = a.size().min(b.size());
    for i in 0..n {
        for j in 0..=i.min(n - 1) {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn matrix_record<S: Scalar>(
    target: &str,
    check: String,
    got: &TriMat<S>,
    want: &TriMat<S>,
) -> CheckRecord {
    match matrices_equal(got, want) {
        None => CheckRecord::pass(target, check),
        Some((i, j)) => CheckRecord::fail(
            target,
            check,
            format!(
                "entry ({i},{j}): expected {}, got {}",
                want.get(i, j),
                got.get(i, j)
            ),
        ),
    }
}

fn brat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let vars = [Var::Q, Var::X, Var::Y];
    let mut p = Poly::int(rng.gen_range(-3..=3));
    for _ in 0..rng.gen_range(1..=3) {
        let mut term = Poly::int(rng.gen_range(-3..=3));
        for &v in &vars {
            let e = rng.gen_range(0..=2u16);
            if e > 0 {
                term *= Poly::monomial(v, e, 1);
            }
        }
        p += term;
    }
    p
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-6..=6i64);
    let den = rng.gen_range(1..=4i64);
    brat(num, den)
}

// ---------------------------------------------------------------------------
// polyring targets
// ---------------------------------------------------------------------------

fn run_ring_axioms(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "ring-axioms";
    let cases = ctx.n_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut bad = Vec::new();
    for i in 0..cases {
        let (a, b, c) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        if (&a + &b) + &c != &a + &(&b + &c) {
            bad.push(format!("case {i}: addition not associative"));
        }
        if &a * (&b + &c) != &a * &b + &a * &c {
            bad.push(format!("case {i}: multiplication not distributive"));
        }
        if &a * &b != &b * &a {
            bad.push(format!("case {i}: multiplication not commutative"));
        }
        if (&a * &b) * &c != &a * (&b * &c) {
            bad.push(format!("case {i}: multiplication not associative"));
        }
    }
    vec![ok_or(
        id,
        format!("ring axioms on {cases} random polynomial triples"),
        bad.is_empty(),
        bad.join("; "),
    )]
}

fn run_qbinom_recurrences(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "qbinom-recurrences";
    let top = ctx.n_or(12);
    let mut records = Vec::new();
    let mut sym = true;
    let mut first = true;
    let mut second = true;
    for n in 0..=top {
        for k in 0..=n {
            if q_binom(n, k) != q_binom(n, n - k) {
                sym = false;
            }
            if n > 0 {
                let lower = if k > 0 { q_binom(n - 1, k - 1) } else { Poly::zero() };
                let by_k = &lower + Poly::monomial(Var::Q, k as u16, 1) * q_binom(n - 1, k);
                let by_nk =
                    Poly::monomial(Var::Q, (n - k) as u16, 1) * &lower + q_binom(n - 1, k);
                if q_binom(n, k) != by_k {
                    first = false;
                }
                if q_binom(n, k) != by_nk {
                    second = false;
                }
            }
        }
    }
    records.push(ok_or(
        id,
        format!("q-binomial symmetry up to n={top}"),
        sym,
        "symmetry q_binom(n,k) = q_binom(n,n-k) violated".into(),
    ));
    records.push(ok_or(
        id,
        "first dual recurrence".into(),
        first,
        "q_binom(n,k) = q_binom(n-1,k-1) + q^k q_binom(n-1,k) violated".into(),
    ));
    records.push(ok_or(
        id,
        "second dual recurrence".into(),
        second,
        "q_binom(n,k) = q^(n-k) q_binom(n-1,k-1) + q_binom(n-1,k) violated".into(),
    ));
    records
}

fn run_qbinom_at_one(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "qbinom-at-one";
    let top = ctx.n_or(12);
    let one = [(Var::Q, brat(1, 1))];
    let mut good = true;
    for n in 0..=top {
        for k in 0..=n {
            let at_one = q_binom(n, k).eval(&one).unwrap();
            if at_one != binom(n, k).eval(&[]).unwrap() {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("q-binomials at q=1 equal binomials up to n={top}"),
        good,
        "mismatch against the ordinary binomial".into(),
    )]
}

fn run_qbinom_transfer(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "qbinom-transfer";
    let top = ctx.n_or(12);
    let mut good = true;
    for n in 1..=top {
        for k in 1..=n {
            if q_int(k) * q_binom(n, k) != q_int(n) * q_binom(n - 1, k - 1) {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("[k][n choose k] = [n][n-1 choose k-1] up to n={top}"),
        good,
        "transfer identity violated".into(),
    )]
}

fn run_shift_eval(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "shift-eval-consistency";
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x5f5f);
    let mut good = true;
    for _ in 0..ctx.n_or(50) {
        let p = random_poly(&mut rng);
        let shifted = p.shift_vars(&[Var::Q]);
        let at_zero = shifted
            .eval(&[(Var::Q, brat(0, 1)), (Var::X, brat(2, 1)), (Var::Y, brat(3, 1))])
            .unwrap();
        let at_one = p
            .eval(&[(Var::Q, brat(1, 1)), (Var::X, brat(2, 1)), (Var::Y, brat(3, 1))])
            .unwrap();
        if at_zero != at_one {
            good = false;
        }
    }
    vec![ok_or(
        id,
        "shifting q then evaluating at 0 equals evaluating at 1".into(),
        good,
        "shift/eval consistency violated".into(),
    )]
}

fn run_ratfn_reduction(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "ratfn-reduction";
    let top = ctx.n_or(8);
    let mut good = true;
    for n in 1..=top {
        for d in 1..=top {
            let r = RatFn::new(q_fact(n), q_fact(d)).unwrap();
            let again = RatFn::new(r.num().clone(), r.den().clone()).unwrap();
            if again.num() != r.num() || again.den() != r.den() {
                good = false;
            }
            // The common q-factorial content cancels on construction.
            let inflated = RatFn::new(q_fact(n) * q_int(3), q_fact(d) * q_int(3)).unwrap();
            if inflated != r {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        "reducing a reduced fraction is the identity".into(),
        good,
        "reduction not idempotent".into(),
    )]
}

// ---------------------------------------------------------------------------
// matrixkit targets
// ---------------------------------------------------------------------------

fn random_lower(rng: &mut ChaCha8Rng, n: usize) -> TriMat<Poly> {
    let entries: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..=i).map(|_| rng.gen_range(-4..=4)).collect())
        .collect();
    TriMat::from_fn(n, Shape::Lower, |i, j| Poly::int(entries[i][j]))
}

fn run_truncation_stability(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "truncation-stability";
    let n = ctx.n_or(8);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xA11);
    let mut good = true;
    for _ in 0..10 {
        let a = random_lower(&mut rng, n);
        let b = random_lower(&mut rng, n);
        let ab = a.mul(&b).unwrap();
        for m in 1..=n {
            let direct = ab.truncate(m);
            let truncated = a.truncate(m).mul(&b.truncate(m)).unwrap();
            if matrices_equal(&direct, &truncated).is_some() {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("truncate-then-multiply equals multiply-then-truncate at N={n}"),
        good,
        "truncation not stable".into(),
    )]
}

fn run_det_multiplicativity(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "det-multiplicativity";
    let n = ctx.n_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xDE7);
    let mut good = true;
    for _ in 0..10 {
        let a = random_lower(&mut rng, n);
        let b = random_lower(&mut rng, n);
        let ab = a.mul(&b).unwrap();
        if bareiss_det(&ab) != bareiss_det(&a) * bareiss_det(&b) {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("det(AB) = det(A)det(B) for random {n}x{n} matrices"),
        good,
        "determinant not multiplicative".into(),
    )]
}

fn run_bidiagonal_inverse(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "bidiagonal-inverse";
    let n = ctx.n_or(8);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xB1D);
    let mut good = true;
    for _ in 0..10 {
        let weights: Vec<Poly> = (0..n).map(|_| random_poly(&mut rng)).collect();
        let a = {
            let weights = weights.clone();
            Sequence::new(move |i| weights[i].clone())
        };
        let neg = {
            let weights = weights.clone();
            Sequence::new(move |i| -weights[i].clone())
        };
        let product = build_inv_bidiagonal(n, &a)
            .mul(&build_bidiagonal(n, &Sequence::new(|_| Poly::one()), &neg))
            .unwrap();
        if matrices_equal(&product, &TriMat::identity(n)).is_some() {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("inverse-bidiagonal times bidiagonal is the identity at N={n}"),
        good,
        "inverse-bidiagonal identity violated".into(),
    )]
}

fn run_binomial_matrix_entries(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "binomial-matrix-entries";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    let net = match catalog("binomial").unwrap() {
        CatalogNet::Poly(net) => net,
        CatalogNet::Rational(_) => unreachable!("binomial catalog weights are polynomial"),
    };
    let path = net.path_matrix_transfer(n).unwrap();
    let closed = TriMat::from_fn(n, Shape::Lower, |i, j| {
        binom(i, j)
            * Poly::monomial(Var::X, (i - j) as u16, 1)
            * Poly::monomial(Var::Y, j as u16, 1)
    });
    records.push(matrix_record(
        id,
        format!("two-variable binomial path matrix matches its closed form at N={n}"),
        &path,
        &closed,
    ));
    let qz_net: PlanarNet<Poly> = PlanarNet::binomial_like(
        "q-binomial",
        |_, _| Poly::one(),
        |_, l| Poly::monomial(Var::Q, l as u16, 1) * Poly::var(Var::Z),
    );
    let qz_path = qz_net.path_matrix_transfer(n).unwrap();
    let qz_closed = TriMat::from_fn(n, Shape::Lower, |i, j| {
        q_binom(i, j) * Poly::monomial(Var::Z, (i - j) as u16, 1)
    });
    records.push(matrix_record(
        id,
        format!("weighted q-binomial path matrix matches its closed form at N={n}"),
        &qz_path,
        &qz_closed,
    ));
    records
}

fn run_binomial_matrix_minors(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "binomial-matrix-minors";
    let n = ctx.n_or(6);
    let b = TriMat::from_fn(n, Shape::Lower, |i, j| {
        binom(i, j)
            * Poly::monomial(Var::X, (i - j) as u16, 1)
            * Poly::monomial(Var::Y, j as u16, 1)
    });
    let report = check_tp(&b, "binomial-xy", 3.min(n), &Mode::Coefficientwise);
    vec![ok_or(
        id,
        format!(
            "all {} minors of order <= 3 of the binomial matrix are coefficientwise nonnegative",
            report.minors_checked
        ),
        report.verdict_positive(),
        format!("{} negative minors", report.failures.len()),
    )]
}

// ---------------------------------------------------------------------------
// networks targets
// ---------------------------------------------------------------------------

fn run_lgv_route_agreement(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "lgv-route-agreement";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    for &name in catalog_names() {
        let agree = match catalog(name).unwrap() {
            CatalogNet::Poly(net) => {
                let t = net.path_matrix_transfer(n).unwrap();
                let p = net.path_matrix_paths(n).unwrap();
                matrices_equal(&t, &p).is_none()
            }
            CatalogNet::Rational(net) => {
                let t = net.path_matrix_transfer(n).unwrap();
                let p = net.path_matrix_paths(n).unwrap();
                matrices_equal(&t, &p).is_none()
            }
        };
        records.push(ok_or(
            id,
            format!("transfer and path-sum routes agree for '{name}' at N={n}"),
            agree,
            "routes disagree".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x16F);
    let mut random_good = true;
    for _ in 0..50 {
        let alpha: Vec<i64> = (0..64).map(|_| rng.gen_range(0..=3)).collect();
        let beta: Vec<i64> = (0..64).map(|_| rng.gen_range(0..=3)).collect();
        let net: PlanarNet<Poly> = PlanarNet::binomial_like(
            "random",
            move |i, l| Poly::int(alpha[(7 * i + l) % 64]),
            move |i, l| Poly::int(beta[(5 * i + 3 * l) % 64]),
        );
        let t = net.path_matrix_transfer(6).unwrap();
        let p = net.path_matrix_paths(6).unwrap();
        if matrices_equal(&t, &p).is_some() {
            random_good = false;
        }
    }
    records.push(ok_or(
        id,
        "routes agree on 50 random-weight networks at N=6".into(),
        random_good,
        "routes disagree on a random network".into(),
    ));
    records
}

fn run_first_index_recurrence(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "first-index-recurrence";
    let n = ctx.n_or(7);
    let mut records = Vec::new();
    // Row-index-dependent weights: expansion along the first step.
    let row_net: PlanarNet<Poly> = PlanarNet::binomial_like(
        "row-dependent",
        |i, _| Poly::monomial(Var::X, i as u16, 1),
        |i, _| Poly::monomial(Var::Y, i as u16, 1),
    );
    let p = row_net.path_matrix_transfer(n).unwrap();
    let mut row_good = true;
    for r in 1..n {
        for k in 0..=r {
            let alpha = Poly::monomial(Var::X, r as u16, 1);
            let beta = Poly::monomial(Var::Y, r as u16, 1);
            let prev_diag = if k > 0 { p.get(r - 1, k - 1).clone() } else { Poly::zero() };
            let expect = alpha * prev_diag
                + beta * if k < r { p.get(r - 1, k).clone() } else { Poly::zero() };
            if p.get(r, k) != &expect {
                row_good = false;
            }
        }
    }
    records.push(ok_or(
        id,
        format!("row-dependent two-term recurrence holds symbolically at N={n}"),
        row_good,
        "row-dependent recurrence violated".into(),
    ));
    // Column-index-dependent weights: expansion along the last step.
    let col_net: PlanarNet<Poly> = PlanarNet::binomial_like(
        "column-dependent",
        |_, l| Poly::monomial(Var::X, l as u16, 1),
        |_, l| Poly::monomial(Var::Y, l as u16, 1),
    );
    let c = col_net.path_matrix_transfer(n).unwrap();
    let mut col_good = true;
    for r in 1..n {
        for k in 0..=r {
            let alpha = Poly::monomial(Var::X, k as u16, 1);
            let beta = Poly::monomial(Var::Y, k as u16, 1);
            let prev_diag = if k > 0 { c.get(r - 1, k - 1).clone() } else { Poly::zero() };
            let expect = alpha * prev_diag
                + beta * if k < r { c.get(r - 1, k).clone() } else { Poly::zero() };
            if c.get(r, k) != &expect {
                col_good = false;
            }
        }
    }
    records.push(ok_or(
        id,
        format!("column-dependent two-term recurrence holds symbolically at N={n}"),
        col_good,
        "column-dependent recurrence violated".into(),
    ));
    records
}

fn run_switch_transform(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "switch-transform";
    let n = ctx.n_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x51C);
    let mut good = true;
    let mut attempted = 0;
    while attempted < 100 {
        let a_vals: Vec<BigRational> = (0..=n + 1).map(|_| random_rational(&mut rng)).collect();
        let b_vals: Vec<BigRational> = (0..=n + 1).map(|_| random_rational(&mut rng)).collect();
        if a_vals
            .iter()
            .zip(&b_vals)
            .any(|(a, b)| (a + b) == brat(0, 1))
        {
            continue; // resample: the transform needs nonzero pair sums
        }
        attempted += 1;
        let a = {
            let v = a_vals.clone();
            Sequence::new(move |i| v[i].clone())
        };
        let b = {
            let v = b_vals.clone();
            Sequence::new(move |i| v[i].clone())
        };
        let (a2, b2) = switch_transform(&a, &b, n).unwrap();
        let ones = Sequence::new(|_| BigRational::from_integer(BigInt::from(1)));
        let lhs = build_bidiagonal(n, &ones, &a)
            .mul(&build_inv_bidiagonal(n, &b))
            .unwrap();
        let rhs = build_inv_bidiagonal(n - 1, &b2)
            .shifted_embed(1, n)
            .mul(&build_bidiagonal(n, &ones, &a2))
            .unwrap();
        if matrices_equal(&lhs, &rhs).is_some() {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("bidiagonal switch identity on 100 random rational weight pairs at N={n}"),
        good,
        "switch identity violated".into(),
    )]
}

fn run_unit_alpha_triangular(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "unit-alpha-triangular";
    let n = ctx.n_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x7A1);
    let mut good = true;
    for _ in 0..20 {
        let beta: Vec<i64> = (0..64).map(|_| rng.gen_range(-3..=3)).collect();
        let net: PlanarNet<Poly> = PlanarNet::binomial_like(
            "unit-alpha",
            |_, _| Poly::one(),
            move |i, l| Poly::int(beta[(11 * i + l) % 64]),
        );
        let p = net.path_matrix_transfer(n).unwrap();
        for i in 0..n {
            if p.get(i, i) != &Poly::one() {
                good = false;
            }
        }
        if p.shape() != Shape::Lower {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("unit horizontal weights give unit-lower-triangular path matrices at N={n}"),
        good,
        "path matrix not unit lower triangular".into(),
    )]
}

// ---------------------------------------------------------------------------
// families targets
// ---------------------------------------------------------------------------

fn run_forest_tree_ratio(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "forest-tree-ratio";
    let n = ctx.n_or(8);
    let f = forests_matrix(n + 1);
    let t = trees_matrix(n + 1);
    let mut good = true;
    for i in 1..=n {
        for k in 1..=i {
            let lhs = f.get(i, k) * Poly::int(i as i64);
            let rhs = t.get(i, k) * Poly::int(k as i64);
            if lhs != rhs {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("n*f(n,k) = k*t(n,k) up to n={n}"),
        good,
        "ratio identity violated".into(),
    )]
}

fn run_tree_column_coincidence(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "tree-column-coincidence";
    let n = ctx.n_or(8);
    let t = trees_matrix(n + 1);
    let tq = q_trees_matrix(n + 1);
    let mut good = true;
    for i in 1..=n {
        if t.get(i, 0) != t.get(i, 1) || tq.get(i, 0) != tq.get(i, 1) {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("first two tree columns coincide up to n={n}, integer and q forms"),
        good,
        "column coincidence violated".into(),
    )]
}

fn run_deleted_forest_factorization(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "deleted-forest-factorization";
    let n = ctx.n_or(8);
    let f = forests_matrix(n + 1);
    let t = trees_matrix(n);
    let b = TriMat::from_fn(n, Shape::Lower, binom);
    let tb = t.mul(&b).unwrap();
    let deleted = TriMat::from_fn(n, Shape::Lower, |i, j| f.get(i + 1, j + 1).clone());
    vec![matrix_record(
        id,
        format!("forest matrix minus first row/column factors as trees x binomial at N={n}"),
        &deleted,
        &tb,
    )]
}

fn run_q_tree_factorization(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "q-tree-factorization";
    let n = ctx.n_or(8);
    let fq = q_forests_matrix(n);
    let tq = q_trees_matrix(n);
    let t = build_inv_bidiagonal(
        n,
        &Sequence::new(|k| Poly::monomial(Var::Q, k as u16, 1) * q_int(k + 1)),
    );
    let product = fq.mul(&t).unwrap();
    vec![matrix_record(
        id,
        format!("q-tree matrix equals q-forest matrix times inverse bidiagonal at N={n}"),
        &product,
        &tq,
    )]
}

fn run_q_transfer_entrywise(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "q-transfer-entrywise";
    let n = ctx.n_or(8);
    let fq = q_forests_matrix(n + 1);
    let tq = q_trees_matrix(n + 1);
    let mut good = true;
    for i in 1..=n {
        for k in 1..=i {
            if fq.get(i, k) * q_int(i) != tq.get(i, k) * q_int(k) {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("[n] f(q) = [k] t(q) entrywise up to n={n}"),
        good,
        "q-transfer identity violated".into(),
    )]
}

fn run_row_sums(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "row-sums";
    let n = ctx.n_or(8);
    let f = forests_matrix(n + 1);
    let t = trees_matrix(n + 1);
    let mut good = true;
    for i in 0..=n {
        let fsum: BigInt = f.row(i).iter().map(|p| p.eval_all_ones()).sum();
        let tsum: BigInt = t.row(i).iter().map(|p| p.eval_all_ones()).sum();
        if fsum != BigInt::from(i as u64 + 1).pow(i.saturating_sub(1) as u32) {
            good = false;
        }
        if tsum != BigInt::from(i as u64 + 1).pow(i as u32) {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("row sums are (n+1)^(n-1) and (n+1)^n up to n={n}"),
        good,
        "row sums wrong".into(),
    )]
}

fn run_degree_palindromy(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "degree-palindromy";
    let n = ctx.n_or(8);
    let fq = q_forests_matrix(n + 1);
    let tq = q_trees_matrix(n + 1);
    let mut good = true;
    for i in 1..=n {
        for k in 1..=i {
            let fd = fq.get(i, k).degree_in(Var::Q) as i64;
            if fd != ((i - 1) * (i - 1)) as i64 - ((k - 1) * (k - 1)) as i64 {
                good = false;
            }
            if !fq.get(i, k).is_self_reciprocal_in(Var::Q) {
                good = false;
            }
            let td = tq.get(i, k).degree_in(Var::Q) as i64;
            if td != (i * (i - 1)) as i64 - (k * (k - 1)) as i64 {
                good = false;
            }
            if !tq.get(i, k).is_self_reciprocal_in(Var::Q) {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("q-degrees and palindromy hold up to n={n}"),
        good,
        "degree or palindromy violated".into(),
    )]
}

fn run_rst_specialization(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "rst-specialization";
    let n = ctx.n_or(6);
    let q = Poly::var(Var::Q);
    let subs = [
        (Var::R, q.clone()),
        (Var::S, q.clone()),
        (Var::G, q.clone()),
    ];
    let f_spec = rst_forests_matrix(n).map(|p| p.subst_many(&subs));
    let t_spec = rst_trees_matrix(n).map(|p| p.subst_many(&subs));
    let mut records = Vec::new();
    records.push(matrix_record(
        id,
        format!("three-variable forest matrix at r=s=t=q equals the q form at N={n}"),
        &f_spec,
        &q_forests_matrix(n),
    ));
    records.push(matrix_record(
        id,
        format!("three-variable tree matrix at r=s=t=q equals the q form at N={n}"),
        &t_spec,
        &q_trees_matrix(n),
    ));
    records
}

fn run_stirling_e_form(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "stirling-e-form";
    let n = ctx.n_or(8);
    let g = pq_stirling_matrix(n);
    let mut records = Vec::new();
    let elem = TriMat::from_fn(n, Shape::Lower, |i, k| {
        let xs: Vec<Poly> = (1..i).map(pq_int).collect();
        crate::families::elem_sym(&xs, i - k)
    });
    records.push(matrix_record(
        id,
        format!("Stirling-like entries equal elementary symmetric functions at N={n}"),
        &g,
        &elem,
    ));
    let mut rec_good = true;
    for i in 1..n {
        for k in 0..=i {
            let prev_diag = if k > 0 { g.get(i - 1, k - 1).clone() } else { Poly::zero() };
            let prev = if k < i { g.get(i - 1, k).clone() } else { Poly::zero() };
            if g.get(i, k) != &(prev_diag + pq_int(i - 1) * prev) {
                rec_good = false;
            }
        }
    }
    records.push(ok_or(
        id,
        format!("two-term recurrence with (p,q)-integer weights holds at N={n}"),
        rec_good,
        "recurrence violated".into(),
    ));
    records
}

fn run_rothe_convolution(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "rothe-convolution";
    let n = ctx.n_or(6);
    let rothe = rothe_seq();
    // The convolution identity in x and y: substitute a fresh variable pair
    // (x stays, y enters via z to keep the alphabet fixed).
    let y = Poly::var(Var::Z);
    let mut good = true;
    for m in 0..=n {
        let lhs = rothe.at(m).subst_many(&[(Var::X, Poly::var(Var::X) + y.clone())]);
        let mut rhs = Poly::zero();
        for k in 0..=m {
            let left = rothe.at(k);
            let right = rothe.at(m - k).subst_many(&[(Var::X, y.clone())]);
            rhs += binom(m, k) * left * right;
        }
        if lhs != rhs {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("binomial convolution of the Abel-type sequence holds up to n={n}"),
        good,
        "convolution identity violated".into(),
    )]
}

fn run_lah_bessel_specialization(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "lah-bessel-specialization";
    let n = ctx.n_or(6);
    let ones = Sequence::new(|_| Poly::one());
    let lah = generic_lah(n, &ones).unwrap();
    let bessel_at_one = bessel_matrix(n).unwrap().map(|p| {
        p.subst_many(&[
            (Var::R, Poly::one()),
            (Var::S, Poly::one()),
            (Var::M, Poly::one()),
            (Var::Y, Poly::one()),
        ])
    });
    vec![matrix_record(
        id,
        format!("generic Lah at phi=1 equals the Bessel-like matrix at all-ones, N={n}"),
        &lah,
        &bessel_at_one,
    )]
}

fn run_route_agreement(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "route-agreement";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    let pairs: [(&str, &str); 4] = [
        ("q-forests", "qforest-bidiagonal"),
        ("improper-forests", "improper-binom"),
        ("qyz-forests", "qyz-binom"),
        ("eightvar-forests", "eightvar-bidiagonal"),
    ];
    for (family, net_name) in pairs {
        let (closed, _) = family_matrix(family, n).unwrap();
        let net = match catalog(net_name).unwrap() {
            CatalogNet::Poly(net) => net,
            CatalogNet::Rational(_) => unreachable!("catalog route uses polynomial weights"),
        };
        let routed = net.path_matrix_transfer(n).unwrap();
        records.push(matrix_record(
            id,
            format!("'{family}' closed form matches network '{net_name}' at N={n}"),
            &closed,
            &routed,
        ));
    }
    let (shifted, _) = family_matrix("q-forests-shifted", n).unwrap();
    let rational = match catalog("qforest-rational").unwrap() {
        CatalogNet::Rational(net) => net,
        CatalogNet::Poly(_) => unreachable!("shifted route uses rational weights"),
    };
    let lifted = shifted.map(|p| RatFn::from_poly(p.clone()));
    records.push(matrix_record(
        id,
        format!("once-shifted q-forest closed form matches its rational network at N={n}"),
        &lifted,
        &rational.path_matrix_transfer(n).unwrap(),
    ));
    records
}

// ---------------------------------------------------------------------------
// combinat targets
// ---------------------------------------------------------------------------

fn oracle_target(
    id: &'static str,
    weighting: Weighting,
    default_n: usize,
    closed: fn(usize) -> TriMat<Poly>,
    ctx: &Ctx,
) -> Vec<CheckRecord> {
    let top = ctx.n_or(default_n);
    let closed_matrix = closed(top + 1);
    let mut records = Vec::new();
    for n in 1..=top {
        let mut good = true;
        let mut detail = String::new();
        for k in 1..=n {
            let brute = forest_genpoly(n, k, weighting);
            if &brute != closed_matrix.get(n, k) {
                good = false;
                detail = format!(
                    "(n,k)=({n},{k}): oracle {brute}, closed form {}",
                    closed_matrix.get(n, k)
                );
                break;
            }
        }
        records.push(ok_or(
            id,
            format!("exhaustive statistic sum equals closed form for all k at n={n}"),
            good,
            detail,
        ));
    }
    records
}

fn run_oracle_q(ctx: &Ctx) -> Vec<CheckRecord> {
    oracle_target("oracle-q-statistic", Weighting::QStatistic, 7, q_forests_matrix, ctx)
}

fn run_oracle_rst(ctx: &Ctx) -> Vec<CheckRecord> {
    oracle_target(
        "oracle-rst-statistic",
        Weighting::RstStatistic,
        7,
        rst_forests_matrix,
        ctx,
    )
}

fn run_oracle_leaf(ctx: &Ctx) -> Vec<CheckRecord> {
    oracle_target(
        "oracle-leaf-variant",
        Weighting::RstLeafVariant,
        6,
        rst_trees_matrix,
        ctx,
    )
}

fn run_oracle_yz(ctx: &Ctx) -> Vec<CheckRecord> {
    fn improper(n: usize) -> TriMat<Poly> {
        improper_forests_matrix(n).unwrap()
    }
    oracle_target("oracle-improper-edges", Weighting::YzImproper, 7, improper, ctx)
}

fn run_oracle_permutations(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "oracle-permutations";
    let top = ctx.n_or(8);
    let g = pq_stirling_matrix(top + 1).map(|p| p.subst_many(&[(Var::P, Poly::one())]));
    let mut good = true;
    let mut detail = String::new();
    for n in 1..=top {
        let by_perms = perm_genpoly(n);
        for k in 1..=n {
            if by_perms[k] != *g.get(n, k) {
                good = false;
                detail = format!("(n,k)=({n},{k}) mismatch");
            }
        }
    }
    vec![ok_or(
        id,
        format!("left-to-right-maximum statistics match the Stirling-like column up to n={top}"),
        good,
        detail,
    )]
}

fn run_oracle_matchings(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "oracle-matchings";
    let top = ctx.n_or(5);
    let lam = Sequence::new(|i| pq_int_in(Var::R, Var::S, i));
    let coeffs = sfraction_expand(&lam, top);
    let mut good = true;
    for n in 0..=top {
        if coeffs[n] != matching_genpoly(n) {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("crossing/nesting series coefficients match the matching oracle up to n={top}"),
        good,
        "series coefficient mismatch".into(),
    )]
}

fn run_oracle_touchard(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "oracle-touchard";
    let top = ctx.n_or(8);
    let m = bessel_matrix(top + 1).unwrap();
    let ones = [
        (Var::S, Poly::one()),
        (Var::M, Poly::one()),
        (Var::Y, Poly::one()),
    ];
    let mut good = true;
    let mut detail = String::new();
    for n in 1..=top {
        let closed = touchard_riordan(n).unwrap();
        let column = m.get(n, 1).subst_many(&ones);
        if closed != column {
            good = false;
            detail = format!("n={n}: alternating-sum form {closed}, matrix column {column}");
        }
    }
    vec![ok_or(
        id,
        format!("alternating-binomial crossing polynomial matches the matrix column up to n={top}"),
        good,
        detail,
    )]
}

fn run_prufer_round_trip(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "prufer-round-trip";
    let top = ctx.n_or(7);
    let mut records = Vec::new();
    for n in 1..=top {
        let mut good = true;
        let mut count = 0usize;
        for k in 1..=n {
            for forest in enum_forests(n, k) {
                count += 1;
                let code = prufer_encode(&forest);
                let back = prufer_decode(&code).unwrap();
                if back != forest {
                    good = false;
                }
            }
        }
        records.push(ok_or(
            id,
            format!("decode(encode(f)) = f over all {count} forests on {n} vertices"),
            good,
            "round trip failed".into(),
        ));
    }
    records
}

fn run_sfraction_round_trip(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "sfraction-round-trip";
    let order = ctx.n_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x5F);
    let mut good = true;
    for _ in 0..10 {
        let lams: Vec<Poly> = (0..=order)
            .map(|_| {
                // Keep coefficients positive so no level collapses to zero.
                Poly::one()
                    + Poly::monomial(Var::Q, rng.gen_range(0..=2), rng.gen_range(1..=3))
                    + Poly::monomial(Var::X, rng.gen_range(0..=2), rng.gen_range(0..=2))
            })
            .collect();
        let seq = {
            let v = lams.clone();
            Sequence::new(move |i| v[(i - 1).min(v.len() - 1)].clone())
        };
        let series = sfraction_expand(&seq, order);
        let back = series_to_sfraction(&series, order).unwrap();
        for (i, lam) in back.iter().enumerate() {
            if *lam != seq.at(i + 1) {
                good = false;
            }
        }
    }
    vec![ok_or(
        id,
        format!("continued-fraction coefficients round-trip at order {order}"),
        good,
        "round trip failed".into(),
    )]
}

fn run_forest_census(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "forest-census";
    let top = ctx.n_or(7);
    let mut records = Vec::new();
    for n in 1..=top {
        let mut total = 0usize;
        for k in 1..=n {
            total += enum_forests(n, k).len();
        }
        let expect = BigInt::from(n as u64 + 1).pow((n - 1) as u32);
        records.push(eq_record(
            id,
            format!("forest count on {n} vertices is (n+1)^(n-1)"),
            &BigInt::from(total),
            &expect,
        ));
    }
    // Leaf-variant census: forests on n+1 vertices, vertex n+1 childless,
    // counted by binom(n,k) n^(n-k).
    let n = 5usize.min(top);
    let mut good = true;
    for k in 1..=n {
        let count = enum_forests(n + 1, k + 1)
            .into_iter()
            .filter(|f| f.is_leaf(n + 1))
            .count();
        let expect = binom(n, k).eval_all_ones()
            * BigInt::from(n as u64).pow((n - k) as u32);
        if BigInt::from(count) != expect {
            good = false;
        }
    }
    records.push(ok_or(
        id,
        format!("leaf-variant census matches binom(n,k) n^(n-k) at n={n}"),
        good,
        "leaf-variant census mismatch".into(),
    ));
    records
}

// ---------------------------------------------------------------------------
// tpcheck targets
// ---------------------------------------------------------------------------

fn run_integer_tp_desk(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "integer-tp-desk";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    for (m, name) in [(forests_matrix(n), "forests"), (trees_matrix(n), "trees")] {
        let report = check_tp(&m, name, 4.min(n), &Mode::Coefficientwise);
        records.push(ok_or(
            id,
            format!(
                "{name} truncation N={n}: {} minors of order <= 4 nonnegative",
                report.minors_checked
            ),
            report.verdict_positive(),
            format!("{} negative minors", report.failures.len()),
        ));
    }
    records
}

fn run_q_tp_desk(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "q-tp-desk";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    for (m, name) in [(q_forests_matrix(n), "q-forests"), (q_trees_matrix(n), "q-trees")] {
        let report = check_tp(&m, name, 4.min(n), &Mode::Coefficientwise);
        records.push(ok_or(
            id,
            format!(
                "{name} truncation N={n}: {} minors of order <= 4 coefficientwise nonnegative",
                report.minors_checked
            ),
            report.verdict_positive(),
            format!("{} negative minors", report.failures.len()),
        ));
    }
    records
}

fn run_shifted_forest_route(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "shifted-forest-route";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    let closed = q_forests_shifted_matrix(n).map(|p| RatFn::from_poly(p.clone()));
    let net = match catalog("qforest-rational").unwrap() {
        CatalogNet::Rational(net) => net,
        CatalogNet::Poly(_) => unreachable!("shifted network uses rational weights"),
    };
    records.push(matrix_record(
        id,
        format!("rational-weight network reproduces the once-shifted matrix symbolically at N={n}"),
        &net.path_matrix_transfer(n).unwrap(),
        &closed,
    ));
    let big = n.max(10);
    for q in [brat(1, 1), brat(2, 1), brat(1, 2), brat(3, 1)] {
        let numeric_net: PlanarNet<BigRational> = {
            let q = q.clone();
            PlanarNet::binomial_like(
                "shifted-numeric",
                |_, _| BigRational::from_integer(BigInt::from(1)),
                move |i, l| {
                    let qi = |m: usize| -> BigRational {
                        (0..m).fold(BigRational::from_integer(BigInt::from(0)), |acc, e| {
                            acc + pow_rat(&q, e)
                        })
                    };
                    pow_rat(&q, l) * qi(i) * pow_ratio(&qi(i + l + 1), &qi(i + l), i)
                },
            )
        };
        let path = numeric_net.path_matrix_transfer(big).unwrap();
        let closed_at = q_forests_shifted_matrix(big).map(|p| p.eval(&[(Var::Q, q.clone())]).unwrap());
        records.push(matrix_record(
            id,
            format!("pointwise agreement at q={q} and N={big}"),
            &path,
            &closed_at,
        ));
    }
    records
}

fn pow_rat(q: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for _ in 0..e {
        acc *= q;
    }
    acc
}

fn pow_ratio(num: &BigRational, den: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for _ in 0..e {
        acc *= num / den;
    }
    acc
}

fn run_telescoping_sum(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "telescoping-sum";
    let n = ctx.n_or(7);
    vec![ok_or(
        id,
        format!("rational telescoping column-sum identity for all windows n<={n}"),
        qforest_telescoping_identity(n),
        "identity violated".into(),
    )]
}

fn run_q_forest_route(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "q-forest-route";
    let n = ctx.n_or(10);
    let net = match catalog("qforest-bidiagonal").unwrap() {
        CatalogNet::Poly(net) => net,
        CatalogNet::Rational(_) => unreachable!("bidiagonal route uses polynomial weights"),
    };
    vec![matrix_record(
        id,
        format!("polynomial factored network reproduces the q-forest matrix at N={n}"),
        &net.path_matrix_transfer(n).unwrap(),
        &q_forests_matrix(n),
    )]
}

fn run_factorization_routes(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "factorization-routes";
    let n = ctx.n_or(7);
    let mut records = Vec::new();
    let closed = q_forests_matrix(n).map(|p| RatFn::from_poly(p.clone()));
    for name in ["qforest-lonly", "qforest-tonly"] {
        let net = match catalog(name).unwrap() {
            CatalogNet::Rational(net) => net,
            CatalogNet::Poly(_) => unreachable!("factored route uses rational weights"),
        };
        records.push(matrix_record(
            id,
            format!("rational factorization '{name}' reproduces the q-forest matrix at N={n}"),
            &net.path_matrix_transfer(n).unwrap(),
            &closed,
        ));
    }
    records
}

fn run_improper_forest_route(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "improper-forest-route";
    let n = ctx.n_or(8);
    let mut records = Vec::new();
    let closed = improper_forests_matrix(n).unwrap();
    let net = match catalog("improper-binom").unwrap() {
        CatalogNet::Poly(net) => net,
        CatalogNet::Rational(_) => unreachable!("improper network uses polynomial weights"),
    };
    records.push(matrix_record(
        id,
        format!("improper-edge network reproduces the two-variable forest matrix at N={n}"),
        &net.path_matrix_transfer(n).unwrap(),
        &closed,
    ));
    let m = n.min(7);
    let production = improper_production_matrix(m + 1);
    let output = output_matrix(&production, m).unwrap();
    records.push(matrix_record(
        id,
        format!("output matrix of the two-variable production matrix matches at N={m}"),
        &output,
        &improper_forests_matrix(m).unwrap(),
    ));
    records
}

fn run_neville_integer_pivots(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "neville-integer-pivots";
    let n = ctx.n_or(7);
    let at_one = q_forests_shifted_matrix(n).map(|p| p.eval(&[(Var::Q, brat(1, 1))]).unwrap());
    let (table, _) = neville(&at_one).unwrap();
    let mut good = table.certificate_available();
    for (i, l, value) in table.entries() {
        let mut expect = brat(i as i64, 1);
        for _ in 0..i {
            expect *= brat((i + l + 1) as i64, (i + l) as i64);
        }
        if value != expect {
            good = false;
        }
    }
    vec![ok_or(
        id,
        format!("elimination pivots at q=1 equal i((i+l+1)/(i+l))^i as exact rationals, N={n}"),
        good,
        "pivot mismatch".into(),
    )]
}

fn run_eightvar_tp3(ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "eightvar-tp3";
    let n = ctx.n_or(6);
    let m = eightvar_forests_matrix(n).unwrap();
    let report = check_tp(&m, "eightvar-forests", 3.min(n), &Mode::Coefficientwise);
    vec![ok_or(
        id,
        format!(
            "eight-variable truncation N={n}: {} minors of order <= 3 coefficientwise nonnegative",
            report.minors_checked
        ),
        report.verdict_positive(),
        format!("{} negative minors", report.failures.len()),
    )]
}

// ---------------------------------------------------------------------------
// Pinned negative results
// ---------------------------------------------------------------------------

fn run_rst_not_tp2(_ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "rst-not-tp2";
    let mut records = Vec::new();
    let f = rst_forests_matrix(4);
    let f_minor = minor_det(&f, &[2, 3], &[1, 2]);
    let f_expect = (Poly::one() + Poly::var(Var::R) + Poly::monomial(Var::R, 2, 1))
        * (Poly::var(Var::S) + Poly::var(Var::R) * (Poly::one() + Poly::var(Var::S))
            - Poly::var(Var::G) * (Poly::one() + Poly::var(Var::G)));
    records.push(eq_record(
        id,
        "forest matrix rows {2,3} x cols {1,2} minor equals the factored form".into(),
        &f_minor,
        &f_expect,
    ));
    records.push(ok_or(
        id,
        "that minor has a negative coefficient".into(),
        !f_minor.is_coeff_nonneg(),
        "minor unexpectedly nonnegative".into(),
    ));
    let t = rst_trees_matrix(3);
    let t_minor = minor_det(&t, &[1, 2], &[0, 1]);
    let t_expect = Poly::monomial(Var::R, 2, 1) + Poly::var(Var::S)
        - Poly::var(Var::G)
        - Poly::var(Var::R) * Poly::var(Var::G);
    records.push(eq_record(
        id,
        "tree matrix rows {1,2} x cols {0,1} minor equals the displayed value".into(),
        &t_minor,
        &t_expect,
    ));
    records.push(ok_or(
        id,
        "that minor has a negative coefficient".into(),
        !t_minor.is_coeff_nonneg(),
        "minor unexpectedly nonnegative".into(),
    ));
    records
}

fn run_hankel_negative_minors(_ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "hankel-negative-minors";
    let mut records = Vec::new();
    // Rescaled q-forest row-generating polynomials: a1*a3 - a2^2.
    let bar = abel_bar_seq();
    let bar_minor = &bar.at(1) * &bar.at(3) - &bar.at(2) * &bar.at(2);
    records.push(ok_or(
        id,
        "rescaled q-forest Hankel 2x2 (indices 1..3) has a negative coefficient".into(),
        !bar_minor.is_coeff_nonneg(),
        format!("minor {bar_minor} unexpectedly nonnegative"),
    ));
    // Stirling-cycle moment sequence: c1*c3 - c2^2 = (p+q-1)(x^3+x^2).
    let c = stirling_cycle_seq();
    let c_minor = &c.at(1) * &c.at(3) - &c.at(2) * &c.at(2);
    let x = Poly::var(Var::X);
    let c_expect =
        (Poly::var(Var::P) + Poly::var(Var::Q) - Poly::one()) * (&x * &x * &x + &x * &x);
    records.push(eq_record(
        id,
        "Stirling-cycle Hankel 2x2 (indices 1..3) equals its factored form".into(),
        &c_minor,
        &c_expect,
    ));
    records.push(ok_or(
        id,
        "that minor has a negative coefficient".into(),
        !c_minor.is_coeff_nonneg(),
        "minor unexpectedly nonnegative".into(),
    ));
    // Bessel-like row-generating polynomials: M1*M3 - M2^2.
    let m = bessel_matrix(4).unwrap();
    let gens = row_gen_polys(&m, Var::X);
    let m_minor = &gens[1] * &gens[3] - &gens[2] * &gens[2];
    records.push(ok_or(
        id,
        "Bessel-like Hankel 2x2 (indices 1..3) has a negative coefficient".into(),
        !m_minor.is_coeff_nonneg(),
        format!("minor {m_minor} unexpectedly nonnegative"),
    ));
    records
}

// ---------------------------------------------------------------------------
// cli self-checks
// ---------------------------------------------------------------------------

fn run_report_determinism(_ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "report-determinism";
    let budget = Budget::default();
    let render = || {
        let mut report = conjecture_suite("modFq", Some(3), None, &budget).unwrap();
        report.wall_time_ms = 0;
        crate::report::render_json(&report).unwrap()
    };
    let first = render();
    let second = render();
    vec![ok_or(
        id,
        "identical runs render byte-identical reports".into(),
        first == second,
        "report bytes differ between identical runs".into(),
    )]
}

fn run_manifest_coverage(_ctx: &Ctx) -> Vec<CheckRecord> {
    let id = "manifest-coverage";
    let missing: Vec<&str> = manifest()
        .iter()
        .map(|(target, _)| *target)
        .filter(|t| find_target(t).is_none())
        .collect();
    let unlisted: Vec<&str> = targets()
        .iter()
        .map(|t| t.id)
        .filter(|id| !manifest().iter().any(|(t, _)| t == id))
        .collect();
    vec![ok_or(
        id,
        "every manifest entry is a registered target and vice versa".into(),
        missing.is_empty() && unlisted.is_empty(),
        format!("missing targets: {missing:?}; unlisted targets: {unlisted:?}"),
    )]
}

/// The invariant manifest: one entry per documented library invariant,
/// pairing the verify target id with the invariant it re-checks.
pub fn manifest() -> &'static [(&'static str, &'static str)] {
    &[
        ("ring-axioms", "polynomial ring axioms on random inputs"),
        ("qbinom-recurrences", "q-binomial symmetry and dual recurrences"),
        ("qbinom-at-one", "q-binomials specialize to binomials at q=1"),
        ("qbinom-transfer", "q-integer transfer identity for q-binomials"),
        ("shift-eval-consistency", "variable shift composed with evaluation"),
        ("ratfn-reduction", "rational-function reduction is idempotent"),
        ("truncation-stability", "triangular truncation commutes with products"),
        ("det-multiplicativity", "exact determinants are multiplicative"),
        ("bidiagonal-inverse", "inverse-bidiagonal builder inverts the bidiagonal"),
        ("binomial-matrix-entries", "weighted binomial matrices match closed forms"),
        ("binomial-matrix-minors", "weighted binomial matrix is coefficientwise TP at order 3"),
        ("lgv-route-agreement", "transfer and path-sum routes agree"),
        ("first-index-recurrence", "two-term recurrences for index-dependent weights"),
        ("switch-transform", "bidiagonal switch identity on random weights"),
        ("unit-alpha-triangular", "unit horizontal weights give unit triangular matrices"),
        ("forest-tree-ratio", "entrywise ratio between forest and tree counts"),
        ("tree-column-coincidence", "first two tree columns coincide"),
        ("deleted-forest-factorization", "deleted forest matrix factors through trees"),
        ("q-tree-factorization", "q-tree matrix factors through the q-forest matrix"),
        ("q-transfer-entrywise", "q-integer transfer identity between the q families"),
        ("row-sums", "forest and tree row sums"),
        ("degree-palindromy", "q-entry degrees and palindromy"),
        ("rst-specialization", "three-variable matrices specialize to the q forms"),
        ("stirling-e-form", "Stirling-like entries as elementary symmetric functions"),
        ("rothe-convolution", "binomial convolution of the Abel-type sequence"),
        ("lah-bessel-specialization", "generic Lah specializes to the Bessel-like matrix"),
        ("route-agreement", "closed forms match network constructions"),
        ("oracle-q-statistic", "q-statistic oracle equals the closed form"),
        ("oracle-rst-statistic", "three-statistic oracle equals the closed form"),
        ("oracle-leaf-variant", "leaf-variant oracle equals the tree closed form"),
        ("oracle-improper-edges", "improper-edge oracle equals the closed form"),
        ("oracle-permutations", "permutation statistics match the Stirling-like matrix"),
        ("oracle-matchings", "matching oracle matches the continued-fraction series"),
        ("oracle-touchard", "alternating-binomial form matches the matrix column"),
        ("prufer-round-trip", "sequence encoding of forests round-trips"),
        ("sfraction-round-trip", "continued-fraction expansion round-trips"),
        ("forest-census", "forest counts match the closed-form census"),
        ("integer-tp-desk", "integer matrices are TP at desk scale"),
        ("q-tp-desk", "q-matrices are coefficientwise TP at desk scale"),
        ("shifted-forest-route", "rational network reproduces the shifted matrix"),
        ("telescoping-sum", "telescoping column-sum identity"),
        ("q-forest-route", "factored network reproduces the q-forest matrix"),
        ("factorization-routes", "both rational factorizations reproduce the q-forest matrix"),
        ("improper-forest-route", "two-variable network and production routes agree"),
        ("neville-integer-pivots", "elimination pivots at q=1 are the exact rationals"),
        ("eightvar-tp3", "eight-variable truncation passes the order-3 sweep"),
        ("rst-not-tp2", "pinned negative minors of the three-variable matrices"),
        ("hankel-negative-minors", "pinned negative Hankel minors"),
        ("report-determinism", "identical runs render identical reports"),
        ("manifest-coverage", "target registry and manifest agree"),
    ]
}

fn targets() -> &'static [Target] {
    static TARGETS: &[Target] = &[
        Target {
            id: "ring-axioms",
            aliases: &[],
            module: "polyring",
            summary: "associativity, distributivity, commutativity on random polynomials",
            run: run_ring_axioms,
        },
        Target {
            id: "qbinom-recurrences",
            aliases: &[],
            module: "polyring",
            summary: "q-binomial symmetry and both dual recurrences",
            run: run_qbinom_recurrences,
        },
        Target {
            id: "qbinom-at-one",
            aliases: &[],
            module: "polyring",
            summary: "q-binomials at q=1 equal binomial coefficients",
            run: run_qbinom_at_one,
        },
        Target {
            id: "qbinom-transfer",
            aliases: &[],
            module: "polyring",
            summary: "[k] q_binom(n,k) = [n] q_binom(n-1,k-1)",
            run: run_qbinom_transfer,
        },
        Target {
            id: "shift-eval-consistency",
            aliases: &[],
            module: "polyring",
            summary: "shift then evaluate at 0 equals evaluate at 1",
            run: run_shift_eval,
        },
        Target {
            id: "ratfn-reduction",
            aliases: &[],
            module: "polyring",
            summary: "rational-function reduction is idempotent",
            run: run_ratfn_reduction,
        },
        Target {
            id: "truncation-stability",
            aliases: &[],
            module: "matrixkit",
            summary: "truncation commutes with triangular products",
            run: run_truncation_stability,
        },
        Target {
            id: "det-multiplicativity",
            aliases: &[],
            module: "matrixkit",
            summary: "det(AB) = det(A) det(B) on random triangular matrices",
            run: run_det_multiplicativity,
        },
        Target {
            id: "bidiagonal-inverse",
            aliases: &[],
            module: "matrixkit",
            summary: "inverse-bidiagonal times bidiagonal is the identity",
            run: run_bidiagonal_inverse,
        },
        Target {
            id: "binomial-matrix-entries",
            aliases: &[],
            module: "matrixkit",
            summary: "weighted binomial matrices match their closed forms",
            run: run_binomial_matrix_entries,
        },
        Target {
            id: "binomial-matrix-minors",
            aliases: &[],
            module: "matrixkit",
            summary: "weighted binomial matrix minors are coefficientwise nonnegative",
            run: run_binomial_matrix_minors,
        },
        Target {
            id: "lgv-route-agreement",
            aliases: &[],
            module: "networks",
            summary: "transfer-matrix and path-enumeration routes agree",
            run: run_lgv_route_agreement,
        },
        Target {
            id: "first-index-recurrence",
            aliases: &[],
            module: "networks",
            summary: "two-term recurrences for row- and column-dependent weights",
            run: run_first_index_recurrence,
        },
        Target {
            id: "switch-transform",
            aliases: &[],
            module: "networks",
            summary: "bidiagonal switch identity on random rational weights",
            run: run_switch_transform,
        },
        Target {
            id: "unit-alpha-triangular",
            aliases: &[],
            module: "networks",
            summary: "unit horizontal weights give unit-lower-triangular path matrices",
            run: run_unit_alpha_triangular,
        },
        Target {
            id: "forest-tree-ratio",
            aliases: &[],
            module: "families",
            summary: "n f(n,k) = k t(n,k) entrywise",
            run: run_forest_tree_ratio,
        },
        Target {
            id: "tree-column-coincidence",
            aliases: &[],
            module: "families",
            summary: "the first two tree columns coincide",
            run: run_tree_column_coincidence,
        },
        Target {
            id: "deleted-forest-factorization",
            aliases: &[],
            module: "families",
            summary: "deleting the first row/column factors through trees x binomial",
            run: run_deleted_forest_factorization,
        },
        Target {
            id: "q-tree-factorization",
            aliases: &["lemma-fqtq"],
            module: "families",
            summary: "q-trees equal q-forests times an inverse bidiagonal",
            run: run_q_tree_factorization,
        },
        Target {
            id: "q-transfer-entrywise",
            aliases: &[],
            module: "families",
            summary: "[n] f(q) = [k] t(q) entrywise",
            run: run_q_transfer_entrywise,
        },
        Target {
            id: "row-sums",
            aliases: &[],
            module: "families",
            summary: "row sums are (n+1)^(n-1) and (n+1)^n",
            run: run_row_sums,
        },
        Target {
            id: "degree-palindromy",
            aliases: &[],
            module: "families",
            summary: "q-entry degrees and palindromic coefficient vectors",
            run: run_degree_palindromy,
        },
        Target {
            id: "rst-specialization",
            aliases: &[],
            module: "families",
            summary: "three-variable matrices at r=s=t=q equal the q forms",
            run: run_rst_specialization,
        },
        Target {
            id: "stirling-e-form",
            aliases: &[],
            module: "families",
            summary: "Stirling-like entries are elementary symmetric functions",
            run: run_stirling_e_form,
        },
        Target {
            id: "rothe-convolution",
            aliases: &[],
            module: "families",
            summary: "binomial convolution identity for the Abel-type sequence",
            run: run_rothe_convolution,
        },
        Target {
            id: "lah-bessel-specialization",
            aliases: &[],
            module: "families",
            summary: "generic Lah at phi=1 equals the Bessel-like matrix at ones",
            run: run_lah_bessel_specialization,
        },
        Target {
            id: "route-agreement",
            aliases: &[],
            module: "families",
            summary: "closed forms match their network constructions",
            run: run_route_agreement,
        },
        Target {
            id: "oracle-q-statistic",
            aliases: &[],
            module: "combinat",
            summary: "brute-force q-statistic sums equal the closed form",
            run: run_oracle_q,
        },
        Target {
            id: "oracle-rst-statistic",
            aliases: &[],
            module: "combinat",
            summary: "brute-force three-statistic sums equal the closed form",
            run: run_oracle_rst,
        },
        Target {
            id: "oracle-leaf-variant",
            aliases: &[],
            module: "combinat",
            summary: "leaf-variant sums equal the tree closed form",
            run: run_oracle_leaf,
        },
        Target {
            id: "oracle-improper-edges",
            aliases: &[],
            module: "combinat",
            summary: "improper-edge sums equal the two-variable closed form",
            run: run_oracle_yz,
        },
        Target {
            id: "oracle-permutations",
            aliases: &[],
            module: "combinat",
            summary: "permutation statistics match the Stirling-like matrix",
            run: run_oracle_permutations,
        },
        Target {
            id: "oracle-matchings",
            aliases: &[],
            module: "combinat",
            summary: "matching statistics match the continued-fraction series",
            run: run_oracle_matchings,
        },
        Target {
            id: "oracle-touchard",
            aliases: &[],
            module: "combinat",
            summary: "alternating-binomial form matches the matrix column",
            run: run_oracle_touchard,
        },
        Target {
            id: "prufer-round-trip",
            aliases: &[],
            module: "combinat",
            summary: "forest sequence encoding round-trips exhaustively",
            run: run_prufer_round_trip,
        },
        Target {
            id: "sfraction-round-trip",
            aliases: &[],
            module: "combinat",
            summary: "continued-fraction coefficients round-trip",
            run: run_sfraction_round_trip,
        },
        Target {
            id: "forest-census",
            aliases: &[],
            module: "combinat",
            summary: "exhaustive forest counts match the closed-form census",
            run: run_forest_census,
        },
        Target {
            id: "integer-tp-desk",
            aliases: &[],
            module: "tpcheck",
            summary: "integer forest/tree truncations pass the order-4 sweep",
            run: run_integer_tp_desk,
        },
        Target {
            id: "q-tp-desk",
            aliases: &[],
            module: "tpcheck",
            summary: "q-truncations pass the coefficientwise order-4 sweep",
            run: run_q_tp_desk,
        },
        Target {
            id: "shifted-forest-route",
            aliases: &["prop-4.1"],
            module: "tpcheck",
            summary: "rational network reproduces the shifted matrix, symbolically and pointwise",
            run: run_shifted_forest_route,
        },
        Target {
            id: "telescoping-sum",
            aliases: &["lemma-4.2"],
            module: "tpcheck",
            summary: "telescoping column-sum identity over rational functions",
            run: run_telescoping_sum,
        },
        Target {
            id: "q-forest-route",
            aliases: &["prop-5.1"],
            module: "tpcheck",
            summary: "polynomial factored network reproduces the q-forest matrix",
            run: run_q_forest_route,
        },
        Target {
            id: "factorization-routes",
            aliases: &["cor-4.4", "cor-4.5"],
            module: "tpcheck",
            summary: "both rational factorizations reproduce the q-forest matrix",
            run: run_factorization_routes,
        },
        Target {
            id: "improper-forest-route",
            aliases: &["prop-sokal"],
            module: "tpcheck",
            summary: "two-variable network and production-output routes agree",
            run: run_improper_forest_route,
        },
        Target {
            id: "neville-integer-pivots",
            aliases: &[],
            module: "tpcheck",
            summary: "elimination pivots at q=1 are the exact rational products",
            run: run_neville_integer_pivots,
        },
        Target {
            id: "eightvar-tp3",
            aliases: &[],
            module: "tpcheck",
            summary: "eight-variable truncation passes the order-3 sweep",
            run: run_eightvar_tp3,
        },
        Target {
            id: "rst-not-tp2",
            aliases: &[],
            module: "families",
            summary: "pinned negative minors of the three-variable matrices",
            run: run_rst_not_tp2,
        },
        Target {
            id: "hankel-negative-minors",
            aliases: &[],
            module: "tpcheck",
            summary: "pinned negative Hankel minors of three sequences",
            run: run_hankel_negative_minors,
        },
        Target {
            id: "report-determinism",
            aliases: &[],
            module: "cli",
            summary: "identical runs render byte-identical reports",
            run: run_report_determinism,
        },
        Target {
            id: "manifest-coverage",
            aliases: &[],
            module: "cli",
            summary: "the target registry and the invariant manifest agree",
            run: run_manifest_coverage,
        },
    ];
    TARGETS
}
