//! Total-positivity checking: minor sweeps, a genuine counterexample,
//! Neville elimination certificates, and the shift trick for Hankel minors.

use num_rational::BigRational;
use num_traits::One;
use sylva::families::{named_poly_seq, q_forests_matrix, rst_forests_matrix};
use sylva::matrixkit::minor_det;
use sylva::polyring::{RatFn, Var};
use sylva::tpcheck::{check_tp, hankel, neville, qforest_telescoping_identity, Mode};

fn main() {
    // Coefficientwise sweep of all minors up to order 3 in a 6x6 window.
    let f = q_forests_matrix(6);
    let report = check_tp(&f, "q-forests", 3, &Mode::Coefficientwise);
    println!(
        "q-forests window {}: {} minors up to order {} checked, {} failures",
        report.size,
        report.minors_checked,
        report.order_cap,
        report.failures.len()
    );
    assert!(report.verdict_positive());

    // The three-variable refinement is *not* coefficientwise TP of order 2:
    // one explicit 2x2 minor has a negative coefficient.
    let g = rst_forests_matrix(6);
    let minor = minor_det(&g, &[4, 5], &[1, 2]);
    println!("refined-statistic 2x2 minor on rows {{4,5}}, cols {{1,2}}:");
    println!("  {minor}");
    assert!(!minor.is_coeff_nonneg());

    // Neville elimination over rational functions yields diagonal pivots and,
    // when they are all nonzero, a planar-network factorization certificate.
    let fr = q_forests_matrix(5).map(|p| RatFn::from_poly(p.clone()));
    let (pivots, net) = neville(&fr).unwrap();
    assert!(pivots.certificate_available());
    println!("Neville pivots for the q-forests window ({}):", net.name);
    for (i, l, p) in pivots.entries() {
        if !p.is_zero() {
            println!("  stage {l}, row {i}: {p}");
        }
    }

    // A telescoping product identity relating successive windows.
    assert!(qforest_telescoping_identity(5));
    println!("telescoping identity holds through window 5");

    // Hankel matrices of the binomial-shifted tree polynomials: the raw
    // sequence has minors with negative coefficients, but the shift q -> 1+q
    // clears them — and nonnegativity survives any further such shift.
    let seq = named_poly_seq("abel-bar").unwrap();
    let h = hankel(&seq, 3);
    let raw = minor_det(&h, &[0, 2], &[0, 1]);
    println!("raw Hankel 2x2 minor: {raw}");
    assert!(!raw.is_coeff_nonneg());
    let shifted = raw.shift_vars(&[Var::Q]);
    println!("after q -> 1+q:       {shifted}");
    assert!(shifted.is_coeff_nonneg());

    // Pointwise mode evaluates at chosen positive rationals instead; every
    // live variable needs a value.
    let at = vec![(Var::Q, BigRational::one()), (Var::X, BigRational::one())];
    let pointwise = check_tp(&h, "tree-hankel", 2, &Mode::Pointwise(at));
    assert!(pointwise.verdict_positive());
    println!(
        "pointwise at q = x = 1: {} minors, {} failures",
        pointwise.minors_checked,
        pointwise.failures.len()
    );
}
