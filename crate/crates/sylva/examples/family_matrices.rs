//! The polynomial matrix families: forests, trees, their refinements, and
//! the factorizations connecting them.
//!
//! Entry (n,k) of the forest matrix counts labelled forests on n vertices
//! with k components, all roots in their own component minimum; the
//! refinements grade those forests by statistics (a q-statistic, an
//! (r,s,γ)-triple, improper edges, and so on). Row sums and column
//! factorizations are exact identities, checked here at small size.

use sylva::families::{
    diag_rescale, family_matrix, family_names, forests_matrix, q_forests_matrix, q_trees_matrix,
    row_gen_polys, trees_matrix, Side,
};
use sylva::matrixkit::build_inv_bidiagonal;
use sylva::polyring::qcalc::q_int;
use sylva::polyring::{Poly, Sequence, Var};

fn main() {
    println!("families: {}", family_names().join(", "));

    // Row sums: (n+1)^{n-1} forests and (n+1)^n trees on n+1 vertices.
    let n = 7;
    let forests = forests_matrix(n + 1);
    let trees = trees_matrix(n + 1);
    for row in 0..=n {
        let f: num_bigint::BigInt = (0..=row).map(|k| forests.get(row, k).eval_all_ones()).sum();
        let t: num_bigint::BigInt = (0..=row).map(|k| trees.get(row, k).eval_all_ones()).sum();
        println!("row {row}: forest sum = {f:<9} tree sum = {t}");
    }

    // The q-refinement, displayed at the size the closed form is friendly.
    let fq = q_forests_matrix(5);
    println!("q-forest matrix rows 0..=4:");
    for row in fq.render_rows() {
        println!("  [{}]", row.join(", "));
    }

    // Factorization: the q-tree matrix is the q-forest matrix times an
    // inverse-bidiagonal factor with entries q^k [k+1]_q.
    let m = 8;
    let tq = q_trees_matrix(m);
    let factor = build_inv_bidiagonal(
        m,
        &Sequence::new(|k| Poly::monomial(Var::Q, k as u16, 1) * q_int(k + 1)),
    );
    assert_eq!(tq, q_forests_matrix(m).mul(&factor).unwrap());
    println!("T(q) = F(q) · T(q^k [k+1]_q) verified at size {m}");

    // Row-generating polynomials of a rescaled family: the inputs to every
    // Hankel positivity question downstream.
    let rescaled = diag_rescale(&q_forests_matrix(5), &Poly::var(Var::Q), Side::Right);
    let gens = row_gen_polys(&rescaled, Var::X);
    println!("row generators of F(q)·diag(q^(k choose 2)):");
    for (i, g) in gens.iter().enumerate() {
        println!("  row {i}: {g}");
    }

    // Every family is also reachable by name, with its metadata.
    let (matrix, spec) = family_matrix("eightvar-forests", 4).unwrap();
    println!(
        "family '{}' lives in {} variables; entry (3,1) = {}",
        spec.name,
        spec.live_vars.len(),
        matrix.get(3, 1)
    );
}
