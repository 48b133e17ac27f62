//! Triangular matrices, bidiagonal factors, fraction-free determinants,
//! and production/output matrices.
//!
//! The toolbox works over any exact scalar; here it runs over integer
//! polynomials. Bidiagonal matrices `L(a, b)` and inverse-bidiagonal
//! matrices `T(s)` are the building blocks every planar-network
//! factorization reduces to.

use sylva::matrixkit::{
    augmented_production_check, bareiss_det, build_bidiagonal, build_inv_bidiagonal,
    build_unit_bidiagonal, minor_det, output_matrix, Shape, TriMat,
};
use sylva::polyring::{Poly, Sequence, Var};

fn rows(m: &TriMat<Poly>) -> String {
    m.render_rows()
        .iter()
        .map(|r| format!("  [{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() {
    let n = 5;

    // L(1, q^k) — unit diagonal, geometric subdiagonal.
    let ell = build_unit_bidiagonal(n, &Sequence::new(|k| Poly::monomial(Var::Q, k as u16, 1)));
    // T(s): (n,k) = s(k)···s(n-1), the inverse of a unit bidiagonal.
    let tee = build_inv_bidiagonal(n, &Sequence::new(|_| Poly::var(Var::S)));
    let product = ell.mul(&tee).unwrap();
    println!("L(1, q^k) · T(s) at size {n}:\n{}", rows(&product));

    // Lower-triangular inversion is exact; the round trip is the identity.
    let inverse = product.invert_lower().unwrap();
    assert_eq!(product.mul(&inverse).unwrap(), TriMat::identity(n));
    println!("round trip through invert_lower gives the identity");

    // Triangular determinants are the diagonal product; Bareiss agrees.
    let diag = build_bidiagonal(
        n,
        &Sequence::new(|k| Poly::monomial(Var::Q, k as u16, 1) + Poly::one()),
        &Sequence::new(|_| Poly::one()),
    );
    let det = bareiss_det(&diag);
    println!("det L(1+q^k, 1) = {det}");

    // Minors address arbitrary row/column subsets.
    let minor = minor_det(&product, &[2, 4], &[1, 2]);
    println!("minor rows {{2,4}} cols {{1,2}} of L·T = {minor}");

    // A production matrix drives an output matrix one row at a time: row
    // n+1 of the output is row n multiplied by the production matrix. With
    // the all-ones bidiagonal production matrix the output is Pascal's
    // triangle.
    let pascal_production = TriMat::from_fn(n + 1, Shape::LowerHessenberg, |i, j| {
        if j == i || j == i + 1 {
            Poly::one()
        } else {
            Poly::zero()
        }
    });
    let pascal = output_matrix(&pascal_production, n).unwrap();
    println!("output matrix of the all-ones bidiagonal production matrix:\n{}", rows(&pascal));
    assert_eq!(pascal.get(4, 2), &Poly::int(6));

    // The augmented-matrix identity detects whether a proposed production
    // matrix really produces a given triangle.
    assert!(augmented_production_check(&pascal_production, &pascal).unwrap());
    println!("augmented production check confirms the pairing");
}
