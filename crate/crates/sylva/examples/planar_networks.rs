//! Planar networks: path matrices two ways, the built-in catalog, and the
//! switch transformation.
//!
//! A binomial-like network assigns a horizontal weight to each level step
//! and a diagonal weight to each descent; its path matrix collects, entry
//! by entry, the weighted count of vertex-disjoint route families. The
//! library computes that matrix both by multiplying transfer factors and by
//! enumerating lattice paths directly — the agreement is the
//! Lindström–Gessel–Viennot guarantee made executable.

use num_bigint::BigInt;
use num_rational::BigRational;
use sylva::networks::{catalog, catalog_names, switch_transform, CatalogNet};
use sylva::polyring::Sequence;

fn main() {
    println!("catalog networks: {}", catalog_names().join(", "));

    // The weighted binomial network: entry (n,k) = C(n,k) x^{n-k} y^k.
    let net = match catalog("binomial").unwrap() {
        CatalogNet::Poly(net) => net,
        CatalogNet::Rational(_) => unreachable!("the binomial net has polynomial weights"),
    };
    let n = 5;
    let by_transfer = net.path_matrix_transfer(n).unwrap();
    let by_paths = net.path_matrix_paths(n).unwrap();
    assert_eq!(by_transfer, by_paths);
    println!("binomial network, transfer route == path enumeration at size {n}");
    for row in by_transfer.render_rows() {
        println!("  [{}]", row.join(", "));
    }

    // A rational-weight network: its path matrix is the once-shifted
    // q-forest matrix even though individual edge weights are ratios.
    let shifted = match catalog("qforest-rational").unwrap() {
        CatalogNet::Rational(net) => net,
        CatalogNet::Poly(_) => unreachable!("this net carries rational weights"),
    };
    let m = shifted.path_matrix_transfer(4).unwrap();
    println!("qforest-rational path matrix entry (3,1) = {}", m.get(3, 1));

    // The switch transformation rewrites L(a)·T(b) as [1 ⊕ T(b')]·L(a'),
    // sliding an inverse-bidiagonal factor leftward past a bidiagonal one.
    // It is defined whenever the running sums a_i + b_i are invertible.
    let a = Sequence::new(|i| BigRational::from_integer(BigInt::from(2 * i as i64 + 1)));
    let b = Sequence::new(|i| BigRational::from_integer(BigInt::from(i as i64 + 2)));
    let depth = 6;
    let (a2, b2) = switch_transform(&a, &b, depth).unwrap();
    println!("switch transform of a_i = 2i+1, b_i = i+2:");
    for i in 0..4 {
        println!("  a'_{i} = {:<8} b'_{i} = {}", a2.at(i).to_string(), b2.at(i));
    }

    use sylva::matrixkit::{build_bidiagonal, build_inv_bidiagonal};
    let nn = depth + 1;
    let ones = Sequence::new(|_| BigRational::from_integer(BigInt::from(1)));
    let lhs = build_bidiagonal(nn, &ones, &a)
        .mul(&build_inv_bidiagonal(nn, &b))
        .unwrap();
    let rhs = build_inv_bidiagonal(nn - 1, &b2)
        .shifted_embed(1, nn)
        .mul(&build_bidiagonal(nn, &ones, &a2))
        .unwrap();
    assert_eq!(lhs, rhs);
    println!("L(a)T(b) = [1 ⊕ T(b')]·L(a') verified at size {nn}");
}
