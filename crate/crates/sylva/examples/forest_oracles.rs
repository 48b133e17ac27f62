//! Brute-force combinatorial oracles: enumerate the objects, sum the
//! statistics, and compare against the closed forms.
//!
//! The oracles are deliberately independent of the matrix constructions —
//! they enumerate rooted labelled forests through a Prüfer-style bijection
//! and walk each object — so an agreement is evidence, not circularity.

use sylva::combinat::{
    enum_forests, forest_genpoly, matching_genpoly, perm_genpoly, prufer_decode, prufer_encode,
    sfraction_expand, touchard_riordan, Weighting,
};
use sylva::families::{pq_stirling_matrix, q_forests_matrix};
use sylva::polyring::qcalc::pq_int_in;
use sylva::polyring::{Poly, Sequence, Var};

fn main() {
    // Counting: forests on n vertices with k components.
    let (n, k) = (4, 2);
    let forests = enum_forests(n, k);
    println!("forests with (n,k) = ({n},{k}): {}", forests.len());

    // The Prüfer-style encoding is a bijection; decode inverts encode.
    let sample = &forests[17];
    let code = prufer_encode(sample);
    println!(
        "sample forest roots {:?} encodes to root set {:?}, sequence {:?}",
        sample.roots(),
        code.root_set,
        code.seq
    );
    assert_eq!(&prufer_decode(&code).unwrap(), sample);

    // Summing the q-statistic over all forests recovers the matrix entry.
    let oracle = forest_genpoly(n, k, Weighting::QStatistic);
    let closed = q_forests_matrix(n + 1);
    assert_eq!(&oracle, closed.get(n, k));
    println!("q-statistic sum at ({n},{k}) = {oracle}");

    // Permutations graded by left-to-right maxima match the Stirling-like
    // matrix at p = 1.
    let by_maxima = perm_genpoly(4);
    let stirling = pq_stirling_matrix(5).map(|p| p.subst_many(&[(Var::P, Poly::one())]));
    for kk in 1..=4 {
        assert_eq!(&by_maxima[kk], stirling.get(4, kk));
    }
    println!("permutation oracle matches the Stirling-like matrix at n = 4");

    // Perfect matchings graded by crossings and nestings: the same series
    // comes out of a continued fraction with coefficients [h]_{r,s}.
    let lam = Sequence::new(|i| pq_int_in(Var::R, Var::S, i));
    let series = sfraction_expand(&lam, 4);
    for m in 0..=4 {
        assert_eq!(series[m], matching_genpoly(m));
    }
    println!("matchings of 8 points by crossings/nestings: {}", matching_genpoly(4));

    // The alternating-binomial form of the crossing polynomial: index m + 1
    // covers perfect matchings on 2m points.
    let crossing = touchard_riordan(4).unwrap();
    println!("crossing polynomial for 6 points: {crossing}");
}
