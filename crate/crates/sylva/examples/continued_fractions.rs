//! Stieltjes continued fractions: expanding coefficient ladders into power
//! series, recovering the ladder from a series, and the Hankel connection.

use num_rational::BigRational;
use num_traits::One;
use sylva::combinat::{series_to_sfraction, sfraction_expand};
use sylva::matrixkit::bareiss_det;
use sylva::polyring::qcalc::q_int;
use sylva::polyring::{RatFn, Sequence};
use sylva::tpcheck::hankel;

fn main() {
    // All ladder coefficients equal to 1 produce the Catalan numbers.
    let ones = Sequence::new(|_| BigRational::one());
    let catalan = sfraction_expand(&ones, 7);
    let shown: Vec<String> = catalan.iter().map(|c| c.to_string()).collect();
    println!("S-fraction with unit coefficients: {}", shown.join(", "));
    assert_eq!(catalan[7], BigRational::from_integer(429.into()));

    // Every Hankel determinant of the Catalan sequence equals 1 — the
    // classical fingerprint of a series with a positive S-fraction.
    let cat = catalan.clone();
    let seq = Sequence::new(move |n| cat[n].clone());
    for size in 1..=4 {
        let det = bareiss_det(&hankel(&seq, size));
        println!("Catalan Hankel determinant, size {size}: {det}");
        assert!(det.is_one());
    }

    // The inverse direction: the quotient-difference recurrence reads the
    // ladder back off the series.
    let recovered = series_to_sfraction(&catalan, 3).unwrap();
    assert!(recovered.iter().all(|c| c.is_one()));
    println!("recovered ladder from the series: all ones");

    // A polynomial ladder: coefficients [i]_q give a q-analog of the
    // Catalan numbers, and the round trip is exact over rational functions.
    let qladder = Sequence::new(|i| RatFn::from_poly(q_int(i)));
    let qcatalan = sfraction_expand(&qladder, 4);
    println!("q-analog of the 4th Catalan number: {}", qcatalan[4]);
    let back = series_to_sfraction(&qcatalan, 4).unwrap();
    for (i, lam) in back.iter().enumerate() {
        assert_eq!(lam, &RatFn::from_poly(q_int(i + 1)));
    }
    println!("series-to-ladder round trip recovered [1]_q .. [4]_q");
}
