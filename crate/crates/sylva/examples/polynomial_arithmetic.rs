//! Exact multivariate polynomial arithmetic and the q-calculus helpers.
//!
//! Everything is integer-exact: coefficients promote from machine words to
//! big integers silently, terms stay in one canonical order (so equal
//! polynomials print identically), and division, substitution, and
//! evaluation either succeed exactly or say why not.

use num_bigint::BigInt;
use num_rational::BigRational;
use sylva::polyring::qcalc::{pq_int, q_binom, q_fact, q_int};
use sylva::polyring::{Poly, RatFn, Var};

fn main() {
    // q-integers, q-factorials, q-binomials.
    println!("[4]_q        = {}", q_int(4));
    println!("[4]_q!       = {}", q_fact(4));
    println!("qbinom(4,2)  = {}", q_binom(4, 2));
    println!("[3]_{{p,q}}    = {}", pq_int(3));

    // The q-binomial recurrence qbinom(n,k) = qbinom(n-1,k-1) + q^k qbinom(n-1,k).
    let lhs = q_binom(5, 2);
    let rhs = q_binom(4, 1) + Poly::monomial(Var::Q, 2, 1) * q_binom(4, 2);
    assert_eq!(lhs, rhs);
    println!("recurrence   : qbinom(5,2) = qbinom(4,1) + q^2·qbinom(4,2) = {lhs}");

    // Substitution: the shift q -> 1 + q expands with binomial coefficients.
    let shifted = q_int(4).shift_vars(&[Var::Q]);
    println!("[4]_q at 1+q = {shifted}");
    assert!(shifted.is_coeff_nonneg());

    // Setting q = 1 recovers the classical values.
    let at_one = q_binom(6, 3).eval(&[(Var::Q, BigRational::from_integer(BigInt::from(1)))]);
    println!("qbinom(6,3) at q=1 = {}", at_one.unwrap());

    // Palindromy: q-binomial coefficients are self-reciprocal in q.
    assert!(q_binom(6, 3).is_self_reciprocal_in(Var::Q));
    println!("qbinom(6,3) is palindromic in q");

    // Exact rational functions reduce automatically: [6]_q/[3]_q = q^3 + 1.
    let ratio = RatFn::new(q_int(6), q_int(3)).unwrap();
    println!("[6]_q/[3]_q  = {ratio}");
    assert_eq!(ratio.as_poly().unwrap(), &(Poly::monomial(Var::Q, 3, 1) + Poly::one()));

    // Multivariate arithmetic with automatic big-integer coefficients.
    let a = (Poly::var(Var::R) + Poly::var(Var::S) + Poly::int(1)).pow(12);
    let b = (Poly::var(Var::R) - Poly::var(Var::S)).pow(12);
    let product = &a * &b;
    println!(
        "((r+s+1)^12 · (r-s)^12) has {} terms; value at r=s=1 is {}",
        product.num_terms(),
        product.eval_all_ones()
    );
}
