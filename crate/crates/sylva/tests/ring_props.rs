//! Property-based checks of the polynomial ring: axioms, substitution
//! homomorphisms, and evaluation, driven by a fixed-seed generator so runs
//! are reproducible.

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use sylva::polyring::{Poly, RatFn, Var};

const CASES: u32 = 1000;
const SEED: [u8; 32] = [17; 32];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &SEED),
    )
}

/// Sparse polynomials in q, x, r with small coefficients and exponents.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-9i64..=9, 0u16..4, 0u16..4, 0u16..3), 0..6).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, eq, ex, er)| {
            acc + Poly::int(c)
                * Poly::monomial(Var::Q, eq, 1)
                * Poly::monomial(Var::X, ex, 1)
                * Poly::monomial(Var::R, er, 1)
        })
    })
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn addition_and_multiplication_form_a_commutative_ring() {
    runner(CASES)
        .run(&(poly(), poly(), poly()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &Poly::zero(), a.clone());
            prop_assert_eq!(&a * &Poly::one(), a.clone());
            prop_assert_eq!(&a - &a, Poly::zero());
            Ok(())
        })
        .unwrap();
}

#[test]
fn shifting_variables_is_a_ring_homomorphism() {
    let vars = [Var::Q, Var::X];
    runner(CASES)
        .run(&(poly(), poly()), |(a, b)| {
            prop_assert_eq!(
                (&a * &b).shift_vars(&vars),
                a.shift_vars(&vars) * b.shift_vars(&vars)
            );
            prop_assert_eq!(
                (&a + &b).shift_vars(&vars),
                a.shift_vars(&vars) + b.shift_vars(&vars)
            );
            Ok(())
        })
        .unwrap();
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let at = [
        (Var::Q, rat(2, 3)),
        (Var::X, rat(-1, 2)),
        (Var::R, rat(5, 1)),
    ];
    runner(CASES)
        .run(&(poly(), poly()), |(a, b)| {
            let (ea, eb) = (a.eval(&at).unwrap(), b.eval(&at).unwrap());
            prop_assert_eq!((&a * &b).eval(&at).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).eval(&at).unwrap(), &ea + &eb);
            Ok(())
        })
        .unwrap();
}

#[test]
fn rational_functions_reduce_and_invert_exactly() {
    runner(CASES)
        .run(&(poly(), poly()), |(a, b)| {
            prop_assume!(!b.is_zero());
            // (a·b)/b reduces back to a.
            let f = RatFn::new(&a * &b, b.clone()).unwrap();
            prop_assert_eq!(f.clone(), RatFn::from_poly(a.clone()));
            if !a.is_zero() {
                let g = RatFn::new(a.clone(), b.clone()).unwrap();
                prop_assert_eq!(&g * &g.inv().unwrap(), RatFn::one());
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn exact_division_inverts_multiplication() {
    runner(CASES)
        .run(&(poly(), poly()), |(a, b)| {
            prop_assume!(!b.is_zero());
            let quotient = (&a * &b).exact_div(&b).unwrap();
            prop_assert_eq!(quotient, a);
            Ok(())
        })
        .unwrap();
}
