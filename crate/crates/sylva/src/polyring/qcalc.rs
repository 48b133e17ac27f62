//! q-calculus building blocks: q-integers, q-factorials, q-binomials, and
//! their two-variable (p,q)-homogenizations.
//!
//! Conventions: `[0] = 0`, `[n] = 1 + q + … + q^{n-1}`,
//! `[n]! = [1][2]⋯[n]`, and the q-binomial is `[n]!/([k]![n-k]!)`, computed
//! here by the Pascal recurrence `qbin(n,k) = qbin(n-1,k-1) + q^k·qbin(n-1,k)`
//! so no division is ever needed. Out-of-range binomials (`k > n`) are the
//! zero polynomial by convention. Every function takes the variable as an
//! argument; `q_int(n)` etc. are shorthands in the variable `q`.

use super::poly::{Poly, Var};

/// `[n]_v = 1 + v + … + v^{n-1}` (zero when `n = 0`).
pub fn q_int_in(v: Var, n: usize) -> Poly {
    let mut p = Poly::zero();
    for i in 0..n {
        p += Poly::monomial(v, i as u16, 1);
    }
    p
}

pub fn q_int(n: usize) -> Poly {
    q_int_in(Var::Q, n)
}

/// `[n]_{a,b} = a^{n-1} + a^{n-2}b + … + b^{n-1}` (zero when `n = 0`).
pub fn pq_int_in(a: Var, b: Var, n: usize) -> Poly {
    let mut p = Poly::zero();
    for i in 0..n {
        p += Poly::monomial(a, (n - 1 - i) as u16, 1) * Poly::monomial(b, i as u16, 1);
    }
    p
}

/// `[n]_{p,q}` in the standard first pair of variables.
pub fn pq_int(n: usize) -> Poly {
    pq_int_in(Var::P, Var::Q, n)
}

/// `[n]_v! = [1]_v [2]_v ⋯ [n]_v` (1 when `n = 0`).
pub fn q_fact_in(v: Var, n: usize) -> Poly {
    let mut p = Poly::one();
    for i in 1..=n {
        p = &p * &q_int_in(v, i);
    }
    p
}

pub fn q_fact(n: usize) -> Poly {
    q_fact_in(Var::Q, n)
}

/// `[n]_{a,b}! = [1]_{a,b} ⋯ [n]_{a,b}`.
pub fn pq_fact_in(a: Var, b: Var, n: usize) -> Poly {
    let mut p = Poly::one();
    for i in 1..=n {
        p = &p * &pq_int_in(a, b, i);
    }
    p
}

/// Gaussian binomial in the variable `v`; zero when `k > n`.
pub fn q_binom_in(v: Var, n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let k = k.min(n - k);
    // Pascal triangle row by row: row[j] = qbin(i, j).
    let mut row: Vec<Poly> = vec![Poly::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Poly::one());
        for j in 1..=row.len() {
            let left = if j < row.len() {
                // qbin(i-1, j) scaled by v^j.
                row[j].mul_term(&super::poly::Expo::of_var(v, j as u16), &super::coef::Coef::ONE)
            } else {
                Poly::zero()
            };
            let mut e = row[j - 1].clone();
            e += left;
            next.push(e);
        }
        next.truncate(k + 1);
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(Poly::zero)
}

pub fn q_binom(n: usize, k: usize) -> Poly {
    q_binom_in(Var::Q, n, k)
}

/// Ordinary binomial coefficient as a constant polynomial.
pub fn binom(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let k = k.min(n - k);
    let mut v = num_bigint::BigInt::from(1);
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    Poly::from_bigint(v)
}
