//! Fraction-free determinants and streaming minor enumeration.
//!
//! Determinants use Bareiss one-step elimination: every division is exact in
//! the coefficient ring, so polynomial matrices never leave ℤ[p,…,x].
//! Minors are enumerated by ascending order and, within an order, by
//! colexicographic order on the row set and then the column set — the
//! deterministic stream the reports rely on.

use super::{Scalar, TriMat};
use rayon::prelude::*;

/// One minor: the row set, column set, and determinant value.
#[derive(Clone, Debug)]
pub struct Minor<S> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: S,
}

/// Determinant of the square array `m` (consumed), by fraction-free
/// elimination with row pivoting.
pub fn bareiss_det_of<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    let mut sign_flip = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = S::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Determinant of a full matrix window.
pub fn bareiss_det<S: Scalar>(a: &TriMat<S>) -> S {
    bareiss_det_of(
        (0..a.size())
            .map(|i| (0..a.size()).map(|j| a.get(i, j).clone()).collect())
            .collect(),
    )
}

/// Determinant of the submatrix on `rows × cols`.
pub fn minor_det<S: Scalar>(a: &TriMat<S>, rows: &[usize], cols: &[usize]) -> S {
    assert_eq!(rows.len(), cols.len(), "minors are square");
    bareiss_det_of(
        rows.iter()
            .map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
            .collect(),
    )
}

/// All `k`-element subsets of `{0, …, n-1}` in colexicographic order
/// (compare largest elements first).
pub fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Colex successor: find the smallest index i where cur[i] can grow
        // while staying below cur[i+1] (or n at the top), reset the prefix.
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            let limit = if i + 1 < k { cur[i + 1] } else { n };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
    }
}

/// Streams every minor of order `1..=max_order`, in deterministic order
/// (order ascending; row set colex; column set colex). Values are computed
/// in parallel per order.
pub fn minors_up_to_order<S: Scalar>(a: &TriMat<S>, max_order: usize) -> Vec<Minor<S>> {
    let n = a.size();
    let mut out = Vec::new();
    for order in 1..=max_order.min(n) {
        let sets = subsets_colex(n, order);
        let mut pairs = Vec::with_capacity(sets.len() * sets.len());
        for rows in &sets {
            for cols in &sets {
                pairs.push((rows.clone(), cols.clone()));
            }
        }
        let mut computed: Vec<Minor<S>> = pairs
            .into_par_iter()
            .map(|(rows, cols)| {
                let value = minor_det(a, &rows, &cols);
                Minor { rows, cols, value }
            })
            .collect();
        out.append(&mut computed);
    }
    out
}
