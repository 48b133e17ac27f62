//! Lower-triangular / lower-Hessenberg matrix toolbox over exact scalars.
//!
//! Matrices here are finite truncations of infinite arrays indexed from 0.
//! Truncation is stable for lower-triangular factors: the N×N block of a
//! product equals the product of the N×N blocks, which is what makes the
//! factorization identities in [`crate::networks`] checkable window by
//! window.
//!
//! Conventions for the named builders, with `a = (a_0, a_1, …)`:
//!
//! - bidiagonal `L(a, b)`: `(k,k) = a_k`, `(k+1,k) = b_k`, zero elsewhere;
//! - unit bidiagonal `L(b)`: the same with all `a_k = 1`;
//! - diagonal `diag(a)`;
//! - inverse bidiagonal `T(a) = L(-a)^{-1}`: `(n,k) = a_k a_{k+1} ⋯ a_{n-1}`
//!   for `n ≥ k` (in particular 1 on the diagonal);
//! - shifted direct sum `I_i ⊕ M`: identity on the first `i` indices, `M`
//!   shifted down the diagonal.

pub mod det;
mod output;

pub use det::{bareiss_det, minor_det, minors_up_to_order, subsets_colex, Minor};
pub use output::{augment, augment_window, augmented_production_check, output_matrix};

use crate::polyring::{Poly, RatFn, Sequence};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use thiserror::Error;

/// Errors from matrix construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    /// Operands have incompatible sizes.
    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// A window too small for the requested computation.
    #[error("truncation {have} is too small; need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },
    /// A coefficient that must be inverted exactly is not invertible.
    #[error("matrix entry at ({0},{0}) is not invertible in the coefficient ring")]
    NonInvertibleCoefficient(usize),
}

/// Exact scalar rings the matrix layer works over.
///
/// `exact_div` must return `None` rather than approximate: fraction-free
/// elimination relies on divisions that are exact in the ring.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn exact_div(&self, o: &Self) -> Option<Self>;

    /// Σ aᵢ·bᵢ; overridden where a fused accumulation is cheaper.
    fn dot(pairs: &[(&Self, &Self)]) -> Self {
        let mut acc = Self::zero();
        for (a, b) in pairs {
            acc = acc.add(&a.mul(b));
        }
        acc
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        Poly::exact_div(self, o).ok()
    }
    fn dot(pairs: &[(&Self, &Self)]) -> Self {
        Poly::dot(pairs.iter().copied())
    }
}

impl Scalar for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        (!o.is_zero()).then(|| self / o)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
}

/// Structural shape of a truncated matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Shape {
    /// Zero above the main diagonal.
    Lower,
    /// Zero above the superdiagonal.
    LowerHessenberg,
    /// No structural zeros.
    General,
}

impl Shape {
    /// Last column that may be nonzero in row `i` (inclusive), for size `n`.
    fn col_bound(self, i: usize, n: usize) -> usize {
        match self {
            Shape::Lower => i,
            Shape::LowerHessenberg => (i + 1).min(n - 1),
            Shape::General => n - 1,
        }
    }

    fn join(self, other: Shape) -> Shape {
        use Shape::*;
        match (self, other) {
            (Lower, Lower) => Lower,
            (Lower, LowerHessenberg) | (LowerHessenberg, Lower) => LowerHessenberg,
            _ => General,
        }
    }
}

/// A dense square window of an infinite matrix, tagged with its shape.
#[derive(Clone, PartialEq, Debug)]
pub struct TriMat<S> {
    n: usize,
    shape: Shape,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> TriMat<S> {
    pub fn zero(n: usize, shape: Shape) -> TriMat<S> {
        assert!(n > 0, "matrices must have positive size");
        TriMat {
            n,
            shape,
            rows: vec![vec![S::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> TriMat<S> {
        let mut m = TriMat::zero(n, Shape::Lower);
        for i in 0..n {
            m.rows[i][i] = S::one();
        }
        m
    }

    /// Builds from an entry function, consulting only in-shape positions.
    pub fn from_fn(n: usize, shape: Shape, f: impl Fn(usize, usize) -> S) -> TriMat<S> {
        let mut m = TriMat::zero(n, shape);
        for i in 0..n {
            for j in 0..=shape.col_bound(i, n) {
                m.rows[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.rows[i]
    }

    /// Top-left `m × m` window.
    pub fn truncate(&self, m: usize) -> TriMat<S> {
        assert!(0 < m && m <= self.n);
        TriMat {
            n: m,
            shape: self.shape,
            rows: self
                .rows
                .iter()
                .take(m)
                .map(|r| r.iter().take(m).cloned().collect())
                .collect(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TriMat<T> {
        TriMat {
            n: self.n,
            shape: self.shape,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Matrix product, with shape inferred from the factors.
    pub fn mul(&self, other: &TriMat<S>) -> Result<TriMat<S>, MatError> {
        if self.n != other.n {
            return Err(MatError::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let shape = self.shape.join(other.shape);
        let mut out = TriMat::zero(n, shape);
        for i in 0..n {
            let ai_bound = self.shape.col_bound(i, n);
            for j in 0..=shape.col_bound(i, n) {
                let pairs: Vec<(&S, &S)> = (0..=ai_bound)
                    .filter(|&k| j <= other.shape.col_bound(k, n))
                    .map(|k| (&self.rows[i][k], &other.rows[k][j]))
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .collect();
                out.rows[i][j] = S::dot(&pairs);
            }
        }
        Ok(out)
    }

    /// Product of a list of factors, left to right.
    pub fn mul_all(factors: &[TriMat<S>]) -> Result<TriMat<S>, MatError> {
        let (first, rest) = factors
            .split_first()
            .expect("product of an empty factor list");
        let mut acc = first.clone();
        for f in rest {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Row vector times matrix: `(v·A)_j = Σ_i v_i A_{i,j}`.
    pub fn row_vec_mul(&self, v: &[S]) -> Vec<S> {
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let pairs: Vec<(&S, &S)> = (0..n)
                .filter(|&i| j <= self.shape.col_bound(i, n))
                .map(|i| (&v[i], &self.rows[i][j]))
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .collect();
            out.push(S::dot(&pairs));
        }
        out
    }

    /// `I_shift ⊕ self`, at outer size `n`; the inner block must be large
    /// enough to fill the remaining window.
    pub fn shifted_embed(&self, shift: usize, n: usize) -> TriMat<S> {
        assert!(
            self.n + shift >= n,
            "inner block of size {} cannot fill a size-{n} window at shift {shift}",
            self.n
        );
        let mut out = TriMat::identity(n);
        out.shape = self.shape;
        for i in shift..n {
            for j in shift..n {
                out.rows[i][j] = self.rows[i - shift][j - shift].clone();
            }
        }
        out
    }

    /// Inverse of a lower-triangular matrix by forward substitution.
    /// Fails with `NonInvertibleCoefficient` when a diagonal entry has no
    /// exact inverse in the ring.
    pub fn invert_lower(&self) -> Result<TriMat<S>, MatError> {
        assert_eq!(self.shape, Shape::Lower, "invert_lower needs a Lower matrix");
        let n = self.n;
        let mut inv_diag = Vec::with_capacity(n);
        for i in 0..n {
            inv_diag.push(
                S::one()
                    .exact_div(&self.rows[i][i])
                    .ok_or(MatError::NonInvertibleCoefficient(i))?,
            );
        }
        let mut x = TriMat::zero(n, Shape::Lower);
        for j in 0..n {
            x.rows[j][j] = inv_diag[j].clone();
            for i in j + 1..n {
                let pairs: Vec<(&S, &S)> = (j..i)
                    .map(|k| (&self.rows[i][k], &x.rows[k][j]))
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .collect();
                let s = S::dot(&pairs);
                x.rows[i][j] = s.neg().mul(&inv_diag[i]);
            }
        }
        Ok(x)
    }

    /// Ragged row dump (row `i` truncated at the structural column bound),
    /// entries rendered canonically. Used by the JSON report writers.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..=self.shape.col_bound(i, self.n))
                    .map(|j| self.rows[i][j].to_string())
                    .collect()
            })
            .collect()
    }
}

/// Bidiagonal `L(a, b)`: `(k,k) = a_k`, `(k+1,k) = b_k`.
pub fn build_bidiagonal<S: Scalar>(n: usize, diag: &Sequence<S>, sub: &Sequence<S>) -> TriMat<S> {
    TriMat::from_fn(n, Shape::Lower, |i, j| {
        if i == j {
            diag.at(i)
        } else if i == j + 1 {
            sub.at(j)
        } else {
            S::zero()
        }
    })
}

/// Unit bidiagonal `L(b)`: ones on the diagonal, `b_k` below.
pub fn build_unit_bidiagonal<S: Scalar>(n: usize, sub: &Sequence<S>) -> TriMat<S> {
    build_bidiagonal(n, &Sequence::new(|_| S::one()), sub)
}

/// Diagonal `diag(a)`.
pub fn build_diag<S: Scalar>(n: usize, diag: &Sequence<S>) -> TriMat<S> {
    TriMat::from_fn(n, Shape::Lower, |i, j| {
        if i == j {
            diag.at(i)
        } else {
            S::zero()
        }
    })
}

/// Inverse bidiagonal `T(a) = L(-a)^{-1}`: `(n,k) = a_k a_{k+1} ⋯ a_{n-1}`.
pub fn build_inv_bidiagonal<S: Scalar>(n: usize, a: &Sequence<S>) -> TriMat<S> {
    let mut m = TriMat::zero(n, Shape::Lower);
    for j in 0..n {
        let mut prod = S::one();
        m.rows[j][j] = S::one();
        for i in j + 1..n {
            prod = prod.mul(&a.at(i - 1));
            m.rows[i][j] = prod.clone();
        }
    }
    m
}

/// The upper shift Δ: `(i, i+1) = 1`, zero elsewhere.
pub fn upper_shift<S: Scalar>(n: usize) -> TriMat<S> {
    TriMat::from_fn(n, Shape::LowerHessenberg, |i, j| {
        if j == i + 1 {
            S::one()
        } else {
            S::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::qcalc::q_int;
    use crate::polyring::Var;

    fn int_seq(vals: &[i64]) -> Sequence<Poly> {
        let v: Vec<i64> = vals.to_vec();
        Sequence::new(move |n| Poly::int(*v.get(n).unwrap_or(&0)))
    }

    #[test]
    fn bidiagonal_and_inverse_bidiagonal_are_inverse_pairs() {
        // T(a) = L(-a)^{-1}: check L(-a) · T(a) = I for a polynomial sequence.
        let a = Sequence::new(|n| Poly::monomial(Var::Q, n as u16, 1) * q_int(n + 1));
        let neg_a = {
            let a = a.clone();
            Sequence::new(move |n| -a.at(n))
        };
        let l = build_unit_bidiagonal(6, &neg_a);
        let t = build_inv_bidiagonal(6, &a);
        assert_eq!(l.mul(&t).unwrap(), TriMat::identity(6));
        assert_eq!(t.mul(&l).unwrap(), TriMat::identity(6));
    }

    #[test]
    fn named_bidiagonal_entries_land_where_documented() {
        let l = build_bidiagonal(4, &int_seq(&[2, 3, 4, 5]), &int_seq(&[7, 8, 9]));
        assert_eq!(l.get(0, 0), &Poly::int(2));
        assert_eq!(l.get(2, 2), &Poly::int(4));
        assert_eq!(l.get(1, 0), &Poly::int(7));
        assert_eq!(l.get(3, 2), &Poly::int(9));
        assert_eq!(l.get(2, 0), &Poly::zero());
    }

    #[test]
    fn truncation_commutes_with_lower_triangular_products() {
        let a = build_inv_bidiagonal(8, &Sequence::new(|n| q_int(n + 1)));
        let b = build_unit_bidiagonal(8, &Sequence::new(|n| Poly::monomial(Var::Q, n as u16, 3)));
        let full = a.mul(&b).unwrap().truncate(5);
        let windowed = a.truncate(5).mul(&b.truncate(5)).unwrap();
        assert_eq!(full, windowed, "N-window of product must equal product of N-windows");
    }

    #[test]
    fn shifted_embed_places_inner_block_on_the_diagonal() {
        let inner = build_unit_bidiagonal(3, &int_seq(&[5, 6, 7]));
        let e = inner.shifted_embed(2, 5);
        assert_eq!(e.get(0, 0), &Poly::one());
        assert_eq!(e.get(1, 1), &Poly::one());
        assert_eq!(e.get(1, 0), &Poly::zero());
        assert_eq!(e.get(3, 2), &Poly::int(5));
        assert_eq!(e.get(4, 3), &Poly::int(6));
    }

    #[test]
    fn invert_lower_round_trips() {
        let a = build_inv_bidiagonal(6, &Sequence::new(|n| q_int(n + 2)));
        let inv = a.invert_lower().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), TriMat::identity(6));
    }

    #[test]
    fn invert_lower_reports_non_invertible_diagonals() {
        let d = build_diag(3, &int_seq(&[1, 2, 1]));
        assert_eq!(
            d.invert_lower(),
            Err(MatError::NonInvertibleCoefficient(1)),
            "a diagonal entry of 2 has no integer-polynomial inverse"
        );
    }

    #[test]
    fn row_vector_multiplication_matches_matrix_product() {
        let a = build_inv_bidiagonal(5, &Sequence::new(|n| q_int(n + 1)));
        let e2: Vec<Poly> = (0..5)
            .map(|i| if i == 2 { Poly::one() } else { Poly::zero() })
            .collect();
        let row = a.row_vec_mul(&e2);
        for j in 0..5 {
            assert_eq!(&row[j], a.get(2, j));
        }
    }
}
