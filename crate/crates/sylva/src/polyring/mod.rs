//! Exact polynomial and rational-function arithmetic over the fixed variable
//! alphabet `p, q, r, s, g, m, y, z, x`, plus the q-calculus primitives built
//! on it.

mod coef;
mod poly;
pub mod qcalc;
mod ratfn;

pub use coef::Coef;
pub use poly::{Expo, Poly, Var, NVARS};
pub use ratfn::RatFn;

use std::sync::Arc;
use thiserror::Error;

/// Errors from ring arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Exact polynomial division left a nonzero remainder.
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    /// Evaluation point omits a variable that occurs in the expression.
    #[error("evaluation point missing a value for variable '{0}'")]
    MissingVariable(char),
    /// A rational function was constructed with denominator zero.
    #[error("rational function denominator is zero")]
    ZeroDenominator,
    /// Division (or inversion) by zero.
    #[error("division by zero")]
    DivisionByZero,
}

/// A lazily evaluated sequence `n ↦ value`, shared and thread-safe.
///
/// Used both for coefficient sequences of bidiagonal matrices and for
/// polynomial sequences fed to Hankel constructions.
pub struct Sequence<S> {
    f: Arc<dyn Fn(usize) -> S + Send + Sync>,
}

impl<S> Clone for Sequence<S> {
    fn clone(&self) -> Self {
        Sequence { f: Arc::clone(&self.f) }
    }
}

impl<S> Sequence<S> {
    pub fn new(f: impl Fn(usize) -> S + Send + Sync + 'static) -> Sequence<S> {
        Sequence { f: Arc::new(f) }
    }

    pub fn at(&self, n: usize) -> S {
        (self.f)(n)
    }

    pub fn take(&self, n: usize) -> Vec<S> {
        (0..n).map(|i| self.at(i)).collect()
    }
}

impl<S: Clone + Send + Sync + 'static> Sequence<S> {
    /// A sequence that is the same value at every index.
    pub fn constant(v: S) -> Sequence<S> {
        Sequence::new(move |_| v.clone())
    }
}

impl<S> std::fmt::Debug for Sequence<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sequence(..)")
    }
}

/// A polynomial sequence `n ↦ Poly`.
pub type PolySeq = Sequence<Poly>;
