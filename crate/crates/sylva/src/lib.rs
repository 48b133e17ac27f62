//! Exact symbolic toolkit for the matrices that count labelled forests and
//! trees, their q-, (p,q)- and multivariate refinements, the planar networks
//! whose lattice-path matrices realize them, and coefficientwise
//! total-positivity checking of those matrices and of Hankel matrices of
//! their row-generating polynomials.
//!
//! The crate is organized in layers:
//!
//! - [`polyring`]: sparse exact multivariate polynomials over ℤ in the fixed
//!   alphabet `p,q,r,s,g,m,y,z,x`, rational functions, and q-calculus.
//! - [`matrixkit`]: lower-triangular/Hessenberg matrices over any of those
//!   scalar types, bidiagonal and inverse-bidiagonal builders, shifted direct
//!   sums, fraction-free determinants, streaming minor enumeration, and
//!   output/production-matrix machinery.
//! - [`networks`]: planar networks in the binomial-like normal form and in
//!   column-transfer (factored) form, with three independent routes to the
//!   path matrix, plus the switch transformation on bidiagonal pairs.
//! - [`families`]: the concrete matrix families (forest and tree matrices,
//!   their q/(p,q)/rst/yz/8-variable refinements, Stirling-cycle and
//!   Lah/Bessel relatives) and named polynomial sequences.
//! - [`combinat`]: forests as parent maps, Prüfer codes, exhaustive
//!   statistic oracles, permutation and matching generating polynomials, and
//!   Stieltjes continued-fraction machinery.
//! - [`tpcheck`]: total-positivity checking (coefficientwise and pointwise),
//!   Neville elimination, Hankel matrices, and the conjecture suites.
//!
//! The primary interface is the `examples/` directory — one runnable
//! walkthrough per capability — together with a thin `sylva` binary exposing
//! the same operations as subcommands.

#![forbid(unsafe_code)]

pub mod cli;
pub mod combinat;
pub mod config;
pub mod families;
pub mod matrixkit;
pub mod networks;
pub mod polyring;
pub mod report;
pub mod tpcheck;
pub mod verify;
