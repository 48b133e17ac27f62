//! Named matrix and polynomial families.
//!
//! The matrices here are truncations of infinite unit-lower-triangular (or
//! lower-Hessenberg, for production matrices) arrays:
//!
//! - `forests_matrix` / `trees_matrix`: counts of k-component forests of
//!   rooted labelled trees on n vertices, `C(n-1,k-1)·n^{n-k}`, and of
//!   trees rooted outside, `C(n,k)·n^{n-k}`.
//! - `q_forests_matrix` / `q_trees_matrix`: q-refinements with entries
//!   `qbin(n-1,k-1)·([n]_q)^{n-k}` and `qbin(n,k)·([n]_q)^{n-k}`.
//! - `rst_forests_matrix` / `rst_trees_matrix`: three-statistic refinements
//!   (the third statistic lives in the `g` slot).
//! - `improper_forests_matrix`: forests by components and improper edges
//!   (variables `y`, `z`), defined as a planar-network path matrix.
//! - `qyz_forests_matrix` / `eightvar_forests_matrix`: the q-weighted
//!   improper-edge matrix and its eight-variable generalisation, both
//!   defined by their planar networks.
//! - `pq_stirling_matrix`: (p,q)-Stirling cycle numbers
//!   `e_{n-k}([1]_{p,q},…,[n-1]_{p,q})`.
//! - `bessel_matrix`: the generalised reverse Bessel triangle `M(r,s,μ,y)`.
//! - `generic_lah`: the output matrix of the production matrix `P_φ`.
//!
//! Diagonal rescalings (`diag_rescale`), row-generating polynomials
//! (`row_gen_polys`), and the classical polynomial sequences (general Abel,
//! Rothe, Schläfli–Gessel–Seo, reverse Bessel, Stirling cycle) round out
//! the catalogue.

use crate::matrixkit::{output_matrix, MatError, Shape, TriMat};
use crate::networks::{catalog, CatalogNet, NetError, PlanarNet};
use crate::polyring::qcalc::{binom, pq_int_in, q_binom, q_binom_in, q_fact, q_int, q_int_in};
use crate::polyring::{Poly, Sequence, Var};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

/// Errors from family construction.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// How a family instance was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Route {
    ClosedForm,
    Network,
    Production,
}

/// A constructed family instance: which variables are live, the truncation,
/// and the construction route used.
#[derive(Debug, Clone, Serialize)]
pub struct FamilySpec {
    pub name: String,
    pub live_vars: Vec<char>,
    pub truncation: usize,
    pub route: Route,
}

impl FamilySpec {
    fn new(name: &str, vars: &[Var], n: usize, route: Route) -> FamilySpec {
        FamilySpec {
            name: name.to_string(),
            live_vars: vars.iter().map(|v| v.letter()).collect(),
            truncation: n,
            route,
        }
    }
}

fn int_pow(base: usize, exp: usize) -> Poly {
    Poly::from_bigint(BigInt::from(base).pow(exp as u32))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `e_m(vals)`, the elementary symmetric polynomial of the given values.
pub fn elem_sym(vals: &[Poly], m: usize) -> Poly {
    if m > vals.len() {
        return Poly::zero();
    }
    // e[j] after processing a prefix = e_j of that prefix.
    let mut e = vec![Poly::zero(); m + 1];
    e[0] = Poly::one();
    for v in vals {
        for j in (1..=m).rev() {
            let add = &e[j - 1] * v;
            e[j] = std::mem::take(&mut e[j]) + add;
        }
    }
    e.pop().unwrap()
}

// ---------------------------------------------------------------------------
// Integer and q-matrices (closed forms)
// ---------------------------------------------------------------------------

/// Forests of rooted labelled trees on `[n]` with `k` components:
/// `f_{n,k} = C(n-1,k-1)·n^{n-k}` (and `f_{0,0} = 1`).
pub fn forests_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == 0 && k == 0 {
            Poly::one()
        } else if k == 0 {
            Poly::zero()
        } else {
            binom(i - 1, k - 1) * int_pow(i, i - k)
        }
    })
}

/// `t_{n,k} = C(n,k)·n^{n-k}` (with `t_{0,0} = 1`).
pub fn trees_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == 0 {
            Poly::one()
        } else {
            binom(i, k) * int_pow(i, i - k)
        }
    })
}

/// `f_{n,k}(q) = qbin(n-1,k-1)·([n]_q)^{n-k}` (and `f_{0,0} = 1`).
pub fn q_forests_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == 0 && k == 0 {
            Poly::one()
        } else if k == 0 {
            Poly::zero()
        } else {
            q_binom(i - 1, k - 1) * q_int(i).pow((i - k) as u32)
        }
    })
}

/// `t_{n,k}(q) = qbin(n,k)·([n]_q)^{n-k}`.
pub fn q_trees_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == 0 {
            Poly::one()
        } else {
            q_binom(i, k) * q_int(i).pow((i - k) as u32)
        }
    })
}

/// The once-shifted q-forests matrix `(f_{n+1,k+1}(q))_{n,k}`, whose entries
/// are `qbin(n,k)·([n+1]_q)^{n-k}`. This is the path matrix of the rational
/// binomial-like network, and the base case for Neville elimination.
pub fn q_forests_shifted_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        q_binom(i, k) * q_int(i + 1).pow((i - k) as u32)
    })
}

/// Three-statistic forests matrix: `1` on the diagonal and
/// `f_{n,k}(r,s,t) = qbin_r(n,k)·[k]_s·([n]_t)^{n-k-1}` below it.
/// The third statistic's variable `t` lives in the `g` slot.
pub fn rst_forests_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == k {
            Poly::one()
        } else {
            q_binom_in(Var::R, i, k)
                * q_int_in(Var::S, k)
                * q_int_in(Var::G, i).pow((i - k - 1) as u32)
        }
    })
}

/// Three-statistic trees matrix: `1` on the diagonal and
/// `t_{n,k}(r,s,t) = ([n]_t)^{n-k-1}·(r^{n-k}·qbin_r(n,k)·[k]_s
/// + [k+1]_s·qbin_r(n,k+1))` below it.
pub fn rst_trees_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::Lower, |i, k| {
        if i == k {
            Poly::one()
        } else {
            let lead = q_int_in(Var::G, i).pow((i - k - 1) as u32);
            let a = Poly::monomial(Var::R, (i - k) as u16, 1)
                * q_binom_in(Var::R, i, k)
                * q_int_in(Var::S, k);
            let b = q_int_in(Var::S, k + 1) * q_binom_in(Var::R, i, k + 1);
            lead * (a + b)
        }
    })
}

fn poly_net(name: &str) -> Result<PlanarNet<Poly>, FamilyError> {
    match catalog(name)? {
        CatalogNet::Poly(net) => Ok(net),
        CatalogNet::Rational(_) => Err(FamilyError::BadParams(format!(
            "network '{name}' has rational weights"
        ))),
    }
}

/// Forests by components and improper edges, `F(y,z)`: the path matrix of
/// the improper-edge network. Entries are homogeneous of degree `n-k` and
/// `F(1,1)` is the forests matrix.
pub fn improper_forests_matrix(n: usize) -> Result<TriMat<Poly>, FamilyError> {
    Ok(poly_net("improper-binom")?.path_matrix_paths(n)?)
}

/// The q-weighted improper-edge matrix `F̂(q,y,z)`: defined as the path
/// matrix of its network (its production matrix is a verified property,
/// not the definition).
pub fn qyz_forests_matrix(n: usize) -> Result<TriMat<Poly>, FamilyError> {
    Ok(poly_net("qyz-binom")?.path_matrix_paths(n)?)
}

/// The eight-variable forests matrix `F(p,q,r,s,γ,μ,y,z)`, defined as the
/// path matrix of the full bidiagonal-pair network.
pub fn eightvar_forests_matrix(n: usize) -> Result<TriMat<Poly>, FamilyError> {
    Ok(poly_net("eightvar-bidiagonal")?.path_matrix_paths(n)?)
}

/// (p,q)-Stirling cycle numbers `g_{n,k}(p,q) =
/// e_{n-k}([1]_{p,q},…,[n-1]_{p,q})`.
pub fn pq_stirling_matrix(n: usize) -> TriMat<Poly> {
    let ints: Vec<Poly> = (1..n).map(|i| pq_int_in(Var::P, Var::Q, i)).collect();
    TriMat::from_fn(n, Shape::Lower, |i, k| elem_sym(&ints[..i.max(1) - 1], i - k))
}

/// The purely i-dependent binomial-like network whose path matrix is the
/// (p,q)-Stirling cycle triangle: `α ≡ 1`, `β_{i,l} = [i-1]_{p,q}`.
pub fn pq_stirling_network() -> PlanarNet<Poly> {
    PlanarNet::binomial_like(
        "pq-stirling",
        |_, _| Poly::one(),
        |i, _| pq_int_in(Var::P, Var::Q, i - 1),
    )
}

/// The generalised reverse Bessel triangle `M(r,s,μ,y)`: the path matrix of
/// the inverse-bidiagonal-only network (the eight-variable network with
/// `p = q = γ = z = 0`).
pub fn bessel_matrix(n: usize) -> Result<TriMat<Poly>, FamilyError> {
    Ok(poly_net("eightvar-tonly")?.path_matrix_paths(n)?)
}

/// The production matrix `P_φ`: `p_{n,k} = (n!/(k-1)!)·φ_{n-k+1}` for
/// `k ≥ 1` and `0` in column 0. Callers should supply `φ(0) = 1` to get the
/// standard lower-Hessenberg triangle.
pub fn phi_production_matrix(n: usize, phi: &Sequence<Poly>) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::LowerHessenberg, |i, k| {
        if k == 0 {
            Poly::zero()
        } else {
            Poly::from_bigint(factorial(i) / factorial(k - 1)) * phi.at(i + 1 - k)
        }
    })
}

/// The generic Lah triangle: the output matrix of `P_φ`.
pub fn generic_lah(n: usize, phi: &Sequence<Poly>) -> Result<TriMat<Poly>, FamilyError> {
    Ok(output_matrix(&phi_production_matrix(n + 1, phi), n)?)
}

/// The symbolic φ-sequence `1, φ₁, φ₂, …` with `φ_j` mapped to the variable
/// slots `p, q, r, s, g, m` (supporting `j ≤ 6`).
pub fn phi_symbolic() -> Sequence<Poly> {
    Sequence::new(|j| {
        if j == 0 {
            return Poly::one();
        }
        let slots = [Var::P, Var::Q, Var::R, Var::S, Var::G, Var::M];
        assert!(
            j <= slots.len(),
            "symbolic phi supports indices up to {}",
            slots.len()
        );
        Poly::var(slots[j - 1])
    })
}

/// The corrected production matrix `P(y,z)` of the improper-edge matrix:
/// `p_{n,k} = Σ_{l=0}^{n+1-k} (n!/((k-1)!·l!))·y^{n+1-k-l}·z^l` for `k ≥ 1`.
/// (Equivalently `B_z·diag(n!)·T_∞(y)·diag(k!)⁻¹·Δ`.)
pub fn improper_production_matrix(n: usize) -> TriMat<Poly> {
    TriMat::from_fn(n, Shape::LowerHessenberg, |i, k| {
        if k == 0 {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for l in 0..=(i + 1 - k) {
            let c = factorial(i) / (factorial(k - 1) * factorial(l));
            acc += Poly::from_bigint(c)
                    * Poly::monomial(Var::Y, (i + 1 - k - l) as u16, 1)
                    * Poly::monomial(Var::Z, l as u16, 1);
        }
        acc
    })
}

/// The production matrix `P'(q,y,z)` of the q-weighted improper-edge
/// matrix: `p_{n,k} = Σ_{l=0}^{n+1-k} ([n]_q!/([k-1]_q!·[l]_q!))·
/// y^{n+1-k-l}·z^l` for `k ≥ 1`.
pub fn qyz_production_matrix(n: usize) -> TriMat<Poly> {
    // [i]_q!/[k-1]_q!/[l]_q! = qbin(i, k-1) · [i-k+1]_q! / [l]_q!
    //                        = qbin(i, k-1) · qbin(i-k+1, l) · [i-k+1-l]_q!
    TriMat::from_fn(n, Shape::LowerHessenberg, |i, k| {
        if k == 0 {
            return Poly::zero();
        }
        let mut acc = Poly::zero();
        for l in 0..=(i + 1 - k) {
            let c = q_binom(i, k - 1) * q_binom(i + 1 - k, l) * q_fact(i + 1 - k - l);
            acc += c * Poly::monomial(Var::Y, (i + 1 - k - l) as u16, 1)
                    * Poly::monomial(Var::Z, l as u16, 1);
        }
        acc
    })
}

// ---------------------------------------------------------------------------
// Rescalings and row-generating polynomials
// ---------------------------------------------------------------------------

/// Which side a diagonal rescaling multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Multiplies `A` by `diag(base^{m(m-1)/2})`: on the right this scales
/// column `k` by `base^{k(k-1)/2}`, on the left row `n` by
/// `base^{n(n-1)/2}`.
pub fn diag_rescale(a: &TriMat<Poly>, base: &Poly, side: Side) -> TriMat<Poly> {
    let n = a.size();
    let pow = |m: usize| base.pow((m * m.saturating_sub(1) / 2) as u32);
    TriMat::from_fn(n, a.shape(), |i, k| match side {
        Side::Left => a.get(i, k) * &pow(i),
        Side::Right => a.get(i, k) * &pow(k),
    })
}

/// Row-generating polynomials `P_n(x) = Σ_k A_{n,k}·x^k` in the given
/// weight variable.
pub fn row_gen_polys(a: &TriMat<Poly>, x: Var) -> Vec<Poly> {
    (0..a.size())
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .map(|(k, c)| c * &Poly::monomial(x, k as u16, 1))
                .fold(Poly::zero(), |acc, t| acc + t)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Named polynomial sequences
// ---------------------------------------------------------------------------

fn prod(factors: impl Iterator<Item = Poly>) -> Poly {
    factors.fold(Poly::one(), |acc, f| acc * f)
}

/// `F̄_n(x;q) = x·∏_{i=1}^{n-1}(x·q^i + [n]_q)`, the row-generating
/// polynomials of the column-rescaled q-forests matrix; at `q = 1` these
/// are the Abel polynomials `x(x+n)^{n-1}`.
pub fn abel_bar_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        if n == 0 {
            return Poly::one();
        }
        Poly::var(Var::X)
            * prod((1..n).map(|i| {
                Poly::monomial(Var::Q, i as u16, 1) * Poly::var(Var::X) + q_int(n)
            }))
    })
}

/// General Abel polynomials `a_n(x;b,h,w,q) = (x+b)·∏_{i=1}^{n-1}(x·q^i + b
/// + [i]_q·h + [n]_q·w)` with `b ↦ y`, `h ↦ r`, `w ↦ s`.
pub fn general_abel_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        if n == 0 {
            return Poly::one();
        }
        (Poly::var(Var::X) + Poly::var(Var::Y))
            * prod((1..n).map(|i| {
                Poly::monomial(Var::Q, i as u16, 1) * Poly::var(Var::X)
                    + Poly::var(Var::Y)
                    + q_int(i) * Poly::var(Var::R)
                    + q_int(n) * Poly::var(Var::S)
            }))
    })
}

/// Rothe polynomials `R_n(x;h,w) = x·∏_{i=1}^{n-1}(x + i·h + n·w)` with
/// `h ↦ r`, `w ↦ s`.
pub fn rothe_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        if n == 0 {
            return Poly::one();
        }
        Poly::var(Var::X)
            * prod((1..n).map(|i| {
                Poly::var(Var::X)
                    + Poly::int(i as i64) * Poly::var(Var::R)
                    + Poly::int(n as i64) * Poly::var(Var::S)
            }))
    })
}

/// Schläfli–Gessel–Seo polynomials `P_n(x;a,b) = x·∏_{i=1}^{n-1}(x + a·i +
/// b·(n-i))` with `a ↦ r`, `b ↦ s`.
pub fn schlafli_gessel_seo_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        if n == 0 {
            return Poly::one();
        }
        Poly::var(Var::X)
            * prod((1..n).map(|i| {
                Poly::var(Var::X)
                    + Poly::int(i as i64) * Poly::var(Var::R)
                    + Poly::int((n - i) as i64) * Poly::var(Var::S)
            }))
    })
}

/// Reverse Bessel polynomials `θ_n(x) = Σ_k C(n+k,2k)·(2k-1)!!·x^{n-k}`.
pub fn reverse_bessel_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        let mut acc = Poly::zero();
        for k in 0..=n {
            let doubled: BigInt = (0..k).map(|j| BigInt::from(2 * j + 1)).product();
            acc += binom(n + k, 2 * k)
                    * Poly::from_bigint(doubled)
                    * Poly::monomial(Var::X, (n - k) as u16, 1);
        }
        acc
    })
}

/// Stirling cycle polynomials `c_n(x;p,q) = x·∏_{i=1}^{n-1}(x + [i]_{p,q})`.
pub fn stirling_cycle_seq() -> Sequence<Poly> {
    Sequence::new(|n| {
        if n == 0 {
            return Poly::one();
        }
        Poly::var(Var::X) * prod((1..n).map(|i| Poly::var(Var::X) + pq_int_in(Var::P, Var::Q, i)))
    })
}

/// Names of the built-in polynomial sequences.
pub fn named_seq_names() -> &'static [&'static str] {
    &[
        "abel-bar",
        "general-abel",
        "rothe",
        "schlafli-gessel-seo",
        "reverse-bessel",
        "stirling-cycle",
    ]
}

/// Looks up a named polynomial sequence.
pub fn named_poly_seq(name: &str) -> Result<Sequence<Poly>, FamilyError> {
    Ok(match name {
        "abel-bar" => abel_bar_seq(),
        "general-abel" => general_abel_seq(),
        "rothe" => rothe_seq(),
        "schlafli-gessel-seo" => schlafli_gessel_seo_seq(),
        "reverse-bessel" => reverse_bessel_seq(),
        "stirling-cycle" => stirling_cycle_seq(),
        other => return Err(FamilyError::UnknownFamily(other.to_string())),
    })
}

// ---------------------------------------------------------------------------
// Family dispatcher
// ---------------------------------------------------------------------------

/// Names of the built-in matrix families.
pub fn family_names() -> &'static [&'static str] {
    &[
        "forests",
        "trees",
        "q-forests",
        "q-trees",
        "q-forests-shifted",
        "rst-forests",
        "rst-trees",
        "improper-forests",
        "qyz-forests",
        "eightvar-forests",
        "pq-stirling",
        "bessel",
        "generic-lah",
    ]
}

/// Builds a family matrix by name.
pub fn family_matrix(name: &str, n: usize) -> Result<(TriMat<Poly>, FamilySpec), FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParams("truncation must be at least 1".into()));
    }
    use Var::*;
    let (m, spec) = match name {
        "forests" => (forests_matrix(n), FamilySpec::new(name, &[], n, Route::ClosedForm)),
        "trees" => (trees_matrix(n), FamilySpec::new(name, &[], n, Route::ClosedForm)),
        "q-forests" => (
            q_forests_matrix(n),
            FamilySpec::new(name, &[Q], n, Route::ClosedForm),
        ),
        "q-trees" => (
            q_trees_matrix(n),
            FamilySpec::new(name, &[Q], n, Route::ClosedForm),
        ),
        "q-forests-shifted" => (
            q_forests_shifted_matrix(n),
            FamilySpec::new(name, &[Q], n, Route::ClosedForm),
        ),
        "rst-forests" => (
            rst_forests_matrix(n),
            FamilySpec::new(name, &[R, S, G], n, Route::ClosedForm),
        ),
        "rst-trees" => (
            rst_trees_matrix(n),
            FamilySpec::new(name, &[R, S, G], n, Route::ClosedForm),
        ),
        "improper-forests" => (
            improper_forests_matrix(n)?,
            FamilySpec::new(name, &[Y, Z], n, Route::Network),
        ),
        "qyz-forests" => (
            qyz_forests_matrix(n)?,
            FamilySpec::new(name, &[Q, Y, Z], n, Route::Network),
        ),
        "eightvar-forests" => (
            eightvar_forests_matrix(n)?,
            FamilySpec::new(name, &[P, Q, R, S, G, M, Y, Z], n, Route::Network),
        ),
        "pq-stirling" => (
            pq_stirling_matrix(n),
            FamilySpec::new(name, &[P, Q], n, Route::ClosedForm),
        ),
        "bessel" => (
            bessel_matrix(n)?,
            FamilySpec::new(name, &[R, S, M, Y], n, Route::Network),
        ),
        "generic-lah" => (
            generic_lah(n, &phi_symbolic())?,
            FamilySpec::new(name, &[P, Q, R, S, G, M], n, Route::Production),
        ),
        other => return Err(FamilyError::UnknownFamily(other.to_string())),
    };
    Ok((m, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixkit::{augment, build_inv_bidiagonal};
    use num_rational::BigRational;

    fn rows_strings(m: &TriMat<Poly>) -> Vec<Vec<String>> {
        let bound = |i: usize| match m.shape() {
            Shape::Lower => i,
            _ => (i + 1).min(m.size() - 1),
        };
        (0..m.size())
            .map(|i| {
                m.row(i)[..=bound(i)]
                    .iter()
                    .map(|p| p.to_string())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn forest_and_tree_arrays_match_the_displayed_values() {
        let f = forests_matrix(7);
        let expect_f: [&[i64]; 7] = [
            &[1],
            &[0, 1],
            &[0, 2, 1],
            &[0, 9, 6, 1],
            &[0, 64, 48, 12, 1],
            &[0, 625, 500, 150, 20, 1],
            &[0, 7776, 6480, 2160, 360, 30, 1],
        ];
        for (i, row) in expect_f.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(f.get(i, k), &Poly::int(*v), "f[{i}][{k}]");
            }
        }
        let t = trees_matrix(7);
        let expect_t: [&[i64]; 7] = [
            &[1],
            &[1, 1],
            &[4, 4, 1],
            &[27, 27, 9, 1],
            &[256, 256, 96, 16, 1],
            &[3125, 3125, 1250, 250, 25, 1],
            &[46656, 46656, 19440, 4320, 540, 36, 1],
        ];
        for (i, row) in expect_t.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(t.get(i, k), &Poly::int(*v), "t[{i}][{k}]");
            }
        }
        // Row sums (n+1)^{n-1} and (n+1)^n.
        for n in 1..7 {
            let fs: Poly = f.row(n).iter().fold(Poly::zero(), |a, b| a + b.clone());
            assert_eq!(fs, int_pow(n + 1, n - 1));
            let ts: Poly = t.row(n).iter().fold(Poly::zero(), |a, b| a + b.clone());
            assert_eq!(ts, int_pow(n + 1, n));
        }
    }

    #[test]
    fn q_matrices_match_the_displayed_rows_verbatim() {
        let f = q_forests_matrix(4);
        assert_eq!(
            rows_strings(&f),
            vec![
                vec!["1".to_string()],
                vec!["0".into(), "1".into()],
                vec!["0".into(), "q+1".into(), "1".into()],
                vec![
                    "0".into(),
                    "q^4+2q^3+3q^2+2q+1".into(),
                    "q^3+2q^2+2q+1".into(),
                    "1".into()
                ],
            ]
        );
        let t = q_trees_matrix(4);
        assert_eq!(
            rows_strings(&t),
            vec![
                vec!["1".to_string()],
                vec!["1".into(), "1".into()],
                vec!["q^2+2q+1".into(), "q^2+2q+1".into(), "1".into()],
                vec![
                    "q^6+3q^5+6q^4+7q^3+6q^2+3q+1".into(),
                    "q^6+3q^5+6q^4+7q^3+6q^2+3q+1".into(),
                    "q^4+2q^3+3q^2+2q+1".into(),
                    "1".into()
                ],
            ]
        );
    }

    #[test]
    fn q_entries_are_monic_self_reciprocal_of_the_stated_degree() {
        let f = q_forests_matrix(7);
        let t = q_trees_matrix(7);
        for n in 1..7 {
            for k in 1..=n {
                let p = f.get(n, k);
                assert_eq!(
                    p.degree_in(Var::Q) as usize,
                    (n - 1) * (n - 1) - (k - 1) * (k - 1),
                    "deg f[{n}][{k}]"
                );
                assert!(p.is_self_reciprocal_in(Var::Q), "palindrome f[{n}][{k}]");
            }
            for k in 0..=n {
                let p = t.get(n, k);
                assert_eq!(
                    p.degree_in(Var::Q) as usize,
                    n * (n - 1) - k * (k.max(1) - 1),
                    "deg t[{n}][{k}]"
                );
                assert!(p.is_self_reciprocal_in(Var::Q), "palindrome t[{n}][{k}]");
            }
        }
    }

    #[test]
    fn entrywise_transfer_identities_between_forests_and_trees() {
        // n·f_{n,k} = k·t_{n,k}, and the q-version [n]·f = [k]·t.
        let f = forests_matrix(8);
        let t = trees_matrix(8);
        for n in 1..8 {
            for k in 1..=n {
                assert_eq!(
                    f.get(n, k) * &Poly::int(n as i64),
                    t.get(n, k) * &Poly::int(k as i64)
                );
            }
            assert_eq!(t.get(n, 0), t.get(n, 1), "t_{{n,0}} = t_{{n,1}}");
        }
        let fq = q_forests_matrix(8);
        let tq = q_trees_matrix(8);
        for n in 1..8 {
            for k in 1..=n {
                assert_eq!(fq.get(n, k) * &q_int(n), tq.get(n, k) * &q_int(k));
            }
            assert_eq!(tq.get(n, 0), tq.get(n, 1));
        }
    }

    #[test]
    fn deleting_first_row_and_column_of_forests_gives_trees_times_binomial() {
        let n = 8;
        let f = forests_matrix(n + 1);
        let t = trees_matrix(n);
        let b = TriMat::from_fn(n, Shape::Lower, binom);
        let tb = t.mul(&b).unwrap();
        for i in 0..n {
            for k in 0..=i {
                assert_eq!(f.get(i + 1, k + 1), tb.get(i, k), "entry ({i},{k})");
            }
        }
    }

    #[test]
    fn q_trees_equals_q_forests_times_inverse_bidiagonal() {
        // T(q) = F(q)·T((qⁿ[n+1]_q)_n) at window 8.
        let n = 8;
        let fq = q_forests_matrix(n);
        let tq = q_trees_matrix(n);
        let a = Sequence::new(|k| Poly::monomial(Var::Q, k as u16, 1) * q_int(k + 1));
        let t_factor = build_inv_bidiagonal(n, &a);
        assert_eq!(fq.mul(&t_factor).unwrap(), tq);
    }

    #[test]
    fn rst_matrices_match_displays_and_specialise_to_q() {
        let f = rst_forests_matrix(4);
        let expect_f31 = q_int_in(Var::R, 3) * q_int_in(Var::G, 3);
        assert_eq!(f.get(3, 1), &expect_f31, "f_{{3,1}}(r,s,t)");
        let t = rst_trees_matrix(4);
        let expect_t20 = (Poly::var(Var::R) + Poly::one()) * (Poly::var(Var::G) + Poly::one());
        assert_eq!(t.get(2, 0), &expect_t20, "t_{{2,0}}(r,s,t)");

        // r = s = t = q recovers the q-matrices.
        let subs = vec![
            (Var::R, Poly::var(Var::Q)),
            (Var::S, Poly::var(Var::Q)),
            (Var::G, Poly::var(Var::Q)),
        ];
        let n = 6;
        let fq = q_forests_matrix(n);
        let tq = q_trees_matrix(n);
        let fr = rst_forests_matrix(n).map(|p| p.subst_many(&subs));
        let tr = rst_trees_matrix(n).map(|p| p.subst_many(&subs));
        assert_eq!(fr, fq);
        assert_eq!(tr, tq);
    }

    #[test]
    fn improper_forests_matches_displays_and_both_other_routes() {
        let f = improper_forests_matrix(7).unwrap();
        let y = Poly::var(Var::Y);
        let z = Poly::var(Var::Z);
        assert_eq!(f.get(2, 1), &(y.clone() + z.clone()));
        assert_eq!(
            f.get(3, 1),
            &(Poly::int(3) * y.pow(2) + Poly::int(4) * &y * &z + Poly::int(2) * z.pow(2))
        );
        assert_eq!(f.get(3, 2), &(Poly::int(3) * &y + Poly::int(3) * &z));
        assert_eq!(
            f.get(4, 1),
            &(Poly::int(25) * y.pow(2) * &z
                + Poly::int(15) * y.pow(3)
                + Poly::int(18) * &y * z.pow(2)
                + Poly::int(6) * z.pow(3))
        );
        assert_eq!(
            f.get(4, 2),
            &(Poly::int(15) * y.pow(2) + Poly::int(22) * &y * &z + Poly::int(11) * z.pow(2))
        );

        // Bidiagonal-network route and production route agree.
        let alt = poly_net("improper-bidiagonal").unwrap().path_matrix_paths(7).unwrap();
        assert_eq!(alt, f);
        let produced = output_matrix(&improper_production_matrix(8), 7).unwrap();
        assert_eq!(produced, f);

        // Homogeneity and the y = z = 1 specialisation.
        for n in 0..7 {
            for k in 1..=n {
                assert_eq!(
                    f.get(n, k).homogeneous_degree_in(&[Var::Y, Var::Z]),
                    Some((n - k) as u32),
                    "degree of entry ({n},{k})"
                );
            }
        }
        let ones = vec![(Var::Y, Poly::one()), (Var::Z, Poly::one())];
        assert_eq!(f.map(|p| p.subst_many(&ones)), forests_matrix(7));
    }

    #[test]
    fn improper_production_rows_match_the_corrected_display() {
        let p = improper_production_matrix(5);
        let strings = rows_strings(&p);
        assert_eq!(strings[0], vec!["0", "1"]);
        assert_eq!(strings[1], vec!["0", "y+z", "1"]);
        assert_eq!(strings[2], vec!["0", "2y^2+2yz+z^2", "2y+2z", "1"]);
        assert_eq!(
            strings[3],
            vec!["0", "6y^3+6y^2z+3yz^2+z^3", "6y^2+6yz+3z^2", "3y+3z", "1"]
        );
    }

    #[test]
    fn qyz_forests_agrees_with_its_production_matrix_and_specialises() {
        let n = 7;
        let fhat = qyz_forests_matrix(n).unwrap();
        let produced = output_matrix(&qyz_production_matrix(n + 1), n).unwrap();
        assert_eq!(produced, fhat);
        // Spot value from the production route cross-check.
        let expect_31 = (Poly::int(2) + Poly::var(Var::Q)) * Poly::var(Var::Y).pow(2)
            + (Poly::int(3) + Poly::var(Var::Q)) * Poly::var(Var::Y) * Poly::var(Var::Z)
            + Poly::int(2) * Poly::var(Var::Z).pow(2);
        assert_eq!(fhat.get(3, 1), &expect_31);
        // q = 1 recovers the improper-edge matrix.
        let at_q1 = fhat.map(|p| p.subst_many(&[(Var::Q, Poly::one())]));
        assert_eq!(at_q1, improper_forests_matrix(n).unwrap());
    }

    #[test]
    fn eightvar_matrix_matches_display_and_specialises_to_q_and_yz() {
        let f = eightvar_forests_matrix(6).unwrap();
        let (g, m, y, z) = (
            Poly::var(Var::G),
            Poly::var(Var::M),
            Poly::var(Var::Y),
            Poly::var(Var::Z),
        );
        let (p, q, r, s) = (
            Poly::var(Var::P),
            Poly::var(Var::Q),
            Poly::var(Var::R),
            Poly::var(Var::S),
        );
        assert_eq!(f.get(2, 1), &(g.clone() * &z + y.clone()));
        let expect_31 = g.pow(2) * &p * &y * &z
            + g.pow(3) * &p * z.pow(2)
            + g.pow(2) * &q * &y * &z
            + g.pow(3) * &q * z.pow(2)
            + g.pow(2) * &y * &z
            + g.clone() * &m * &y * &z
            + m.clone() * y.pow(2)
            + r.clone() * y.pow(2)
            + s.clone() * y.pow(2);
        assert_eq!(f.get(3, 1), &expect_31, "entry (3,1)");
        let expect_32 = g.pow(2) * &p * &z
            + g.pow(2) * &q * &z
            + g.pow(2) * &z
            + m.clone() * &y
            + r.clone() * &y
            + s.clone() * &y;
        assert_eq!(f.get(3, 2), &expect_32, "entry (3,2)");

        // p = r = 1, s = γ = μ = q, y = z = 1 → F(q).
        let to_q = vec![
            (Var::P, Poly::one()),
            (Var::R, Poly::one()),
            (Var::S, Poly::var(Var::Q)),
            (Var::G, Poly::var(Var::Q)),
            (Var::M, Poly::var(Var::Q)),
            (Var::Y, Poly::one()),
            (Var::Z, Poly::one()),
        ];
        assert_eq!(f.map(|e| e.subst_many(&to_q)), q_forests_matrix(6));

        // all six auxiliary variables = 1 → F(y,z).
        let to_yz: Vec<(Var, Poly)> = [Var::P, Var::Q, Var::R, Var::S, Var::G, Var::M]
            .iter()
            .map(|v| (*v, Poly::one()))
            .collect();
        assert_eq!(
            f.map(|e| e.subst_many(&to_yz)),
            improper_forests_matrix(6).unwrap()
        );

        // p = q = γ = z = 0 → M(r,s,μ,y).
        let to_m: Vec<(Var, Poly)> = [Var::P, Var::Q, Var::G, Var::Z]
            .iter()
            .map(|v| (*v, Poly::zero()))
            .collect();
        assert_eq!(f.map(|e| e.subst_many(&to_m)), bessel_matrix(6).unwrap());
    }

    #[test]
    fn pq_stirling_matches_network_recurrence_and_eightvar_specialisation() {
        let n = 8;
        let g = pq_stirling_matrix(n);
        // Network route.
        let net = pq_stirling_network().path_matrix_paths(n).unwrap();
        assert_eq!(net, g);
        // Recurrence g_{n,k} = g_{n-1,k-1} + [n-1]_{p,q}·g_{n-1,k}.
        for i in 1..n {
            for k in 0..=i {
                let prev_diag = if k >= 1 { g.get(i - 1, k - 1).clone() } else { Poly::zero() };
                let prev_same = if k < i {
                    pq_int_in(Var::P, Var::Q, i - 1) * g.get(i - 1, k)
                } else {
                    Poly::zero()
                };
                assert_eq!(g.get(i, k), &(prev_diag + prev_same), "entry ({i},{k})");
            }
        }
        // r = s = μ = y = 0, γ = z = 1 in the eight-variable matrix.
        let subs = vec![
            (Var::R, Poly::zero()),
            (Var::S, Poly::zero()),
            (Var::M, Poly::zero()),
            (Var::Y, Poly::zero()),
            (Var::G, Poly::one()),
            (Var::Z, Poly::one()),
        ];
        let f8 = eightvar_forests_matrix(6).unwrap();
        assert_eq!(f8.map(|e| e.subst_many(&subs)), pq_stirling_matrix(6));
    }

    #[test]
    fn bessel_matrix_matches_displays() {
        let m = bessel_matrix(6).unwrap();
        // m_{3,1}(r,s,1,1) = r + s + 1.
        let ones = vec![(Var::M, Poly::one()), (Var::Y, Poly::one())];
        let m_rs = m.map(|e| e.subst_many(&ones));
        assert_eq!(
            m_rs.get(3, 1),
            &(Poly::var(Var::R) + Poly::var(Var::S) + Poly::one())
        );
        // M(1,1,1,1) is the reverse Bessel triangle.
        let all_ones: Vec<(Var, Poly)> = [Var::R, Var::S, Var::M, Var::Y]
            .iter()
            .map(|v| (*v, Poly::one()))
            .collect();
        let numeric = m.map(|e| e.subst_many(&all_ones));
        let expect: [&[i64]; 6] = [
            &[1],
            &[0, 1],
            &[0, 1, 1],
            &[0, 3, 3, 1],
            &[0, 15, 15, 6, 1],
            &[0, 105, 105, 45, 10, 1],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(numeric.get(i, k), &Poly::int(*v), "entry ({i},{k})");
            }
        }
        // Row-generating polynomials of M(1,1,1,1) are x·θ_{n-1}(x) with θ
        // the reverse Bessel polynomials.
        let gens = row_gen_polys(&numeric, Var::X);
        let theta = reverse_bessel_seq();
        for n in 1..6 {
            assert_eq!(
                gens[n],
                Poly::var(Var::X) * theta.at(n - 1),
                "x·θ_{}",
                n - 1
            );
        }
    }

    #[test]
    fn generic_lah_matches_displays_and_reverse_bessel_at_one() {
        let phi = phi_symbolic();
        let p = phi_production_matrix(6, &phi);
        let (p1, p2, p3, p4) = (
            Poly::var(Var::P),
            Poly::var(Var::Q),
            Poly::var(Var::R),
            Poly::var(Var::S),
        );
        let expect_p: Vec<Vec<Poly>> = vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::zero(), p1.clone(), Poly::one()],
            vec![Poly::zero(), Poly::int(2) * &p2, Poly::int(2) * &p1, Poly::one()],
            vec![
                Poly::zero(),
                Poly::int(6) * &p3,
                Poly::int(6) * &p2,
                Poly::int(3) * &p1,
                Poly::one(),
            ],
            vec![
                Poly::zero(),
                Poly::int(24) * &p4,
                Poly::int(24) * &p3,
                Poly::int(12) * &p2,
                Poly::int(4) * &p1,
                Poly::one(),
            ],
        ];
        for (i, row) in expect_p.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(p.get(i, k), v, "P_φ entry ({i},{k})");
            }
        }

        let lah = generic_lah(5, &phi).unwrap();
        assert_eq!(lah.get(2, 1), &p1);
        assert_eq!(lah.get(3, 1), &(p1.pow(2) + Poly::int(2) * &p2));
        assert_eq!(lah.get(3, 2), &(Poly::int(3) * &p1));
        assert_eq!(
            lah.get(4, 1),
            &(p1.pow(3) + Poly::int(8) * &p1 * &p2 + Poly::int(6) * &p3)
        );
        assert_eq!(lah.get(4, 2), &(Poly::int(7) * p1.pow(2) + Poly::int(8) * &p2));
        assert_eq!(lah.get(4, 3), &(Poly::int(6) * &p1));

        // φ ≡ 1 gives the reverse Bessel triangle M(1,1,1,1).
        let ones = Sequence::new(|_| Poly::one());
        let lah_ones = generic_lah(6, &ones).unwrap();
        let all_ones: Vec<(Var, Poly)> = [Var::R, Var::S, Var::M, Var::Y]
            .iter()
            .map(|v| (*v, Poly::one()))
            .collect();
        let bessel_ones = bessel_matrix(6).unwrap().map(|e| e.subst_many(&all_ones));
        assert_eq!(lah_ones, bessel_ones);

        // [1 ⊕ T((n+1)·y^{n+1-k} style block)] equals the augmented P_φ at
        // φ_j = y^j.
        let phi_y = Sequence::new(|j| Poly::monomial(Var::Y, j as u16, 1));
        let p_y = phi_production_matrix(6, &phi_y);
        let t_block = build_inv_bidiagonal(
            5,
            &Sequence::new(|k| Poly::var(Var::Y) * Poly::int((k + 1) as i64)),
        );
        assert_eq!(t_block.shifted_embed(1, 6), augment(&p_y, 6));
    }

    #[test]
    fn abel_bar_rescaling_matches_its_product_formula() {
        let n = 6;
        let fbar = diag_rescale(&q_forests_matrix(n), &Poly::var(Var::Q), Side::Right);
        // Spot check: entry (3,2) = f_{3,2}(q)·q.
        assert_eq!(fbar.get(3, 2).to_string(), "q^4+2q^3+2q^2+q");
        let gens = row_gen_polys(&fbar, Var::X);
        let closed = abel_bar_seq();
        for i in 0..n {
            assert_eq!(gens[i], closed.at(i), "F̄_{i}");
        }
        // q = 1 gives the Abel polynomials x(x+n)^{n-1}.
        for i in 1..n {
            let at1 = closed.at(i).subst_many(&[(Var::Q, Poly::one())]);
            let abel = Poly::var(Var::X)
                * (Poly::var(Var::X) + Poly::int(i as i64)).pow((i - 1) as u32);
            assert_eq!(at1, abel);
        }
    }

    #[test]
    fn general_abel_specialises_to_abel_bar_rothe_and_stirling_like() {
        let ga = general_abel_seq();
        let zero_b_h = vec![
            (Var::Y, Poly::zero()),
            (Var::R, Poly::zero()),
            (Var::S, Poly::one()),
        ];
        let abel = abel_bar_seq();
        for n in 0..6 {
            assert_eq!(ga.at(n).subst_many(&zero_b_h), abel.at(n), "a_n(x;0,0,1,q)");
        }
        // q = 1, b = 0 gives the Rothe polynomials.
        let to_rothe = vec![(Var::Y, Poly::zero()), (Var::Q, Poly::one())];
        let rothe = rothe_seq();
        for n in 0..6 {
            assert_eq!(ga.at(n).subst_many(&to_rothe), rothe.at(n), "R_{n}");
        }
    }

    #[test]
    fn rothe_convolution_identity_holds() {
        // R_n(x+y) = Σ_k C(n,k)·R_k(x)·R_{n-k}(y).
        let rothe = rothe_seq();
        for n in 0..=6 {
            let lhs = rothe
                .at(n)
                .subst_many(&[(Var::X, Poly::var(Var::X) + Poly::var(Var::Y))]);
            let mut rhs = Poly::zero();
            for k in 0..=n {
                let in_y = rothe.at(n - k).subst_many(&[(Var::X, Poly::var(Var::Y))]);
                rhs += binom(n, k) * rothe.at(k) * in_y;
            }
            assert_eq!(lhs, rhs, "convolution at n = {n}");
        }
    }

    #[test]
    fn classical_sequence_values() {
        let theta = reverse_bessel_seq();
        assert_eq!(theta.at(2).to_string(), "x^2+3x+3");
        assert_eq!(theta.at(3).to_string(), "x^3+6x^2+15x+15");
        let c = stirling_cycle_seq();
        let expect_c3 = Poly::var(Var::X)
            * (Poly::var(Var::X) + Poly::one())
            * (Poly::var(Var::X) + Poly::var(Var::P) + Poly::var(Var::Q));
        assert_eq!(c.at(3), expect_c3);
        // Row-generating polynomials of the Stirling matrix match c_n(x;p,q).
        let gens = row_gen_polys(&pq_stirling_matrix(6), Var::X);
        for n in 1..6 {
            assert_eq!(gens[n], c.at(n), "c_{n}");
        }
        let sgs = schlafli_gessel_seo_seq();
        let expect_p2 = Poly::var(Var::X)
            * (Poly::var(Var::X) + Poly::var(Var::R) + Poly::var(Var::S));
        assert_eq!(sgs.at(2), expect_p2);
    }

    #[test]
    fn q_forests_rational_routes_agree_with_the_closed_form() {
        use crate::polyring::RatFn;
        let n = 7;
        let expect = q_forests_matrix(n).map(|p| RatFn::from_poly(p.clone()));
        for name in ["qforest-lonly", "qforest-tonly"] {
            let net = match catalog(name).unwrap() {
                CatalogNet::Rational(net) => net,
                _ => panic!("expected rational weights"),
            };
            assert_eq!(net.path_matrix_transfer(n).unwrap(), expect, "{name}");
        }
        // The polynomial bidiagonal network gives the same matrix at N = 10.
        let big = poly_net("qforest-bidiagonal").unwrap().path_matrix_paths(10).unwrap();
        assert_eq!(big, q_forests_matrix(10));
        // The rational binomial-like network gives the once-shifted matrix.
        let shifted = match catalog("qforest-rational").unwrap() {
            CatalogNet::Rational(net) => net.path_matrix_paths(8).unwrap(),
            _ => panic!("expected rational weights"),
        };
        assert_eq!(
            shifted,
            q_forests_shifted_matrix(8).map(|p| RatFn::from_poly(p.clone()))
        );
    }

    #[test]
    fn qforest_rational_network_is_pointwise_correct_at_sample_points() {
        // Evaluate the shifted matrix at q ∈ {1, 2, 1/2, 3} at N = 10.
        let net = match catalog("qforest-rational").unwrap() {
            CatalogNet::Rational(net) => net,
            _ => panic!("expected rational weights"),
        };
        let n = 10;
        let paths = net.path_matrix_paths(n).unwrap();
        let closed = q_forests_shifted_matrix(n);
        let points = [
            BigRational::from_integer(1.into()),
            BigRational::from_integer(2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer(3.into()),
        ];
        for q in &points {
            for i in 0..n {
                for k in 0..=i {
                    let lhs = paths.get(i, k).eval(&[(Var::Q, q.clone())]).unwrap();
                    let rhs = closed.get(i, k).eval(&[(Var::Q, q.clone())]).unwrap();
                    assert_eq!(lhs, rhs, "entry ({i},{k}) at q = {q}");
                }
            }
        }
    }

    #[test]
    fn family_dispatcher_builds_every_catalogued_name() {
        for name in family_names() {
            let (m, spec) = family_matrix(name, 4).unwrap();
            assert_eq!(m.size(), 4, "{name}");
            assert_eq!(spec.truncation, 4);
        }
        assert!(matches!(
            family_matrix("no-such-family", 4),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            family_matrix("forests", 0),
            Err(FamilyError::BadParams(_))
        ));
    }
}
