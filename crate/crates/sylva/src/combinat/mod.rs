//! Brute-force combinatorial oracles.
//!
//! Everything here recomputes generating polynomials by direct enumeration,
//! independently of the closed forms and networks in [`crate::families`]:
//!
//! - forests of rooted labelled trees as parent maps, with the
//!   niblings / smallest-child-index / parent-label statistics and the
//!   proper/improper edge split;
//! - the Prüfer bijection (peel the largest nonroot leaf) used both to
//!   enumerate forests without rejection and as a tested round trip;
//! - permutations by left-right maxima and inversions;
//! - perfect matchings by crossings and nestings;
//! - Stieltjes continued fractions: expansion of an S-fraction into its
//!   Taylor coefficients, and the inverse extraction of the λ sequence
//!   from a series.
//!
//! Weight conventions (variable slots): `q` carries the combined q-statistic;
//! `r`, `s` carry niblings and smallest-child-index; the third forest
//! statistic lives in the `g` slot; `y`, `z` count improper and proper
//! edges; matchings use `r` for crossings and `s` for nestings.
//!
//! The weight of a forest vertex that is neither a root nor the smallest
//! child of a root is `t^{parent(v)-1}`; the total `t`-exponent of a forest
//! is therefore `parents(F) - (n-k-1)` where `parents(F)` sums the parent
//! labels of those vertices. (The compact form of the weight seen elsewhere
//! is off by one from this per-vertex product; the per-vertex product is
//! what matches the closed forms, and the oracles here pin that down.)

use crate::matrixkit::Scalar;
use crate::polyring::qcalc::binom;
use crate::polyring::{Poly, PolyError, Sequence, Var};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Errors from oracle construction and continued-fraction inversion.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CombinatError {
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("series position {0} requires an exact division that fails")]
    NonInvertibleCoefficient(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

// ---------------------------------------------------------------------------
// Forests
// ---------------------------------------------------------------------------

/// A forest of rooted labelled trees on vertices `1..=n`, stored as a parent
/// map; `parent(v) = 0` marks `v` as a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    parent: Vec<usize>,
}

impl Forest {
    /// Validates the parent map: entries in `0..=n` and no cycles.
    pub fn new(parent: Vec<usize>) -> Result<Forest, CombinatError> {
        let n = parent.len();
        for (i, &p) in parent.iter().enumerate() {
            if p > n {
                return Err(CombinatError::InvalidForest(format!(
                    "vertex {} has parent {} out of range",
                    i + 1,
                    p
                )));
            }
            if p == i + 1 {
                return Err(CombinatError::InvalidForest(format!(
                    "vertex {} is its own parent",
                    i + 1
                )));
            }
        }
        // Walk each vertex to a root, detecting cycles by path length.
        for start in 1..=n {
            let mut v = start;
            let mut steps = 0;
            while parent[v - 1] != 0 {
                v = parent[v - 1];
                steps += 1;
                if steps > n {
                    return Err(CombinatError::InvalidForest(format!(
                        "cycle reachable from vertex {start}"
                    )));
                }
            }
        }
        Ok(Forest { parent })
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Parent label of `v`, `0` for roots.
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v - 1]
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v - 1] == 0
    }

    /// Root vertices in ascending order.
    pub fn roots(&self) -> Vec<usize> {
        (1..=self.vertex_count())
            .filter(|&v| self.is_root(v))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.parent.iter().filter(|&&p| p == 0).count()
    }

    /// True when `v` has no children.
    pub fn is_leaf(&self, v: usize) -> bool {
        !self.parent.contains(&v)
    }
}

/// The statistics of a forest used by the generating-polynomial oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForestStats {
    /// Σ over roots v of #{nonroot v' < v}.
    pub niblings: usize,
    /// Index of `parent(v_min)` among the ascending roots, where `v_min` is
    /// the least vertex whose parent is a root; `0` when no root has a child.
    pub scindex: usize,
    /// Σ of `parent(v)` over vertices that are neither roots nor `v_min`.
    pub parents: usize,
    /// Edges `(parent i, child j)` such that some descendant of `j`
    /// (possibly `j` itself) is smaller than `i`.
    pub improper: usize,
    /// Number of components.
    pub components: usize,
}

impl ForestStats {
    /// The `t`-exponent of the forest weight: the per-vertex product of
    /// `t^{parent(v)-1}` over the `parents`-statistic vertices.
    pub fn t_exponent(&self, n: usize) -> usize {
        if n == self.components {
            0
        } else {
            self.parents - (n - self.components - 1)
        }
    }
}

/// Computes all statistics of a forest in one pass.
pub fn forest_stats(f: &Forest) -> ForestStats {
    let n = f.vertex_count();
    let roots = f.roots();
    let k = roots.len();

    let niblings = roots
        .iter()
        .map(|&v| (1..v).filter(|&u| !f.is_root(u)).count())
        .sum();

    // v_min: least vertex whose parent is a root.
    let v_min = (1..=n).find(|&v| {
        let p = f.parent(v);
        p != 0 && f.is_root(p)
    });
    let scindex = match v_min {
        None => 0,
        Some(v) => roots.iter().position(|&r| r == f.parent(v)).unwrap(),
    };

    let parents = (1..=n)
        .filter(|&v| !f.is_root(v) && Some(v) != v_min)
        .map(|v| f.parent(v))
        .sum();

    // Subtree minima, bottom-up: process vertices by decreasing depth.
    let mut min_sub: Vec<usize> = (0..=n).collect();
    let mut depth = vec![0usize; n + 1];
    for v in 1..=n {
        let (mut u, mut d) = (v, 0);
        while f.parent(u) != 0 {
            u = f.parent(u);
            d += 1;
        }
        depth[v] = d;
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    let mut improper = 0;
    for &v in &order {
        let p = f.parent(v);
        if p != 0 {
            if min_sub[v] < p {
                improper += 1;
            }
            min_sub[p] = min_sub[p].min(min_sub[v]);
        }
    }

    ForestStats {
        niblings,
        scindex,
        parents,
        improper,
        components: k,
    }
}

// ---------------------------------------------------------------------------
// Prüfer bijection
// ---------------------------------------------------------------------------

/// A Prüfer code for a forest: the sorted root set together with the parent
/// sequence recorded while peeling the largest nonroot leaf. The sequence
/// has length `n - k`; entries are in `[n]`, and the last entry is a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruferCode {
    pub root_set: Vec<usize>,
    pub seq: Vec<usize>,
}

impl PruferCode {
    pub fn vertex_count(&self) -> usize {
        self.root_set.len() + self.seq.len()
    }
}

/// Encodes a forest by repeatedly removing its largest nonroot leaf and
/// recording the parent of the removed vertex.
pub fn prufer_encode(f: &Forest) -> PruferCode {
    let n = f.vertex_count();
    let mut child_count = vec![0usize; n + 1];
    for v in 1..=n {
        child_count[f.parent(v)] += 1;
    }
    let mut alive = vec![true; n + 1];
    let mut seq = Vec::with_capacity(n - f.component_count());
    loop {
        let next = (1..=n)
            .rev()
            .find(|&v| alive[v] && !f.is_root(v) && child_count[v] == 0);
        match next {
            None => break,
            Some(v) => {
                let p = f.parent(v);
                seq.push(p);
                alive[v] = false;
                child_count[p] -= 1;
            }
        }
    }
    PruferCode {
        root_set: f.roots(),
        seq,
    }
}

/// Decodes a Prüfer code back into the unique forest with that root set and
/// sequence.
pub fn prufer_decode(code: &PruferCode) -> Result<Forest, CombinatError> {
    let n = code.vertex_count();
    let mut is_root = vec![false; n + 1];
    for w in code.root_set.windows(2) {
        if w[0] >= w[1] {
            return Err(CombinatError::MalformedCode(
                "root set must be strictly increasing".into(),
            ));
        }
    }
    for &r in &code.root_set {
        if r == 0 || r > n {
            return Err(CombinatError::MalformedCode(format!(
                "root {r} out of range for {n} vertices"
            )));
        }
        is_root[r] = true;
    }
    for &p in &code.seq {
        if p == 0 || p > n {
            return Err(CombinatError::MalformedCode(format!(
                "sequence entry {p} out of range for {n} vertices"
            )));
        }
    }
    if let Some(&last) = code.seq.last() {
        if !is_root[last] {
            return Err(CombinatError::MalformedCode(format!(
                "last sequence entry {last} is not a root"
            )));
        }
    }

    // suffix_count[u] = multiplicity of u in the not-yet-consumed suffix;
    // a vertex is a leaf of the current subforest iff absent from it.
    let mut suffix_count = vec![0usize; n + 1];
    for &p in &code.seq {
        suffix_count[p] += 1;
    }
    let mut parent = vec![0usize; n];
    let mut removed = vec![false; n + 1];
    for &p in &code.seq {
        let v = (1..=n)
            .rev()
            .find(|&v| !is_root[v] && !removed[v] && suffix_count[v] == 0)
            .ok_or_else(|| {
                CombinatError::MalformedCode("no removable vertex at some step".into())
            })?;
        parent[v - 1] = p;
        removed[v] = true;
        suffix_count[p] -= 1;
    }
    Forest::new(parent)
}

// ---------------------------------------------------------------------------
// Forest enumeration
// ---------------------------------------------------------------------------

fn root_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=n).combinations(k).collect()
}

/// Calls `visit` once per Prüfer sequence valid for the given root set.
fn for_each_code(n: usize, roots: &[usize], mut visit: impl FnMut(&[usize])) {
    let len = n - roots.len();
    if len == 0 {
        visit(&[]);
        return;
    }
    // Mixed-radix counter: positions 0..len-1 over [n], last over the roots.
    let mut seq = vec![1usize; len];
    seq[len - 1] = roots[0];
    let mut root_idx = 0usize;
    loop {
        visit(&seq);
        // Increment.
        if root_idx + 1 < roots.len() {
            root_idx += 1;
            seq[len - 1] = roots[root_idx];
            continue;
        }
        root_idx = 0;
        seq[len - 1] = roots[0];
        let mut pos = len.wrapping_sub(2);
        loop {
            if pos == usize::MAX {
                return;
            }
            if seq[pos] < n {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 1;
            pos = pos.wrapping_sub(1);
        }
    }
}

/// Enumerates all forests on `n` vertices with `k` components, by root
/// subsets and Prüfer decoding (no rejection).
pub fn enum_forests(n: usize, k: usize) -> Vec<Forest> {
    if n == 0 && k == 0 {
        return vec![Forest { parent: vec![] }];
    }
    if k == 0 || k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for roots in root_subsets(n, k) {
        for_each_code(n, &roots, |seq| {
            let code = PruferCode {
                root_set: roots.clone(),
                seq: seq.to_vec(),
            };
            out.push(prufer_decode(&code).expect("generated codes are well-formed"));
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Generating polynomials over forests
// ---------------------------------------------------------------------------

/// Which statistic family weights the forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weighting {
    /// `q^{niblings + scindex + t-exponent}`.
    QStatistic,
    /// `r^{niblings} s^{scindex} t^{t-exponent}` (`t` in the `g` slot).
    RstStatistic,
    /// `y^{improper} z^{proper}` over the edges.
    YzImproper,
    /// The `rst` weighting over forests on `n+1` vertices with `k+1`
    /// components in which vertex `n+1` is a leaf.
    RstLeafVariant,
}

impl Weighting {
    pub fn names() -> &'static [&'static str] {
        &["q-statistic", "rst-statistic", "yz-improper", "rst-leaf-variant"]
    }
}

impl std::str::FromStr for Weighting {
    type Err = CombinatError;
    fn from_str(s: &str) -> Result<Weighting, CombinatError> {
        Ok(match s {
            "q-statistic" => Weighting::QStatistic,
            "rst-statistic" => Weighting::RstStatistic,
            "yz-improper" => Weighting::YzImproper,
            "rst-leaf-variant" => Weighting::RstLeafVariant,
            other => {
                return Err(CombinatError::BadParams(format!(
                    "unknown weighting '{other}'"
                )))
            }
        })
    }
}

type ExpoKey = (u16, u16, u16);

/// Sums `counts[e] · monomial(e)` into a polynomial.
fn poly_from_counts(
    counts: HashMap<ExpoKey, i64>,
    vars: (Var, Var, Var),
) -> Poly {
    let mut acc = Poly::zero();
    for ((a, b, c), cnt) in counts {
        let term = Poly::monomial(vars.0, a, cnt)
            * Poly::monomial(vars.1, b, 1)
            * Poly::monomial(vars.2, c, 1);
        acc += term;
    }
    acc
}

fn merge_counts(mut into: HashMap<ExpoKey, i64>, from: HashMap<ExpoKey, i64>) -> HashMap<ExpoKey, i64> {
    for (k, v) in from {
        *into.entry(k).or_insert(0) += v;
    }
    into
}

/// Accumulates the statistic exponents of every forest in `F_{n,k}` that
/// satisfies `keep`, in parallel over root subsets.
fn forest_exponent_counts(
    n: usize,
    k: usize,
    keep: impl Fn(&Forest) -> bool + Sync,
    exponents: impl Fn(&Forest, &ForestStats) -> ExpoKey + Sync,
) -> HashMap<ExpoKey, i64> {
    if n == 0 && k == 0 {
        let mut m = HashMap::new();
        m.insert((0, 0, 0), 1);
        return m;
    }
    if k == 0 || k > n {
        return HashMap::new();
    }
    root_subsets(n, k)
        .into_par_iter()
        .map(|roots| {
            let mut counts: HashMap<ExpoKey, i64> = HashMap::new();
            for_each_code(n, &roots, |seq| {
                let code = PruferCode {
                    root_set: roots.clone(),
                    seq: seq.to_vec(),
                };
                let f = prufer_decode(&code).expect("generated codes are well-formed");
                if keep(&f) {
                    let stats = forest_stats(&f);
                    *counts.entry(exponents(&f, &stats)).or_insert(0) += 1;
                }
            });
            counts
        })
        .reduce(HashMap::new, merge_counts)
}

/// The generating polynomial of the chosen forest class and weighting.
pub fn forest_genpoly(n: usize, k: usize, weighting: Weighting) -> Poly {
    match weighting {
        Weighting::QStatistic => {
            let counts = forest_exponent_counts(
                n,
                k,
                |_| true,
                |f, st| {
                    let e = st.niblings + st.scindex + st.t_exponent(f.vertex_count());
                    (e as u16, 0, 0)
                },
            );
            poly_from_counts(counts, (Var::Q, Var::Q, Var::Q))
        }
        Weighting::RstStatistic => {
            let counts = forest_exponent_counts(
                n,
                k,
                |_| true,
                |f, st| {
                    (
                        st.niblings as u16,
                        st.scindex as u16,
                        st.t_exponent(f.vertex_count()) as u16,
                    )
                },
            );
            poly_from_counts(counts, (Var::R, Var::S, Var::G))
        }
        Weighting::YzImproper => {
            let counts = forest_exponent_counts(
                n,
                k,
                |_| true,
                |f, st| {
                    let edges = f.vertex_count() - st.components;
                    (st.improper as u16, (edges - st.improper) as u16, 0)
                },
            );
            poly_from_counts(counts, (Var::Y, Var::Z, Var::Z))
        }
        Weighting::RstLeafVariant => {
            let counts = forest_exponent_counts(
                n + 1,
                k + 1,
                |f| f.is_leaf(f.vertex_count()),
                |f, st| {
                    (
                        st.niblings as u16,
                        st.scindex as u16,
                        st.t_exponent(f.vertex_count()) as u16,
                    )
                },
            );
            poly_from_counts(counts, (Var::R, Var::S, Var::G))
        }
    }
}

// ---------------------------------------------------------------------------
// Permutations and matchings
// ---------------------------------------------------------------------------

/// For each `k`, the sum over permutations of `[n]` with `k` left-right
/// maxima of `q^{inversions + k - n}` (index `k` from `0` to `n`).
pub fn perm_genpoly(n: usize) -> Vec<Poly> {
    let mut counts: Vec<HashMap<u16, i64>> = vec![HashMap::new(); n + 1];
    if n == 0 {
        counts[0].insert(0, 1);
    }
    for perm in (1..=n).permutations(n) {
        if perm.is_empty() {
            continue;
        }
        let mut lrm = 0usize;
        let mut best = 0usize;
        for &v in &perm {
            if v > best {
                lrm += 1;
                best = v;
            }
        }
        let inv = perm
            .iter()
            .enumerate()
            .map(|(i, &a)| perm[i + 1..].iter().filter(|&&b| b < a).count())
            .sum::<usize>();
        let e = (inv + lrm - n) as u16;
        *counts[lrm].entry(e).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|m| {
            m.into_iter()
                .fold(Poly::zero(), |acc, (e, c)| acc + Poly::monomial(Var::Q, e, c))
        })
        .collect()
}

fn matchings_rec(
    points: &[usize],
    arcs: &mut Vec<(usize, usize)>,
    counts: &mut HashMap<ExpoKey, i64>,
) {
    if points.is_empty() {
        let mut cr = 0u16;
        let mut ne = 0u16;
        for (i, &(a1, b1)) in arcs.iter().enumerate() {
            for &(a2, b2) in &arcs[i + 1..] {
                // Arcs are produced with ascending openers: a1 < a2.
                debug_assert!(a1 < a2);
                if a2 < b1 && b1 < b2 {
                    cr += 1;
                } else if a2 < b2 && b2 < b1 {
                    ne += 1;
                }
            }
        }
        *counts.entry((cr, ne, 0)).or_insert(0) += 1;
        return;
    }
    let least = points[0];
    for idx in 1..points.len() {
        let partner = points[idx];
        let mut rest: Vec<usize> = points[1..].to_vec();
        rest.remove(idx - 1);
        arcs.push((least, partner));
        matchings_rec(&rest, arcs, counts);
        arcs.pop();
    }
}

/// Sum over perfect matchings of `[2n]` of `r^{crossings} s^{nestings}`.
pub fn matching_genpoly(n: usize) -> Poly {
    let points: Vec<usize> = (1..=2 * n).collect();
    let mut counts = HashMap::new();
    let mut arcs = Vec::new();
    matchings_rec(&points, &mut arcs, &mut counts);
    poly_from_counts(counts, (Var::R, Var::S, Var::S))
}

// ---------------------------------------------------------------------------
// Stieltjes continued fractions
// ---------------------------------------------------------------------------

/// Taylor coefficients `a_0, …, a_order` of the S-fraction
/// `1/(1 - λ_1 t/(1 - λ_2 t/(1 - …)))`: `a_j` sums, over Dyck paths of
/// length `2j`, the product of `λ_h` over falls from height `h`.
pub fn sfraction_expand<S: Scalar>(lambdas: &Sequence<S>, order: usize) -> Vec<S> {
    let lam: Vec<S> = (1..=order).map(|i| lambdas.at(i)).collect();
    let mut out = Vec::with_capacity(order + 1);
    out.push(S::one());
    let mut dp = vec![S::zero(); order + 2];
    dp[0] = S::one();
    for step in 1..=2 * order {
        let mut next = vec![S::zero(); order + 2];
        for h in 0..=order {
            if dp[h].is_zero() {
                continue;
            }
            next[h + 1] = next[h + 1].add(&dp[h]);
            if h >= 1 {
                next[h - 1] = next[h - 1].add(&lam[h - 1].mul(&dp[h]));
            }
        }
        dp = next;
        if step % 2 == 0 {
            out.push(dp[0].clone());
        }
    }
    out
}

/// Multiplicative inverse of a power series with constant term 1.
fn series_inverse<S: Scalar>(a: &[S]) -> Vec<S> {
    let mut b = vec![S::zero(); a.len()];
    b[0] = S::one();
    for n in 1..a.len() {
        let mut acc = S::zero();
        for i in 1..=n {
            acc = acc.add(&a[i].mul(&b[n - i]));
        }
        b[n] = acc.neg();
    }
    b
}

/// Recovers `λ_1, …, λ_order` from the Taylor coefficients of an
/// S-fraction. The series must start with 1 and supply at least
/// `order + 1` coefficients; every step divides exactly by the previous λ
/// and fails with `NonInvertibleCoefficient` otherwise.
pub fn series_to_sfraction<S: Scalar>(
    series: &[S],
    order: usize,
) -> Result<Vec<S>, CombinatError> {
    if series.len() < order + 1 {
        return Err(CombinatError::BadParams(format!(
            "need {} coefficients for order {}, got {}",
            order + 1,
            order,
            series.len()
        )));
    }
    if series[0] != S::one() {
        return Err(CombinatError::NonInvertibleCoefficient(0));
    }
    let mut cur: Vec<S> = series[..=order].to_vec();
    let mut lambdas = Vec::with_capacity(order);
    for i in 1..=order {
        // 1 - 1/cur = λ_i · t · (next S-fraction tail).
        let inv = series_inverse(&cur);
        let u: Vec<S> = inv.iter().skip(1).map(|c| c.neg()).collect();
        if u.iter().all(S::is_zero) {
            lambdas.resize(order, S::zero());
            break;
        }
        let lam = u[0].clone();
        if lam.is_zero() {
            return Err(CombinatError::NonInvertibleCoefficient(i));
        }
        let mut next = Vec::with_capacity(u.len());
        for (j, c) in u.iter().enumerate() {
            next.push(
                c.exact_div(&lam)
                    .ok_or(CombinatError::NonInvertibleCoefficient(i + j))?,
            );
        }
        lambdas.push(lam);
        cur = next;
    }
    Ok(lambdas)
}

/// The crossing polynomial of perfect matchings on `2(n-1)` points, from
/// the alternating binomial sum divided exactly by `(1-r)^{n-1}`.
pub fn touchard_riordan(n: usize) -> Result<Poly, CombinatError> {
    if n == 0 {
        return Err(CombinatError::BadParams("index must be at least 1".into()));
    }
    let m = n - 1; // matchings on 2m points
    let mut acc = Poly::zero();
    for j in 0..=m {
        let first = binom(2 * m, m - j);
        let second = match (m - j).checked_sub(1) {
            Some(d) => binom(2 * m, d),
            None => Poly::zero(),
        };
        let term = Poly::monomial(Var::R, (j * (j + 1) / 2) as u16, 1) * (first - second);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    let denom = (Poly::one() - Poly::var(Var::R)).pow(m as u32);
    Ok(acc.exact_div(&denom)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        improper_forests_matrix, pq_stirling_matrix, q_forests_matrix, rst_forests_matrix,
        rst_trees_matrix, stirling_cycle_seq,
    };
    use crate::polyring::qcalc::{q_int, q_int_in};
    use num_bigint::BigInt;

    fn forest(parents: &[usize]) -> Forest {
        Forest::new(parents.to_vec()).unwrap()
    }

    #[test]
    fn forest_validation_rejects_bad_parent_maps() {
        assert!(matches!(
            Forest::new(vec![2, 1]),
            Err(CombinatError::InvalidForest(_))
        ));
        assert!(matches!(
            Forest::new(vec![1]),
            Err(CombinatError::InvalidForest(_))
        ));
        assert!(matches!(
            Forest::new(vec![3]),
            Err(CombinatError::InvalidForest(_))
        ));
        assert!(Forest::new(vec![0, 1, 1]).is_ok());
    }

    #[test]
    fn census_matches_the_closed_counts() {
        for n in 0..=6usize {
            let mut total = BigInt::from(0);
            for k in 0..=n {
                let count = enum_forests(n, k).len();
                let expect = crate::families::forests_matrix(n + 1)
                    .get(n, k)
                    .eval_all_ones();
                assert_eq!(BigInt::from(count), expect, "|F({n},{k})|");
                total += count;
            }
            if n >= 1 {
                assert_eq!(total, BigInt::from(n + 1).pow(n as u32 - 1), "census n={n}");
            }
        }
        assert_eq!(enum_forests(3, 1).len(), 9);
        assert_eq!(enum_forests(6, 3).len(), 2160);
        assert_eq!(enum_forests(5, 5).len(), 1);
    }

    #[test]
    fn leaf_variant_census_matches_binomial_times_power() {
        for n in 1..=5usize {
            for k in 0..=n {
                let count = enum_forests(n + 1, k + 1)
                    .into_iter()
                    .filter(|f| f.is_leaf(n + 1))
                    .count();
                let expect = crate::families::trees_matrix(n + 1)
                    .get(n, k)
                    .eval_all_ones();
                assert_eq!(BigInt::from(count), expect, "|F*({},{})|", n + 1, k + 1);
            }
        }
    }

    #[test]
    fn prufer_examples_match_the_peeling_description() {
        // Roots {1,3}, forest 2→1.
        let f = forest(&[0, 1, 0]);
        let code = prufer_encode(&f);
        assert_eq!(code.root_set, vec![1, 3]);
        assert_eq!(code.seq, vec![1]);
        // Roots {1}, forest 2→1.
        let f2 = forest(&[0, 1]);
        let code2 = prufer_encode(&f2);
        assert_eq!(code2.root_set, vec![1]);
        assert_eq!(code2.seq, vec![1]);
        // A deeper peel: 2→1, 3→2, 4→2 over roots {1}: peel 4 (parent 2),
        // then 3 (parent 2), then 2 (parent 1, a root).
        let f3 = forest(&[0, 1, 2, 2]);
        assert_eq!(prufer_encode(&f3).seq, vec![2, 2, 1]);
    }

    #[test]
    fn prufer_round_trips_both_ways() {
        for n in 0..=5usize {
            for k in 0..=n {
                for f in enum_forests(n, k) {
                    let code = prufer_encode(&f);
                    assert_eq!(prufer_decode(&code).unwrap(), f, "decode∘encode n={n} k={k}");
                }
            }
        }
        // encode ∘ decode = identity over all codes for n = 5, k = 2.
        for roots in root_subsets(5, 2) {
            for_each_code(5, &roots, |seq| {
                let code = PruferCode {
                    root_set: roots.clone(),
                    seq: seq.to_vec(),
                };
                let f = prufer_decode(&code).unwrap();
                assert_eq!(prufer_encode(&f), code);
            });
        }
    }

    #[test]
    fn malformed_codes_are_rejected() {
        let bad_last = PruferCode {
            root_set: vec![1],
            seq: vec![2, 3],
        };
        assert!(matches!(
            prufer_decode(&bad_last),
            Err(CombinatError::MalformedCode(_))
        ));
        let out_of_range = PruferCode {
            root_set: vec![1],
            seq: vec![7, 1],
        };
        assert!(matches!(
            prufer_decode(&out_of_range),
            Err(CombinatError::MalformedCode(_))
        ));
        let unsorted = PruferCode {
            root_set: vec![3, 1],
            seq: vec![1],
        };
        assert!(matches!(
            prufer_decode(&unsorted),
            Err(CombinatError::MalformedCode(_))
        ));
    }

    #[test]
    fn stats_match_the_worked_examples() {
        // n=2, forest 2→1: everything zero.
        let f = forest(&[0, 1]);
        let st = forest_stats(&f);
        assert_eq!(
            st,
            ForestStats {
                niblings: 0,
                scindex: 0,
                parents: 0,
                improper: 0,
                components: 1
            }
        );
        assert_eq!(st.t_exponent(2), 0);
        // n=2, forest 1→2: one nibling, improper edge.
        let g = forest(&[2, 0]);
        let sg = forest_stats(&g);
        assert_eq!(sg.niblings, 1);
        assert_eq!(sg.improper, 1);
        // All-roots forest: all stats zero.
        let roots_only = forest(&[0, 0, 0]);
        let sr = forest_stats(&roots_only);
        assert_eq!((sr.niblings, sr.scindex, sr.parents, sr.improper), (0, 0, 0, 0));
        // 1→3, 2→3, root 3: v_min = 1, V_t = {2}, parents = 3, t-exp 2.
        let h = forest(&[3, 3, 0]);
        let sh = forest_stats(&h);
        assert_eq!(sh.niblings, 2);
        assert_eq!(sh.scindex, 0);
        assert_eq!(sh.parents, 3);
        assert_eq!(sh.t_exponent(3), 2);
        assert_eq!(sh.improper, 2);
    }

    #[test]
    fn q_statistic_oracle_matches_the_closed_form() {
        let fq = q_forests_matrix(6);
        for n in 0..=5usize {
            for k in 0..=n {
                assert_eq!(
                    forest_genpoly(n, k, Weighting::QStatistic),
                    fq.get(n, k).clone(),
                    "f_{{{n},{k}}}(q)"
                );
            }
        }
    }

    #[test]
    fn rst_statistic_oracle_matches_the_closed_form() {
        let fr = rst_forests_matrix(6);
        for n in 0..=5usize {
            for k in 0..=n {
                assert_eq!(
                    forest_genpoly(n, k, Weighting::RstStatistic),
                    fr.get(n, k).clone(),
                    "f_{{{n},{k}}}(r,s,t)"
                );
            }
        }
    }

    #[test]
    fn improper_edge_oracle_matches_the_path_matrix() {
        let fyz = improper_forests_matrix(6).unwrap();
        for n in 0..=5usize {
            for k in 0..=n {
                assert_eq!(
                    forest_genpoly(n, k, Weighting::YzImproper),
                    fyz.get(n, k).clone(),
                    "f_{{{n},{k}}}(y,z)"
                );
            }
        }
    }

    #[test]
    fn leaf_variant_oracle_matches_the_trees_closed_form() {
        let tr = rst_trees_matrix(5);
        for n in 0..=4usize {
            for k in 0..=n {
                assert_eq!(
                    forest_genpoly(n, k, Weighting::RstLeafVariant),
                    tr.get(n, k).clone(),
                    "t_{{{n},{k}}}(r,s,t)"
                );
            }
        }
    }

    #[test]
    fn permutation_oracle_matches_stirling_cycle_columns() {
        // Worked example for n = 2.
        let table = perm_genpoly(2);
        assert_eq!(table[1], Poly::one());
        assert_eq!(table[2], Poly::one());
        // n = 3, k = 3: identity permutation only.
        assert_eq!(perm_genpoly(3)[3], Poly::one());
        // Totals at q = 1 are n!.
        for n in 1..=5usize {
            let total: BigInt = perm_genpoly(n)
                .iter()
                .map(|p| p.eval_all_ones())
                .sum();
            assert_eq!(total, (1..=n).product::<usize>().into());
        }
        // Columns match the (p,q)-Stirling matrix at p = 1.
        for n in 0..=5usize {
            let table = perm_genpoly(n);
            let g = pq_stirling_matrix(n + 1);
            for k in 0..=n {
                let expect = g.get(n, k).subst_many(&[(Var::P, Poly::one())]);
                assert_eq!(table[k], expect, "g_{{{n},{k}}}(1,q)");
            }
        }
    }

    #[test]
    fn matching_oracle_counts_and_small_values() {
        assert_eq!(matching_genpoly(0), Poly::one());
        assert_eq!(matching_genpoly(1), Poly::one());
        assert_eq!(
            matching_genpoly(2),
            Poly::var(Var::R) + Poly::var(Var::S) + Poly::one()
        );
        for n in 1..=5usize {
            let total = matching_genpoly(n).eval_all_ones();
            let double_fact: BigInt = (1..=n).map(|i| BigInt::from(2 * i - 1)).product();
            assert_eq!(total, double_fact, "|M_{}|", 2 * n);
        }
    }

    #[test]
    fn all_one_sfraction_gives_catalan_numbers() {
        let ones = Sequence::new(|_| Poly::one());
        let coeffs = sfraction_expand(&ones, 5);
        let catalan = [1i64, 1, 2, 5, 14, 42];
        for (j, c) in catalan.iter().enumerate() {
            assert_eq!(coeffs[j], Poly::int(*c), "Catalan {j}");
        }
    }

    #[test]
    fn matching_series_is_the_pq_integer_sfraction() {
        // λ_n = [n]_{r,s} generates the crossing/nesting polynomials.
        let lam = Sequence::new(|i| crate::polyring::qcalc::pq_int_in(Var::R, Var::S, i));
        let coeffs = sfraction_expand(&lam, 5);
        for j in 0..=5usize {
            assert_eq!(coeffs[j], matching_genpoly(j), "coefficient of t^{j}");
        }
    }

    #[test]
    fn sfraction_round_trip_recovers_lambdas() {
        let lam = Sequence::new(|i| {
            Poly::var(Var::X) + Poly::monomial(Var::Q, i as u16, i as i64)
        });
        let coeffs = sfraction_expand(&lam, 7);
        let back = series_to_sfraction(&coeffs, 7).unwrap();
        for i in 1..=7usize {
            assert_eq!(back[i - 1], lam.at(i), "λ_{i}");
        }
        // A series that is not an S-fraction of polynomials fails loudly.
        let bad = vec![Poly::one(), Poly::int(2), Poly::one()];
        assert!(matches!(
            series_to_sfraction(&bad, 2),
            Err(CombinatError::NonInvertibleCoefficient(2))
        ));
    }

    fn zeng_lambda(i: usize) -> Poly {
        let m = i.div_ceil(2);
        let scale = Poly::monomial(Var::Q, (m - 1) as u16, 1);
        if i % 2 == 1 {
            scale * (Poly::var(Var::X) + q_int(m - 1))
        } else {
            scale * q_int(m)
        }
    }

    #[test]
    fn stirling_like_series_has_the_two_track_sfraction() {
        // Moments: 1, x, x(x+1), x(x+1)(x+1+q), … — the Stirling cycle
        // polynomials at p = 1.
        let c = stirling_cycle_seq();
        let series: Vec<Poly> = (0..=12)
            .map(|j| c.at(j).subst_many(&[(Var::P, Poly::one())]))
            .collect();
        let lambdas = series_to_sfraction(&series, 12).unwrap();
        for (i, lam) in lambdas.iter().enumerate() {
            assert_eq!(lam, &zeng_lambda(i + 1), "λ_{}", i + 1);
        }
        // The first few in display form.
        assert_eq!(lambdas[0].to_string(), "x");
        assert_eq!(lambdas[1].to_string(), "1");
        assert_eq!(lambdas[2].to_string(), "qx+q");
        assert_eq!(lambdas[3].to_string(), "q^2+q");
        assert_eq!(lambdas[4].to_string(), "q^3+q^2x+q^2");
    }

    #[test]
    fn touchard_riordan_matches_matchings_with_crossings_only() {
        assert_eq!(touchard_riordan(1).unwrap(), Poly::one());
        assert_eq!(
            touchard_riordan(3).unwrap(),
            Poly::var(Var::R) + Poly::int(2)
        );
        for n in 2..=6usize {
            let t = touchard_riordan(n).unwrap();
            // Value at r = 1 is (2n-3)!!.
            let at_one = t.eval_all_ones();
            let double_fact: BigInt = (1..n - 1).map(|i| BigInt::from(2 * i + 1)).product();
            assert_eq!(at_one, double_fact, "count at n={n}");
            // Agreement with the matching oracle at s = 1.
            let oracle = matching_genpoly(n - 1).subst_many(&[(Var::S, Poly::one())]);
            assert_eq!(t, oracle, "crossings at n={n}");
        }
    }

    #[test]
    fn yz_oracle_respects_the_displayed_decomposition() {
        // f_{3,2}(y,z) = 3y + 3z: three proper-edge and three improper-edge
        // forests.
        let p = forest_genpoly(3, 2, Weighting::YzImproper);
        assert_eq!(
            p,
            Poly::int(3) * Poly::var(Var::Y) + Poly::int(3) * Poly::var(Var::Z)
        );
        // q-statistic worked example.
        assert_eq!(
            forest_genpoly(3, 1, Weighting::QStatistic).to_string(),
            "q^4+2q^3+3q^2+2q+1"
        );
        assert_eq!(
            forest_genpoly(3, 1, Weighting::RstStatistic),
            q_int_in(Var::R, 3) * q_int_in(Var::G, 3)
        );
        assert_eq!(forest_genpoly(4, 4, Weighting::QStatistic), Poly::one());
    }
}
