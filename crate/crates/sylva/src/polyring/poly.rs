//! Sparse exact multivariate polynomials over ℤ in the fixed variable
//! alphabet `p, q, r, s, g, m, y, z, x`.
//!
//! Terms are kept in canonical order — descending graded-lexicographic on the
//! exponent vector (higher total degree first, ties broken lexicographically
//! with `p` most significant). Rendering walks the same order, so equal
//! polynomials always print identically and golden-string comparisons are
//! meaningful. Typical rendered forms: `q^4+2q^3+3q^2+2q+1`, `gz+y`, `0`.

use super::coef::Coef;
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Number of variable slots.
pub const NVARS: usize = 9;

/// Hash state for exponent-keyed term maps: a multiply-rotate mix that is far
/// cheaper than the default hasher on these short fixed-size keys. Term maps
/// are always drained through a sort, so hash order never reaches the output.
#[derive(Clone, Copy, Default)]
pub(crate) struct TermHashBuilder;

pub(crate) struct TermHasher(u64);

pub(crate) type TermMap = HashMap<Expo, Coef, TermHashBuilder>;

impl std::hash::BuildHasher for TermHashBuilder {
    type Hasher = TermHasher;
    fn build_hasher(&self) -> TermHasher {
        TermHasher(0x243F_6A88_85A3_08D3)
    }
}

impl TermHasher {
    #[inline]
    fn mix(&mut self, v: u64) {
        self.0 = (self.0 ^ v).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(23);
    }
}

impl std::hash::Hasher for TermHasher {
    #[inline]
    fn finish(&self) -> u64 {
        let mut h = self.0;
        h ^= h >> 33;
        h = h.wrapping_mul(0xFF51_AFD7_ED55_8CCD);
        h ^ (h >> 29)
    }

    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        let mut chunks = bytes.chunks_exact(8);
        for ch in &mut chunks {
            self.mix(u64::from_le_bytes(ch.try_into().unwrap()));
        }
        let rem = chunks.remainder();
        if !rem.is_empty() {
            let mut v = 0u64;
            for (i, &b) in rem.iter().enumerate() {
                v |= u64::from(b) << (8 * i);
            }
            self.mix(v);
        }
    }

    #[inline]
    fn write_u16(&mut self, v: u16) {
        self.mix(u64::from(v));
    }

    #[inline]
    fn write_usize(&mut self, v: usize) {
        self.mix(v as u64);
    }
}

/// The fixed variable alphabet, in significance order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Var {
    P,
    Q,
    R,
    S,
    G,
    M,
    Y,
    Z,
    X,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::P,
        Var::Q,
        Var::R,
        Var::S,
        Var::G,
        Var::M,
        Var::Y,
        Var::Z,
        Var::X,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        b"pqrsgmyzx"[self.index()] as char
    }

    pub fn from_letter(c: char) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.letter() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Exponent vector for one monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Expo(pub [u16; NVARS]);

impl Expo {
    pub const UNIT: Expo = Expo([0; NVARS]);

    pub fn of_var(v: Var, e: u16) -> Expo {
        let mut a = [0u16; NVARS];
        a[v.index()] = e;
        Expo(a)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Expo) -> Expo {
        let mut a = [0u16; NVARS];
        for i in 0..NVARS {
            a[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent exceeded u16 range");
        }
        Expo(a)
    }

    /// Componentwise division; `None` if any exponent would go negative.
    pub fn checked_div(&self, other: &Expo) -> Option<Expo> {
        let mut a = [0u16; NVARS];
        for i in 0..NVARS {
            a[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Expo(a))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Expo) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expo {
    /// Graded lexicographic: total degree first, then lexicographic on the
    /// slot array with the earlier variable more significant.
    fn cmp(&self, other: &Expo) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A polynomial: nonzero terms in descending canonical monomial order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<(Expo, Coef)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::int(1)
    }

    pub fn int(v: i64) -> Poly {
        if v == 0 {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Expo::UNIT, Coef::from(v))],
            }
        }
    }

    pub fn from_bigint(v: BigInt) -> Poly {
        let c = Coef::from(v);
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Expo::UNIT, c)],
            }
        }
    }

    pub fn var(v: Var) -> Poly {
        Poly {
            terms: vec![(Expo::of_var(v, 1), Coef::ONE)],
        }
    }

    /// `c · v^e`.
    pub fn monomial(v: Var, e: u16, c: i64) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Expo::of_var(v, e), Coef::from(c))],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly duplicated) terms.
    pub fn from_terms(raw: impl IntoIterator<Item = (Expo, Coef)>) -> Poly {
        let mut acc = TermMap::default();
        for (e, c) in raw {
            if c.is_zero() {
                continue;
            }
            acc.entry(e)
                .and_modify(|t| *t = t.add(&c))
                .or_insert(c);
        }
        Poly::from_map(acc)
    }

    pub(crate) fn from_map<S: std::hash::BuildHasher>(acc: HashMap<Expo, Coef, S>) -> Poly {
        let mut terms: Vec<(Expo, Coef)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Expo, Coef)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Expo::UNIT && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == Expo::UNIT)
    }

    /// The constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Coef> {
        if self.is_zero() {
            Some(Coef::ZERO)
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient of the monomial with exponent vector `e` (zero if absent).
    pub fn coef_at(&self, e: &Expo) -> Coef {
        match self.terms.binary_search_by(|(t, _)| e.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coef::ZERO,
        }
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .iter()
            .map(|(e, _)| e.0[v.index()])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.total_degree()).max().unwrap_or(0)
    }

    /// Variables that occur with a positive exponent.
    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.iter().any(|(e, _)| e.0[v.index()] > 0))
            .collect()
    }

    pub fn is_univariate_in(&self, v: Var) -> bool {
        self.vars_used().iter().all(|u| *u == v)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_coeff_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// The terms carrying a negative coefficient, as a polynomial.
    pub fn negative_part(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.is_negative())
                .cloned()
                .collect(),
        }
    }

    /// Common total degree in the `vars` slots, if the polynomial is
    /// homogeneous when restricted to them.
    pub fn homogeneous_degree_in(&self, vars: &[Var]) -> Option<u32> {
        let mut deg = None;
        for (e, _) in &self.terms {
            let d: u32 = vars.iter().map(|v| e.0[v.index()] as u32).sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg.or(Some(0))
    }

    /// True when, regarded as a polynomial in `v`, the coefficient sequence
    /// reads the same in both directions (a_k = a_{d-k} with d = degree).
    pub fn is_self_reciprocal_in(&self, v: Var) -> bool {
        let d = self.degree_in(v);
        let mirrored = Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut a = e.0;
            a[v.index()] = d - a[v.index()];
            (Expo(a), c.clone())
        }));
        mirrored == *self
    }

    /// Greatest common divisor of all coefficients (nonnegative; 0 for the
    /// zero polynomial).
    pub fn content(&self) -> Coef {
        let mut g = Coef::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`; `None` if any division is inexact.
    pub fn div_scalar_exact(&self, d: &Coef) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            terms.push((*e, c.exact_div(d)?));
        }
        Some(Poly { terms })
    }

    pub fn mul_scalar(&self, d: &Coef) -> Poly {
        if d.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul(d))).collect(),
        }
    }

    /// Multiplies by a single monomial `c · x^e` (term order is preserved).
    pub fn mul_term(&self, e: &Expo, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(te, tc)| (te.checked_mul(e), tc.mul(c)))
                .collect(),
        }
    }

    /// Accumulates `a · b` into a hash-map accumulator; used by dot products
    /// to avoid materializing intermediate sums.
    pub(crate) fn mul_into(acc: &mut TermMap, a: &Poly, b: &Poly) {
        // Keep the shorter polynomial in the outer loop.
        let (outer, inner) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        Poly::mul_terms_into(acc, &outer.terms, inner);
    }

    fn mul_terms_into(acc: &mut TermMap, outer: &[(Expo, Coef)], inner: &Poly) {
        for (ea, ca) in outer {
            for (eb, cb) in &inner.terms {
                let e = ea.checked_mul(eb);
                let c = ca.mul(cb);
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let v = o.get().add(&c);
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(c);
                    }
                }
            }
        }
    }

    /// Product of two large polynomials, partitioned by the total degree
    /// of the result terms. Distinct degrees never collide, so the
    /// partitions need no shared state, peak memory stays close to the
    /// result size, and — because the term order is graded — sorting each
    /// partition and concatenating them in descending degree order yields
    /// the canonical order directly. The partition boundaries are chosen
    /// from the degree histograms so every thread gets a similar number of
    /// term pairs.
    fn giant_mul(outer: &Poly, inner: &Poly) -> Poly {
        use rayon::prelude::*;
        let outer_degs: Vec<u32> = outer.terms.iter().map(|(e, _)| e.total_degree()).collect();
        let inner_degs: Vec<u32> = inner.terms.iter().map(|(e, _)| e.total_degree()).collect();
        let omax = outer_degs[0] as usize;
        let imax = inner_degs[0] as usize;
        let mut oh = vec![0u64; omax + 1];
        for &d in &outer_degs {
            oh[d as usize] += 1;
        }
        let mut ih = vec![0u64; imax + 1];
        for &d in &inner_degs {
            ih[d as usize] += 1;
        }
        let dmax = omax + imax;
        let mut pairs_by_degree = vec![0u64; dmax + 1];
        for (i, &a) in oh.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in ih.iter().enumerate() {
                if b != 0 {
                    pairs_by_degree[i + j] += a * b;
                }
            }
        }
        let total: u64 = pairs_by_degree.iter().sum();
        // Partitions are sized for cache residency first and thread balance
        // second: many small accumulator maps beat a few huge ones even on a
        // single core.
        let buckets = (rayon::current_num_threads() as u64 * 4).max(128);
        let per_bucket = (total / buckets).max(1);
        let mut bounds: Vec<(u32, u32)> = Vec::new();
        let mut hi = dmax as u32;
        let mut acc = 0u64;
        for d in (0..=dmax).rev() {
            acc += pairs_by_degree[d];
            if acc >= per_bucket || d == 0 {
                bounds.push((hi, d as u32));
                acc = 0;
                if d == 0 {
                    break;
                }
                hi = d as u32 - 1;
            }
        }
        let pieces: Vec<Vec<(Expo, Coef)>> = bounds
            .par_iter()
            .map(|&(bucket_hi, bucket_lo)| {
                let mut map = TermMap::default();
                for (idx, (ea, ca)) in outer.terms.iter().enumerate() {
                    let da = outer_degs[idx];
                    if da > bucket_hi {
                        continue;
                    }
                    let need_lo = bucket_lo.saturating_sub(da);
                    let need_hi = bucket_hi - da;
                    if need_lo > imax as u32 {
                        continue;
                    }
                    // Inner degrees are nonincreasing, so the admissible
                    // degree window is a contiguous index range.
                    let start = inner_degs.partition_point(|&d| d > need_hi);
                    let end = inner_degs.partition_point(|&d| d >= need_lo);
                    for (eb, cb) in &inner.terms[start..end] {
                        let e = ea.checked_mul(eb);
                        let c = ca.mul(cb);
                        match map.entry(e) {
                            std::collections::hash_map::Entry::Occupied(mut o) => {
                                let v = o.get().add(&c);
                                if v.is_zero() {
                                    o.remove();
                                } else {
                                    *o.get_mut() = v;
                                }
                            }
                            std::collections::hash_map::Entry::Vacant(slot) => {
                                slot.insert(c);
                            }
                        }
                    }
                }
                let mut part: Vec<(Expo, Coef)> =
                    map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                part.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
                part
            })
            .collect();
        let mut terms = Vec::with_capacity(pieces.iter().map(Vec::len).sum());
        for p in pieces {
            terms.extend(p);
        }
        Poly { terms }
    }

    /// Σ aᵢ·bᵢ in one accumulation pass.
    pub fn dot<'a>(pairs: impl IntoIterator<Item = (&'a Poly, &'a Poly)>) -> Poly {
        let mut acc = TermMap::default();
        for (a, b) in pairs {
            Poly::mul_into(&mut acc, a, b);
        }
        Poly::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division; fails with `NotDivisible` when `self` is not a
    /// polynomial multiple of `d`.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (de, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot: Vec<(Expo, Coef)> = Vec::new();
        while !rem.is_zero() {
            let (re, rc) = &rem.terms[0];
            let qe = re.checked_div(de).ok_or(PolyError::NotDivisible)?;
            let qc = rc.exact_div(dc).ok_or(PolyError::NotDivisible)?;
            rem -= d.mul_term(&qe, &qc);
            quot.push((qe, qc));
        }
        // Quotient terms are produced in strictly descending order already.
        Ok(Poly { terms: quot })
    }

    /// Substitutes `repl` for the variable `v` (Horner in `v`).
    pub fn subst(&self, v: Var, repl: &Poly) -> Poly {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        // Strata: exponent of v -> polynomial in the remaining variables.
        let mut strata: HashMap<u16, Vec<(Expo, Coef)>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut a = e.0;
            let ev = a[v.index()];
            a[v.index()] = 0;
            strata.entry(ev).or_default().push((Expo(a), c.clone()));
        }
        let mut exps: Vec<u16> = strata.keys().copied().collect();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        let mut result = Poly::from_terms(strata.remove(&exps[0]).unwrap());
        let mut prev = exps[0];
        for &e in &exps[1..] {
            result = &result * &repl.pow((prev - e) as u32);
            result += Poly::from_terms(strata.remove(&e).unwrap());
            prev = e;
        }
        if prev > 0 {
            result = &result * &repl.pow(prev as u32);
        }
        result
    }

    /// Substitutes all listed variables simultaneously (so replacement
    /// polynomials may mention the substituted variables without being
    /// re-substituted).
    pub fn subst_many(&self, subs: &[(Var, Poly)]) -> Poly {
        let mut repl: [Option<&Poly>; NVARS] = [None; NVARS];
        for (v, p) in subs {
            repl[v.index()] = Some(p);
        }
        let mut total = Poly::zero();
        for (e, c) in &self.terms {
            let mut kept = e.0;
            let mut term: Option<Poly> = None;
            for i in 0..NVARS {
                if let (Some(p), ev @ 1..) = (repl[i], e.0[i]) {
                    kept[i] = 0;
                    let factor = p.pow(ev as u32);
                    term = Some(match term {
                        None => factor,
                        Some(t) => t * factor,
                    });
                }
            }
            let base = Poly::from_terms(vec![(Expo(kept), c.clone())]);
            total += match term {
                    None => base,
                    Some(t) => t * base,
                };
        }
        total
    }

    /// Substitutes `v ↦ 1 + v` for each listed variable. Each pass expands
    /// every term along one variable by the binomial theorem and merges
    /// once, so intermediates stay collapsed — much faster on large inputs
    /// than a general substitution.
    pub fn shift_vars(&self, vars: &[Var]) -> Poly {
        let mut out = self.clone();
        for &v in vars {
            out = out.shift_one(v);
        }
        out
    }

    fn shift_one(&self, v: Var) -> Poly {
        let vi = v.index();
        let dmax = self.terms.iter().map(|(e, _)| e.0[vi]).max().unwrap_or(0) as usize;
        if dmax == 0 {
            return self.clone();
        }
        let mut pascal: Vec<Vec<Coef>> = Vec::with_capacity(dmax + 1);
        pascal.push(vec![Coef::ONE]);
        for n in 1..=dmax {
            let prev = &pascal[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Coef::ONE);
            for k in 1..n {
                row.push(prev[k - 1].add(&prev[k]));
            }
            row.push(Coef::ONE);
            pascal.push(row);
        }
        let expand = |acc: &mut TermMap, terms: &[(Expo, Coef)]| {
            for (e, c) in terms {
                let d = e.0[vi] as usize;
                for (j, b) in pascal[d].iter().enumerate() {
                    let mut ne = *e;
                    ne.0[vi] = j as u16;
                    let contrib = c.mul(b);
                    let slot = acc.entry(ne).or_insert(Coef::ZERO);
                    *slot = slot.add(&contrib);
                }
            }
        };
        // Large inputs are worth splitting across threads; the final sort
        // makes the result independent of scheduling.
        const PAR_TERMS: usize = 1 << 16;
        if self.terms.len() >= PAR_TERMS {
            use rayon::prelude::*;
            let chunks = rayon::current_num_threads().max(1);
            let chunk_size = self.terms.len().div_ceil(chunks);
            let maps: Vec<TermMap> = self
                .terms
                .par_chunks(chunk_size)
                .map(|chunk| {
                    let mut acc =
                        TermMap::with_capacity_and_hasher(chunk.len() * 2, TermHashBuilder);
                    expand(&mut acc, chunk);
                    acc
                })
                .collect();
            let mut iter = maps.into_iter();
            let mut acc = iter.next().unwrap_or_default();
            for m in iter {
                for (ne, contrib) in m {
                    let slot = acc.entry(ne).or_insert(Coef::ZERO);
                    *slot = slot.add(&contrib);
                }
            }
            return Poly::from_map(acc);
        }
        let mut acc = TermMap::with_capacity_and_hasher(self.terms.len() * 2, TermHashBuilder);
        expand(&mut acc, &self.terms);
        Poly::from_map(acc)
    }

    /// Evaluates at an exact rational point. Every variable that actually
    /// occurs must be assigned.
    pub fn eval(&self, assign: &[(Var, BigRational)]) -> Result<BigRational, PolyError> {
        let mut vals: [Option<&BigRational>; NVARS] = [None; NVARS];
        for (v, r) in assign {
            vals[v.index()] = Some(r);
        }
        let mut total = BigRational::from_integer(BigInt::from(0));
        for (e, c) in &self.terms {
            let mut term = c.to_rational();
            for i in 0..NVARS {
                let ev = e.0[i];
                if ev > 0 {
                    let val = vals[i].ok_or(PolyError::MissingVariable(
                        Var::ALL[i].letter(),
                    ))?;
                    term *= pow_rational(val, ev as u32);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates with every variable set to 1 (the coefficient sum).
    pub fn eval_all_ones(&self) -> BigInt {
        let mut total = BigInt::from(0);
        for (_, c) in &self.terms {
            total += c.to_bigint();
        }
        total
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, e: u16) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.0[v.index()] == e)
                .map(|(t, c)| {
                    let mut a = t.0;
                    a[v.index()] = 0;
                    (Expo(a), c.clone())
                })
                .collect::<Vec<_>>(),
        }
        .renormalized()
    }

    fn renormalized(self) -> Poly {
        let mut terms = self.terms;
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }
}

fn pow_rational(v: &BigRational, e: u32) -> BigRational {
    BigRational::new_raw(v.numer().pow(e), v.denom().pow(e))
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        // Merge two descending term lists.
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match eb.cmp(ea) {
                std::cmp::Ordering::Less => {
                    terms.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((*eb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        terms.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(rhs.terms[j..].iter().cloned());
        Poly { terms }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self = &*self + &rhs;
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs.clone())
    }
}

impl SubAssign for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self = &*self - &rhs;
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(e, c)| (e, c.neg())).collect(),
        }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        // Large products are worth partitioning by degree.
        const PAR_PAIRS: usize = 1 << 22;
        if self.terms.len().saturating_mul(rhs.terms.len()) >= PAR_PAIRS {
            let (outer, inner) = if self.terms.len() <= rhs.terms.len() {
                (self, rhs)
            } else {
                (rhs, self)
            };
            return Poly::giant_mul(outer, inner);
        }
        let mut acc = TermMap::with_capacity_and_hasher(
            self.terms.len() + rhs.terms.len(),
            TermHashBuilder,
        );
        Poly::mul_into(&mut acc, self, rhs);
        Poly::from_map(acc)
    }
}

impl MulAssign for Poly {
    fn mul_assign(&mut self, rhs: Poly) {
        *self = &*self * &rhs;
    }
}

macro_rules! mixed_ref_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

mixed_ref_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let is_const_monomial = *e == Expo::UNIT;
            if !mag.is_one() || is_const_monomial {
                write!(f, "{mag}")?;
            }
            for v in Var::ALL {
                let ev = e.0[v.index()];
                if ev == 1 {
                    write!(f, "{}", v.letter())?;
                } else if ev > 1 {
                    write!(f, "{}^{}", v.letter(), ev)?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }

    #[test]
    fn canonical_rendering_matches_expected_forms() {
        let p = q().pow(4) + Poly::int(2) * q().pow(3) + Poly::int(3) * q().pow(2)
            + Poly::int(2) * q()
            + Poly::one();
        assert_eq!(p.to_string(), "q^4+2q^3+3q^2+2q+1");
        let gz_plus_y = Poly::var(Var::G) * Poly::var(Var::Z) + Poly::var(Var::Y);
        assert_eq!(gz_plus_y.to_string(), "gz+y");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::int(-7).to_string(), "-7");
        assert_eq!((-(q().pow(2)) + Poly::one()).to_string(), "-q^2+1");
    }

    #[test]
    fn graded_lex_orders_by_total_degree_then_slots() {
        // r·y > s·y > m·y in the canonical order (same degree, r slot earlier).
        let p = Poly::var(Var::M) * Poly::var(Var::Y)
            + Poly::var(Var::R) * Poly::var(Var::Y)
            + Poly::var(Var::S) * Poly::var(Var::Y);
        assert_eq!(p.to_string(), "ry+sy+my");
        // Total degree dominates: z^3 before y·x (and inside a monomial the
        // slots print in alphabet order, y before x).
        let p2 = Poly::var(Var::X) * Poly::var(Var::Y) + Poly::var(Var::Z).pow(3);
        assert_eq!(p2.to_string(), "z^3+yx");
    }

    #[test]
    fn exact_division_round_trips_and_rejects_non_multiples() {
        let a = q().pow(2) + Poly::int(2) * q() + Poly::one();
        let b = q() + Poly::one();
        assert_eq!(a.exact_div(&b).unwrap(), b);
        let c = q().pow(2) + Poly::one();
        assert_eq!(c.exact_div(&b), Err(PolyError::NotDivisible));
    }

    #[test]
    fn substitution_is_horner_correct() {
        // (q+1)^2 via subst q -> q+1 into q^2.
        let sq = q().pow(2);
        let shifted = sq.subst(Var::Q, &(q() + Poly::one()));
        assert_eq!(shifted.to_string(), "q^2+2q+1");
        // Substituting an unused variable is a no-op.
        assert_eq!(sq.subst(Var::Y, &Poly::int(5)), sq);
    }

    #[test]
    fn shift_vars_shifts_each_listed_variable() {
        let p = Poly::var(Var::Y) * q();
        let shifted = p.shift_vars(&[Var::Q, Var::Y]);
        assert_eq!(shifted.to_string(), "qy+q+y+1");
    }

    #[test]
    fn shift_vars_agrees_with_general_substitution() {
        // A polynomial with mixed exponents, including ones large enough to
        // exercise the Pascal-row fast path against the generic route.
        let mut p = Poly::zero();
        for a in 0..6u16 {
            for b in 0..4u16 {
                p += Poly::monomial(Var::Q, 2 * a, (a + b + 1) as i64)
                    * Poly::monomial(Var::Y, 3 * b, 1)
                    * Poly::monomial(Var::X, a + b, 1)
                    * Poly::int(if (a + b) % 2 == 0 { 1 } else { -1 });
            }
        }
        let fast = p.shift_vars(&[Var::Q, Var::Y]);
        let slow = p
            .subst(Var::Q, &(q() + Poly::one()))
            .subst(Var::Y, &(Poly::var(Var::Y) + Poly::one()));
        assert_eq!(fast, slow);
    }

    #[test]
    fn eval_requires_all_used_variables() {
        let p = q() + Poly::var(Var::Y);
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            p.eval(&[(Var::Q, one.clone())]),
            Err(PolyError::MissingVariable('y'))
        );
        let v = p
            .eval(&[(Var::Q, one.clone()), (Var::Y, one)])
            .unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn self_reciprocal_detection() {
        let pal = q().pow(2) + Poly::int(3) * q() + Poly::one();
        assert!(pal.is_self_reciprocal_in(Var::Q));
        let not = q().pow(2) + Poly::int(3) * q() + Poly::int(2);
        assert!(!not.is_self_reciprocal_in(Var::Q));
    }

    #[test]
    fn homogeneity_in_variable_subset() {
        let p = Poly::var(Var::Y).pow(2) + Poly::var(Var::Y) * Poly::var(Var::Z);
        assert_eq!(p.homogeneous_degree_in(&[Var::Y, Var::Z]), Some(2));
        let q_ = p + Poly::var(Var::Z);
        assert_eq!(q_.homogeneous_degree_in(&[Var::Y, Var::Z]), None);
    }
}
