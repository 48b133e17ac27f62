//! Rational functions `num/den` over the polynomial ring.
//!
//! Reduction policy: the integer content is always cancelled and the
//! denominator's leading coefficient normalized positive; a polynomial gcd is
//! additionally cancelled when both parts are univariate in `q` — the only
//! variable that appears in denominators throughout this domain (they are
//! products of q-integers). Equality is decided by cross-multiplication, so
//! it never depends on how far a value happened to reduce.

use super::coef::Coef;
use super::poly::{Poly, Var};
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A quotient of two polynomials with nonzero denominator.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<RatFn, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let mut r = RatFn { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> RatFn {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn int(v: i64) -> RatFn {
        RatFn::from_poly(Poly::int(v))
    }

    pub fn var(v: Var) -> RatFn {
        RatFn::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the reduced denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFn, PolyError> {
        if self.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, assign: &[(Var, BigRational)]) -> Result<BigRational, PolyError> {
        let d = self.den.eval(assign)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.num.eval(assign)? / d)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if self.num.is_univariate_in(Var::Q) && self.den.is_univariate_in(Var::Q) {
            let g = gcd_univariate_q(&self.num, &self.den);
            if g.degree_in(Var::Q) > 0 {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_scalar_exact(&g).expect("content divides");
            self.den = self.den.div_scalar_exact(&g).expect("content divides");
        }
        // Normalize the sign so the denominator's leading coefficient is positive.
        if self.den.terms()[0].1.is_negative() {
            self.num = -self.num.clone();
            self.den = -self.den.clone();
        }
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &RatFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs.clone())
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    // Division in the fraction field is multiplication by the reciprocal.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFn) -> RatFn {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl Div for RatFn {
    type Output = RatFn;
    fn div(self, rhs: RatFn) -> RatFn {
        &self / &rhs
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl serde::Serialize for RatFn {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Dense coefficient vector of a polynomial that is univariate in `q`
/// (constants included); index = q-exponent.
fn dense_q(p: &Poly) -> Vec<BigInt> {
    let d = p.degree_in(Var::Q) as usize;
    let mut out = vec![BigInt::from(0); d + 1];
    for (e, c) in p.terms() {
        out[e.0[Var::Q.index()] as usize] = c.to_bigint();
    }
    out
}

fn from_dense_q(v: &[BigInt]) -> Poly {
    Poly::from_terms(v.iter().enumerate().map(|(i, c)| {
        (
            super::poly::Expo::of_var(Var::Q, i as u16),
            Coef::from_bigint(c.clone()),
        )
    }))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn vec_content(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    let mut g = BigInt::from(0);
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn make_primitive(v: &mut [BigInt]) {
    let g = vec_content(v);
    if !g.is_zero() && g != BigInt::from(1) {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Primitive gcd of two polynomials univariate in `q`, with positive leading
/// coefficient (primitive pseudo-remainder sequence over the integers).
fn gcd_univariate_q(a: &Poly, b: &Poly) -> Poly {
    let mut fa = dense_q(a);
    let mut fb = dense_q(b);
    trim(&mut fa);
    trim(&mut fb);
    if fa.is_empty() {
        return from_dense_q(&fb);
    }
    if fb.is_empty() {
        return from_dense_q(&fa);
    }
    make_primitive(&mut fa);
    make_primitive(&mut fb);
    if fa.len() < fb.len() {
        std::mem::swap(&mut fa, &mut fb);
    }
    while !fb.is_empty() {
        // Pseudo-remainder of fa by fb.
        let mut r = fa.clone();
        let lb = fb.last().unwrap().clone();
        while r.len() >= fb.len() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - fb.len();
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            for (i, c) in fb.iter().enumerate() {
                r[shift + i] -= &lr * c;
            }
            trim(&mut r);
            make_primitive(&mut r);
        }
        fa = fb;
        fb = r;
    }
    if fa.last().is_some_and(|c| c.is_negative()) {
        for c in fa.iter_mut() {
            *c = -&*c;
        }
    }
    from_dense_q(&fa)
}
