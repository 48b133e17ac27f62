//! Exact integer coefficients: a machine-word fast path with automatic
//! spillover into arbitrary precision.
//!
//! The canonical-form invariant is that `Big` is only used for values outside
//! the `i128` range, so structural equality coincides with numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// An exact integer, stored inline while it fits a machine word pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coef {
    Small(i128),
    Big(Box<BigInt>),
}

impl Coef {
    pub const ZERO: Coef = Coef::Small(0);
    pub const ONE: Coef = Coef::Small(1);

    pub fn from_bigint(v: BigInt) -> Coef {
        match v.to_i128() {
            Some(s) => Coef::Small(s),
            None => Coef::Big(Box::new(v)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coef::Small(v) => BigInt::from(*v),
            Coef::Big(v) => (**v).clone(),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.to_bigint())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coef::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coef::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coef::Small(v) => *v < 0,
            Coef::Big(v) => v.is_negative(),
        }
    }

    pub fn abs(&self) -> Coef {
        match self {
            Coef::Small(v) => match v.checked_abs() {
                Some(a) => Coef::Small(a),
                None => Coef::from_bigint(BigInt::from(*v).abs()),
            },
            Coef::Big(v) => Coef::from_bigint(v.abs()),
        }
    }

    pub fn neg(&self) -> Coef {
        match self {
            Coef::Small(v) => match v.checked_neg() {
                Some(n) => Coef::Small(n),
                None => Coef::from_bigint(-BigInt::from(*v)),
            },
            Coef::Big(v) => Coef::from_bigint(-(**v).clone()),
        }
    }

    pub fn add(&self, other: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, other) {
            if let Some(v) = a.checked_add(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_bigint(self.to_bigint() + other.to_bigint())
    }

    pub fn sub(&self, other: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, other) {
            if let Some(v) = a.checked_sub(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_bigint(self.to_bigint() - other.to_bigint())
    }

    pub fn mul(&self, other: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, other) {
            if let Some(v) = a.checked_mul(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_bigint(self.to_bigint() * other.to_bigint())
    }

    /// `self / other` when the division is exact, `None` otherwise or on
    /// division by zero.
    pub fn exact_div(&self, other: &Coef) -> Option<Coef> {
        if other.is_zero() {
            return None;
        }
        if let (Coef::Small(a), Coef::Small(b)) = (self, other) {
            // i128::MIN / -1 is the single overflowing case.
            if !(*a == i128::MIN && *b == -1) {
                return (a % b == 0).then(|| Coef::Small(a / b));
            }
        }
        let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
        r.is_zero().then(|| Coef::from_bigint(q))
    }

    /// Nonnegative greatest common divisor.
    pub fn gcd(&self, other: &Coef) -> Coef {
        match (self, other) {
            (Coef::Small(a), Coef::Small(b)) if *a != i128::MIN && *b != i128::MIN => {
                Coef::Small(a.gcd(b))
            }
            _ => Coef::from_bigint(self.to_bigint().gcd(&other.to_bigint())),
        }
    }
}

impl From<i64> for Coef {
    fn from(v: i64) -> Coef {
        Coef::Small(v as i128)
    }
}

impl From<BigInt> for Coef {
    fn from(v: BigInt) -> Coef {
        Coef::from_bigint(v)
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Small(v) => write!(f, "{v}"),
            Coef::Big(v) => write!(f, "{v}"),
        }
    }
}
