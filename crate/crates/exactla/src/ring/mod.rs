//! Commutative rings with capability flags.
//!
//! A ring is a runtime context value (it may carry a modulus, an ideal, a
//! truncation order) and elements are plain data manipulated through it.
//! Algorithms are generic over [`Ring`]; wrapping a ring in [`Counted`] makes
//! every add/sub/mul/div visible to [`with_counting`].

mod counting;
mod fraction;
mod integers;
mod literal;
mod polyring;
mod quotient;
mod series;
mod zmod;

pub use counting::{with_counting, with_counting_bits, Counted, OpStats};
pub use fraction::{Frac, FracElem};
pub use integers::Integers;
pub use literal::{canonical_terms, format_terms, parse_terms, Term};
pub use polyring::PolyRing;
pub use quotient::{MPoly, QuotientRing};
pub use series::SeriesRing;
pub use zmod::{is_prime_u64, Zmod};

use crate::error::Result;
use num_bigint::BigInt;
use std::fmt::Debug;

/// Principal roots of unity a ring can provide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootOrders {
    None,
    /// Every order dividing the given integer (Z/pZ with p prime: p - 1).
    DivisorsOf(u64),
}

impl RootOrders {
    pub fn contains(&self, order: u64) -> bool {
        match self {
            RootOrders::None => order == 1,
            RootOrders::DivisorsOf(m) => order != 0 && m % order == 0,
        }
    }
}

/// Declared capabilities of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub characteristic: u64,
    pub is_integral_domain: bool,
    pub is_field: bool,
    pub has_exact_division: bool,
    /// Division by every k up to this bound is exact and unique; `None` is unbounded.
    pub max_invertible_integer: Option<u64>,
    pub root_of_unity_orders: RootOrders,
}

impl RingSpec {
    /// Whether `div_by_integer` is usable for every k in 1..=n.
    pub fn divides_integers_up_to(&self, n: u64) -> bool {
        match self.max_invertible_integer {
            None => true,
            Some(m) => n <= m,
        }
    }
}

/// A commutative unitary ring given as a runtime context.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Negation. Not counted as an arithmetic operation.
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn from_i64(&self, k: i64) -> Self::Elem;
    fn from_bigint(&self, k: &BigInt) -> Self::Elem;
    fn spec(&self) -> RingSpec;

    /// Returns x with b*x = a.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    /// Returns x with k*x = a.
    fn div_by_integer(&self, a: &Self::Elem, k: u64) -> Result<Self::Elem>;
    /// Inverse of a unit.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// A principal root of unity of the given order, when available.
    fn root_of_unity(&self, _order: u64) -> Option<Self::Elem> {
        None
    }

    /// Size measure used for coefficient-growth reporting.
    fn bit_size(&self, a: &Self::Elem) -> u64;
    /// Whether `to_terms` represents `a` exactly (false for fractions with
    /// a nontrivial denominator).
    fn has_terms(&self, _a: &Self::Elem) -> bool {
        true
    }
    /// Flat monomial expansion used by the literal grammar.
    fn to_terms(&self, a: &Self::Elem) -> Vec<Term>;
    fn from_terms(&self, terms: &[Term]) -> Result<Self::Elem>;
    /// Ring spec string of the literal grammar (`z`, `zp:7`, `z[x]`, ...).
    fn describe(&self) -> String;

    fn format(&self, a: &Self::Elem) -> String {
        format_terms(&self.to_terms(a))
    }
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        self.from_terms(&parse_terms(s)?)
    }
}

/// Rings with gcds, needed by fraction fields.
pub trait GcdDomain: Ring {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// A unit u such that u*a is the canonical associate of a (a != 0).
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem;
}

/// Multiply by +1 or -1 without an arithmetic operation.
pub fn signed<R: Ring>(ring: &R, a: &R::Elem, negative: bool) -> R::Elem {
    if negative {
        ring.neg(a)
    } else {
        a.clone()
    }
}

/// Repeated squaring; small exponents only appear in tests and setup code.
pub fn pow<R: Ring>(ring: &R, a: &R::Elem, mut e: u64) -> R::Elem {
    let mut result = ring.one();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = ring.mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = ring.mul(&base, &base);
        }
    }
    result
}

/// Sum of a list of elements (empty sum is zero).
pub fn sum<R: Ring>(ring: &R, items: &[R::Elem]) -> R::Elem {
    let mut it = items.iter();
    match it.next() {
        None => ring.zero(),
        Some(first) => it.fold(first.clone(), |acc, x| ring.add(&acc, x)),
    }
}

/// Dot product sum_k a_k b_k computed as (len) mults and (len - 1) adds.
pub fn dot<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    debug_assert_eq!(a.len(), b.len());
    let mut acc: Option<R::Elem> = None;
    for (x, y) in a.iter().zip(b) {
        let p = ring.mul(x, y);
        acc = Some(match acc {
            None => p,
            Some(s) => ring.add(&s, &p),
        });
    }
    acc.unwrap_or_else(|| ring.zero())
}

/// Dot product that skips terms with a zero factor.
pub fn dot_sparse<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    let mut acc: Option<R::Elem> = None;
    for (x, y) in a.iter().zip(b) {
        if ring.is_zero(x) || ring.is_zero(y) {
            continue;
        }
        let p = ring.mul(x, y);
        acc = Some(match acc {
            None => p,
            Some(s) => ring.add(&s, &p),
        });
    }
    acc.unwrap_or_else(|| ring.zero())
}
