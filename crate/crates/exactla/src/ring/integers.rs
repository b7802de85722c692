use super::{GcdDomain, RingSpec, RootOrders, Term};
use crate::error::{Error, Result};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The integers, arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn from_i64(&self, k: i64) -> BigInt {
        BigInt::from(k)
    }
    fn from_bigint(&self, k: &BigInt) -> BigInt {
        k.clone()
    }
    fn spec(&self) -> RingSpec {
        RingSpec {
            characteristic: 0,
            is_integral_domain: true,
            is_field: false,
            has_exact_division: true,
            max_invertible_integer: None,
            root_of_unity_orders: RootOrders::None,
        }
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
    fn div_by_integer(&self, a: &BigInt, k: u64) -> Result<BigInt> {
        if k == 0 {
            return Err(Error::IntegerNotInvertible(0));
        }
        let (q, r) = a.div_rem(&BigInt::from(k));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
    fn inv(&self, a: &BigInt) -> Result<BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else if a.is_zero() {
            Err(Error::ZeroDivisor)
        } else {
            Err(Error::NotUnit)
        }
    }
    fn bit_size(&self, a: &BigInt) -> u64 {
        a.bits()
    }
    fn to_terms(&self, a: &BigInt) -> Vec<Term> {
        if a.is_zero() {
            Vec::new()
        } else {
            vec![Term::constant(a.clone())]
        }
    }
    fn from_terms(&self, terms: &[Term]) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for t in terms {
            if !t.vars.is_empty() {
                return Err(Error::Parse(format!("unexpected variable {} in an integer", t.vars[0].0)));
            }
            acc += &t.coeff;
        }
        Ok(acc)
    }
    fn describe(&self) -> String {
        "z".into()
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl GcdDomain for Integers {
    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
    fn normal_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}
