use super::{Ring, RingSpec, RootOrders, Term};
use crate::error::{Error, Result};
use crate::poly;
use num_bigint::BigInt;

/// Power series over `base` truncated modulo z^(order+1).
///
/// Elements always hold exactly `order + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRing<R> {
    pub base: R,
    pub order: usize,
    pub var: String,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new(base: R, order: usize) -> Self {
        SeriesRing { base, order, var: "z".into() }
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); self.order + 1];
        v[0] = c;
        v
    }

    /// Truncate or pad a polynomial.
    pub fn from_poly(&self, p: &[R::Elem]) -> Vec<R::Elem> {
        poly::SeriesTrunc::from_poly(&self.base, p, self.order).coeffs
    }

    /// a + z*b with a, b in the base ring.
    pub fn linear(&self, a: R::Elem, b: R::Elem) -> Vec<R::Elem> {
        let mut v = self.constant(a);
        if self.order >= 1 {
            v[1] = b;
        }
        v
    }
}

impl<R: Ring> Ring for SeriesRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.order + 1]
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::mul_trunc(&self.base, a, b, self.order)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        self.base.is_one(&a[0]) && a[1..].iter().all(|x| self.base.is_zero(x))
    }
    fn from_i64(&self, k: i64) -> Self::Elem {
        self.constant(self.base.from_i64(k))
    }
    fn from_bigint(&self, k: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(k))
    }
    fn spec(&self) -> RingSpec {
        let b = self.base.spec();
        let truncated = self.order > 0;
        RingSpec {
            characteristic: b.characteristic,
            is_integral_domain: b.is_integral_domain && !truncated,
            is_field: b.is_field && !truncated,
            has_exact_division: b.has_exact_division && !truncated,
            max_invertible_integer: b.max_invertible_integer,
            root_of_unity_orders: if truncated { RootOrders::None } else { b.root_of_unity_orders },
        }
    }
    /// Division by a series whose constant term is a unit.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(b) {
            return Err(Error::ZeroDivisor);
        }
        match self.inv(b) {
            Ok(ib) => Ok(self.mul(a, &ib)),
            Err(_) => Err(Error::NotDivisible),
        }
    }
    fn div_by_integer(&self, a: &Self::Elem, k: u64) -> Result<Self::Elem> {
        a.iter().map(|c| self.base.div_by_integer(c, k)).collect()
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        poly::series_inverse_coeffs(&self.base, a, self.order)
    }
    fn bit_size(&self, a: &Self::Elem) -> u64 {
        a.iter().map(|c| self.base.bit_size(c)).max().unwrap_or(0)
    }
    fn has_terms(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.has_terms(c))
    }
    fn to_terms(&self, a: &Self::Elem) -> Vec<Term> {
        let mut out = Vec::new();
        for (i, c) in a.iter().enumerate() {
            for mut t in self.base.to_terms(c) {
                if i > 0 {
                    t.vars.push((self.var.clone(), i as u32));
                }
                out.push(t);
            }
        }
        super::canonical_terms(out)
    }
    /// Terms of degree above the order are dropped.
    fn from_terms(&self, terms: &[Term]) -> Result<Self::Elem> {
        let mut groups: Vec<Vec<Term>> = vec![Vec::new(); self.order + 1];
        for t in terms {
            let e = t.exponent(&self.var) as usize;
            if e <= self.order {
                groups[e].push(t.without(&self.var));
            }
        }
        groups.iter().map(|g| self.base.from_terms(g)).collect()
    }
    fn describe(&self) -> String {
        format!("{}[[{}]]/{}^{}", self.base.describe(), self.var, self.var, self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn products_truncate() {
        let s = SeriesRing::new(Integers, 2);
        let a = s.parse("1 + z^1").unwrap();
        let sq = s.mul(&a, &a);
        assert_eq!(s.format(&sq), "1+2*z^1+1*z^2");
        let cube = s.mul(&sq, &a);
        assert_eq!(s.format(&cube), "1+3*z^1+3*z^2");
    }

    #[test]
    fn inverse_of_unit_series() {
        let s = SeriesRing::new(Integers, 4);
        let a = s.parse("1 - 2*z^1 + 3*z^3").unwrap();
        let ia = s.inv(&a).unwrap();
        assert!(s.is_one(&s.mul(&a, &ia)));
        assert!(s.inv(&s.parse("2 + z^1").unwrap()).is_err());
    }
}
