use super::{GcdDomain, Ring, RingSpec, Term};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Fraction field of a gcd domain. Every element is kept reduced, with a
/// normalized denominator (positive over Z, monic over polynomial rings
/// with field coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frac<R> {
    pub base: R,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FracElem<E> {
    pub num: E,
    pub den: E,
}

impl<R: GcdDomain> Frac<R> {
    pub fn new(base: R) -> Self {
        Frac { base }
    }

    /// The element n / 1.
    pub fn embed(&self, n: R::Elem) -> FracElem<R::Elem> {
        FracElem { num: n, den: self.base.one() }
    }

    /// Reduced n / d. Panics on d = 0.
    pub fn make(&self, num: R::Elem, den: R::Elem) -> FracElem<R::Elem> {
        assert!(!self.base.is_zero(&den), "zero denominator");
        self.normalize(num, den)
    }

    fn normalize(&self, num: R::Elem, den: R::Elem) -> FracElem<R::Elem> {
        let b = &self.base;
        if b.is_zero(&num) {
            return FracElem { num, den: b.one() };
        }
        let g = b.gcd(&num, &den);
        let (num, den) = if b.is_one(&g) {
            (num, den)
        } else {
            (b.exact_div(&num, &g).expect("gcd divides"), b.exact_div(&den, &g).expect("gcd divides"))
        };
        let u = b.normal_unit(&den);
        if b.is_one(&u) {
            FracElem { num, den }
        } else {
            FracElem { num: b.mul(&u, &num), den: b.mul(&u, &den) }
        }
    }

    /// Numerator and denominator as base-ring elements, when the element
    /// lies in the base ring.
    pub fn as_integral(&self, a: &FracElem<R::Elem>) -> Option<R::Elem> {
        self.base.is_one(&a.den).then(|| a.num.clone())
    }
}

impl<R: GcdDomain> Ring for Frac<R> {
    type Elem = FracElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if a.den == b.den {
            return self.normalize(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.normalize(num, r.mul(&a.den, &b.den))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if a.den == b.den {
            return self.normalize(r.sub(&a.num, &b.num), a.den.clone());
        }
        let num = r.sub(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.normalize(num, r.mul(&a.den, &b.den))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_zero(&a.num) || r.is_zero(&b.num) {
            return self.zero();
        }
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return self.embed(r.mul(&a.num, &b.num));
        }
        self.normalize(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        FracElem { num: self.base.neg(&a.num), den: a.den.clone() }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        self.base.is_one(&a.num) && self.base.is_one(&a.den)
    }
    fn from_i64(&self, k: i64) -> Self::Elem {
        self.embed(self.base.from_i64(k))
    }
    fn from_bigint(&self, k: &BigInt) -> Self::Elem {
        self.embed(self.base.from_bigint(k))
    }
    fn spec(&self) -> RingSpec {
        let b = self.base.spec();
        let max_invertible_integer = if b.characteristic == 0 { None } else { Some(b.characteristic - 1) };
        RingSpec {
            characteristic: b.characteristic,
            is_integral_domain: true,
            is_field: true,
            has_exact_division: true,
            max_invertible_integer,
            root_of_unity_orders: b.root_of_unity_orders,
        }
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let ib = self.inv(b)?;
        Ok(self.mul(a, &ib))
    }
    fn div_by_integer(&self, a: &Self::Elem, k: u64) -> Result<Self::Elem> {
        let kk = self.base.from_bigint(&BigInt::from(k));
        if self.base.is_zero(&kk) {
            return Err(Error::IntegerNotInvertible(k));
        }
        Ok(self.normalize(a.num.clone(), self.base.mul(&a.den, &kk)))
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(a) {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }
    fn root_of_unity(&self, order: u64) -> Option<Self::Elem> {
        self.base.root_of_unity(order).map(|c| self.embed(c))
    }
    fn bit_size(&self, a: &Self::Elem) -> u64 {
        self.base.bit_size(&a.num) + self.base.bit_size(&a.den)
    }
    fn has_terms(&self, a: &Self::Elem) -> bool {
        self.base.is_one(&a.den) && self.base.has_terms(&a.num)
    }
    /// Terms of the numerator; exact only when `has_terms` holds.
    fn to_terms(&self, a: &Self::Elem) -> Vec<Term> {
        self.base.to_terms(&a.num)
    }
    fn from_terms(&self, terms: &[Term]) -> Result<Self::Elem> {
        Ok(self.embed(self.base.from_terms(terms)?))
    }
    fn describe(&self) -> String {
        let b = self.base.describe();
        if b == "z" {
            "q".into()
        } else {
            format!("frac({b})")
        }
    }
    fn format(&self, a: &Self::Elem) -> String {
        if self.base.is_one(&a.den) {
            self.base.format(&a.num)
        } else {
            format!("({})/({})", self.base.format(&a.num), self.base.format(&a.den))
        }
    }
    /// Accepts `n`, `n/d`, and `(n)/(d)`.
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let s = s.trim();
        let mut depth = 0i32;
        let mut slash = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if slash.is_some() {
                        return Err(Error::Parse(format!("more than one '/' in '{s}'")));
                    }
                    slash = Some(i);
                }
                _ => {}
            }
        }
        let strip = |t: &str| -> String {
            let t = t.trim();
            t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t).to_string()
        };
        match slash {
            None => Ok(self.embed(self.base.parse(&strip(s))?)),
            Some(i) => {
                let num = self.base.parse(&strip(&s[..i]))?;
                let den = self.base.parse(&strip(&s[i + 1..]))?;
                if self.base.is_zero(&den) {
                    return Err(Error::Parse(format!("zero denominator in '{s}'")));
                }
                Ok(self.normalize(num, den))
            }
        }
    }
}

impl<R: GcdDomain> GcdDomain for Frac<R> {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) && self.is_zero(b) {
            self.zero()
        } else {
            self.one()
        }
    }
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem {
        self.inv(a).unwrap_or_else(|_| self.one())
    }
}
