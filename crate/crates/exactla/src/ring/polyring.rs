use super::{canonical_terms, format_terms, GcdDomain, Ring, RingSpec, Term};
use crate::error::{Error, Result};
use crate::poly;
use num_bigint::BigInt;

/// Univariate polynomials over `base` in the variable `var`.
///
/// Nesting gives multivariate rings: `PolyRing<PolyRing<Integers>>` with
/// inner variable `x` and outer variable `y` is Z[x,y].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<R> {
    pub base: R,
    pub var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyRing { base, var: var.into() }
    }

    /// The constant polynomial c.
    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        poly::normalized(&self.base, vec![c])
    }

    /// The variable itself.
    pub fn gen(&self) -> Vec<R::Elem> {
        vec![self.base.zero(), self.base.one()]
    }

    pub fn from_coeffs(&self, cs: Vec<R::Elem>) -> Vec<R::Elem> {
        poly::normalized(&self.base, cs)
    }

    pub fn eval(&self, p: &[R::Elem], x: &R::Elem) -> R::Elem {
        poly::eval(&self.base, p, x)
    }

    /// Content-free part and content, for gcd domains.
    fn content(&self, p: &[R::Elem]) -> R::Elem
    where
        R: GcdDomain,
    {
        let mut g = self.base.zero();
        for c in p {
            g = self.base.gcd(&g, c);
            if self.base.is_one(&g) {
                break;
            }
        }
        g
    }

    fn primitive_part(&self, p: &[R::Elem]) -> Vec<R::Elem>
    where
        R: GcdDomain,
    {
        if p.is_empty() {
            return Vec::new();
        }
        let c = self.content(p);
        let q: Vec<R::Elem> = if self.base.is_one(&c) {
            p.to_vec()
        } else {
            p.iter().map(|x| self.base.exact_div(x, &c).expect("content divides")).collect()
        };
        let u = self.base.normal_unit(q.last().unwrap());
        poly::scale(&self.base, &u, &q)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.base.one()]
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::add(&self.base, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::sub(&self.base, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::mul_auto(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        poly::neg(&self.base, a)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        a.len() == 1 && self.base.is_one(&a[0])
    }
    fn from_i64(&self, k: i64) -> Self::Elem {
        self.constant(self.base.from_i64(k))
    }
    fn from_bigint(&self, k: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(k))
    }
    fn spec(&self) -> RingSpec {
        let b = self.base.spec();
        RingSpec {
            characteristic: b.characteristic,
            is_integral_domain: b.is_integral_domain,
            is_field: false,
            has_exact_division: b.has_exact_division && b.is_integral_domain,
            max_invertible_integer: b.max_invertible_integer,
            root_of_unity_orders: b.root_of_unity_orders,
        }
    }
    /// Long division; each quotient coefficient is an exact division of
    /// leading coefficients in the base ring.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        if b.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        let (q, r) = poly::divrem(&self.base, a, b).map_err(|e| match e {
            Error::ZeroDivisor => Error::ZeroDivisor,
            _ => Error::NotDivisible,
        })?;
        if r.is_empty() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }
    fn div_by_integer(&self, a: &Self::Elem, k: u64) -> Result<Self::Elem> {
        a.iter().map(|c| self.base.div_by_integer(c, k)).collect()
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        match a.len() {
            0 => Err(Error::ZeroDivisor),
            1 => Ok(vec![self.base.inv(&a[0])?]),
            _ => Err(Error::NotUnit),
        }
    }
    fn root_of_unity(&self, order: u64) -> Option<Self::Elem> {
        self.base.root_of_unity(order).map(|c| self.constant(c))
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
        canonical_terms(out)
    }
    fn from_terms(&self, terms: &[Term]) -> Result<Self::Elem> {
        let mut groups: Vec<Vec<Term>> = Vec::new();
        for t in terms {
            let e = t.exponent(&self.var) as usize;
            if groups.len() <= e {
                groups.resize(e + 1, Vec::new());
            }
            groups[e].push(t.without(&self.var));
        }
        let cs = groups.iter().map(|g| self.base.from_terms(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.from_coeffs(cs))
    }
    fn describe(&self) -> String {
        let b = self.base.describe();
        match b.strip_suffix(']') {
            Some(head) if !b.contains('/') => format!("{head},{}]", self.var),
            _ => format!("{b}[{}]", self.var),
        }
    }
    fn format(&self, a: &Self::Elem) -> String {
        if self.has_terms(a) {
            return format_terms(&self.to_terms(a));
        }
        if a.len() == 1 {
            return self.base.format(&a[0]);
        }
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| match i {
                0 => format!("({})", self.base.format(c)),
                _ => format!("({})*{}^{}", self.base.format(c), self.var, i),
            })
            .collect();
        parts.join("+")
    }
}

/// Gcd by primitive pseudo-remainder sequences; the result is normalized
/// so its leading coefficient is the canonical associate (monic over fields).
impl<R: GcdDomain> GcdDomain for PolyRing<R> {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() {
            return self.primitive_part_scaled(b);
        }
        if b.is_empty() {
            return self.primitive_part_scaled(a);
        }
        let c = self.base.gcd(&self.content(a), &self.content(b));
        let (mut p, mut q) = if a.len() >= b.len() {
            (self.primitive_part(a), self.primitive_part(b))
        } else {
            (self.primitive_part(b), self.primitive_part(a))
        };
        loop {
            if q.len() == 1 {
                p = self.one();
                break;
            }
            let r = self.pseudo_remainder(&p, &q);
            if r.is_empty() {
                p = q;
                break;
            }
            p = q;
            q = self.primitive_part(&r);
        }
        let g = poly::scale(&self.base, &c, &p);
        let u = self.base.normal_unit(g.last().unwrap());
        poly::scale(&self.base, &u, &g)
    }
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.last() {
            None => self.one(),
            Some(lc) => vec![self.base.normal_unit(lc)],
        }
    }
}

impl<R: GcdDomain> PolyRing<R> {
    fn primitive_part_scaled(&self, a: &[R::Elem]) -> Vec<R::Elem> {
        match a.last() {
            None => Vec::new(),
            Some(lc) => poly::scale(&self.base, &self.base.normal_unit(lc), a),
        }
    }

    /// A nonzero constant multiple of the remainder of a by b.
    fn pseudo_remainder(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.base;
        let db = b.len() - 1;
        let lb = &b[db];
        let mut rem = a.to_vec();
        while rem.len() > db {
            let dr = rem.len() - 1;
            let lr = rem[dr].clone();
            let shift = dr - db;
            let scaled: Vec<R::Elem> = rem.iter().map(|x| r.mul(lb, x)).collect();
            let mut sub = vec![r.zero(); shift];
            sub.extend(b.iter().map(|x| r.mul(&lr, x)));
            rem = poly::sub(r, &scaled, &sub);
            let g = self.content(&rem);
            if !rem.is_empty() && !r.is_one(&g) {
                rem = rem.iter().map(|x| r.exact_div(x, &g).expect("content divides")).collect();
            }
        }
        rem
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Frac, Integers, Zmod};

    #[test]
    fn exact_division_difference_of_squares() {
        let zx = PolyRing::new(Integers, "x");
        let a = zx.parse("x^2 - 1").unwrap();
        let b = zx.parse("x^1 - 1").unwrap();
        assert_eq!(zx.format(&zx.exact_div(&a, &b).unwrap()), "1+1*x^1");
        assert_eq!(zx.exact_div(&b, &a), Err(Error::NotDivisible));
        let two_x = zx.parse("2*x^1").unwrap();
        assert_eq!(zx.exact_div(&zx.parse("x^2").unwrap(), &two_x), Err(Error::NotDivisible));
    }

    #[test]
    fn bivariate_literals() {
        let zxy = PolyRing::new(PolyRing::new(Integers, "x"), "y");
        let p = zxy.parse("3*x^2*y^1 - x^1 + 2*y^3 + 5").unwrap();
        assert_eq!(zxy.format(&p), "5-1*x^1+3*x^2*y^1+2*y^3");
        assert_eq!(zxy.describe(), "z[x,y]");
    }

    #[test]
    fn gcd_over_integers_and_rationals() {
        let zx = PolyRing::new(Integers, "x");
        let a = zx.parse("2*x^2 - 2").unwrap();
        let b = zx.parse("4*x^2 + 8*x^1 + 4").unwrap();
        assert_eq!(zx.format(&zx.gcd(&a, &b)), "2+2*x^1");
        let qx = PolyRing::new(Frac::new(Integers), "x");
        let a = qx.parse("2*x^2 - 2").unwrap();
        let b = qx.parse("4*x^2 + 8*x^1 + 4").unwrap();
        assert_eq!(qx.format(&qx.gcd(&a, &b)), "1+1*x^1");
        let fx = PolyRing::new(Zmod::new(7), "x");
        let c = fx.parse("x^2 + 1").unwrap();
        let d = fx.parse("x^1 + 3").unwrap();
        assert!(fx.is_one(&fx.gcd(&c, &d)));
    }
}
