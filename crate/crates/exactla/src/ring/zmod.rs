use super::{GcdDomain, RingSpec, RootOrders, Term};
use crate::error::{Error, Result};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Residues modulo a word-sized p, stored in [0, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zmod {
    p: u64,
    prime: bool,
}

impl Zmod {
    /// Panics unless 2 <= p < 2^63.
    pub fn new(p: u64) -> Self {
        assert!((2..1u64 << 63).contains(&p), "modulus out of range: {p}");
        Zmod { p, prime: is_prime_u64(p) }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_prime(&self) -> bool {
        self.prime
    }

    pub fn reduce_i64(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }

    /// Signed representative in (-p/2, p/2].
    pub fn signed(&self, a: u64) -> i128 {
        if a > self.p / 2 {
            a as i128 - self.p as i128
        } else {
            a as i128
        }
    }

    pub fn pow_mod(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    fn smallest_prime_factor(&self) -> u64 {
        let mut d = 2u64;
        while d.saturating_mul(d) <= self.p {
            if self.p % d == 0 {
                return d;
            }
            d += 1;
        }
        self.p
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl Ring for Zmod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn from_i64(&self, k: i64) -> u64 {
        (k as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_bigint(&self, k: &BigInt) -> u64 {
        k.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn spec(&self) -> RingSpec {
        RingSpec {
            characteristic: self.p,
            is_integral_domain: self.prime,
            is_field: self.prime,
            has_exact_division: self.prime,
            max_invertible_integer: Some(self.smallest_prime_factor() - 1),
            root_of_unity_orders: if self.prime {
                RootOrders::DivisorsOf(self.p - 1)
            } else {
                RootOrders::None
            },
        }
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Result<u64> {
        let ib = self.inv(b).map_err(|_| Error::ZeroDivisor)?;
        Ok(self.mul(a, &ib))
    }
    fn div_by_integer(&self, a: &u64, k: u64) -> Result<u64> {
        let kk = k % self.p;
        match self.inv(&kk) {
            Ok(ik) => Ok(self.mul(a, &ik)),
            Err(_) => Err(Error::IntegerNotInvertible(k)),
        }
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::ZeroDivisor);
        }
        let g = BigInt::from(*a).extended_gcd(&BigInt::from(self.p));
        if g.gcd != BigInt::from(1) {
            return Err(Error::NotUnit);
        }
        Ok(self.from_bigint(&g.x))
    }
    fn root_of_unity(&self, order: u64) -> Option<u64> {
        if !self.prime || order == 0 || (self.p - 1) % order != 0 {
            return None;
        }
        if order == 1 {
            return Some(1);
        }
        let factors = prime_factors(order);
        let cofactor = (self.p - 1) / order;
        (2..self.p).find_map(|c| {
            let x = pow_mod(c, cofactor, self.p);
            factors.iter().all(|q| pow_mod(x, order / q, self.p) != 1).then_some(x)
        })
    }
    fn bit_size(&self, a: &u64) -> u64 {
        64 - a.leading_zeros() as u64
    }
    fn to_terms(&self, a: &u64) -> Vec<Term> {
        if *a == 0 {
            Vec::new()
        } else {
            vec![Term::constant(BigInt::from(*a))]
        }
    }
    fn from_terms(&self, terms: &[Term]) -> Result<u64> {
        let mut acc = BigInt::zero();
        for t in terms {
            if !t.vars.is_empty() {
                return Err(Error::Parse(format!("unexpected variable {} in Z/{}", t.vars[0].0, self.p)));
            }
            acc += &t.coeff;
        }
        Ok(self.from_bigint(&acc))
    }
    fn describe(&self) -> String {
        format!("zp:{}", self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl GcdDomain for Zmod {
    fn gcd(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 && *b == 0 {
            0
        } else {
            1
        }
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        self.inv(a).unwrap_or(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_integer_mod_7() {
        let f = Zmod::new(7);
        assert_eq!(f.div_by_integer(&3, 2), Ok(5));
        assert_eq!(f.div_by_integer(&3, 7), Err(Error::IntegerNotInvertible(7)));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(10007));
        assert!(is_prime_u64(998244353));
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64(10007 * 10009));
    }

    #[test]
    fn roots_are_principal() {
        let f = Zmod::new(998244353);
        for order in [2u64, 4, 8, 16, 7, 17] {
            let xi = f.root_of_unity(order).unwrap();
            assert_eq!(f.pow_mod(xi, order), 1);
            for i in 1..order {
                let mut s = 0;
                for j in 0..order {
                    s = f.add(&s, &f.pow_mod(xi, i * j));
                }
                assert_eq!(s, 0, "order {order} i {i}");
            }
        }
        assert!(f.root_of_unity(5).is_none());
    }

    #[test]
    fn composite_modulus_capabilities() {
        let r = Zmod::new(15);
        let s = r.spec();
        assert!(!s.is_field);
        assert_eq!(s.max_invertible_integer, Some(2));
    }
}
