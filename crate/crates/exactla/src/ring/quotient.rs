use super::{canonical_terms, format_terms, parse_terms, Ring, RingSpec, RootOrders, Term, Zmod};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Sparse multivariate polynomial over Z/p: exponent vector -> nonzero residue.
pub type MPoly = BTreeMap<Vec<u32>, u64>;

/// Z/p[x_1..x_k] modulo a triangular ideal.
///
/// Generator i is monic in x_i and involves only x_1..x_i. Reduction
/// divides by the generators from the last to the first, which leaves a
/// representative with deg_{x_i} < d_i for every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    field: Zmod,
    vars: Vec<String>,
    ideal: Vec<MPoly>,
    /// Degree of generator i in x_i.
    degs: Vec<u32>,
    /// Generator i minus its leading monomial, negated: x_i^{d_i} = tail_i.
    tails: Vec<Vec<(Vec<u32>, u64)>>,
}

impl QuotientRing {
    pub fn new(p: u64, vars: Vec<String>, ideal: Vec<MPoly>) -> Result<Self> {
        let field = Zmod::new(p);
        if ideal.len() > vars.len() {
            return Err(Error::NonTriangularIdeal(format!("{} generators for {} variables", ideal.len(), vars.len())));
        }
        let k = vars.len();
        let mut degs = Vec::new();
        let mut tails = Vec::new();
        for (i, g) in ideal.iter().enumerate() {
            if g.keys().any(|e| e.len() != k || e[i + 1..].iter().any(|&x| x > 0)) {
                return Err(Error::NonTriangularIdeal(format!("generator {} involves a later variable", i + 1)));
            }
            let d = g.keys().map(|e| e[i]).max().unwrap_or(0);
            let mut lead = vec![0u32; k];
            lead[i] = d;
            let leading: Vec<_> = g.iter().filter(|(e, _)| e[i] == d).collect();
            if d == 0 || leading.len() != 1 || *leading[0].0 != lead || *leading[0].1 != 1 {
                return Err(Error::NonTriangularIdeal(format!("generator {} is not monic in {}", i + 1, vars[i])));
            }
            degs.push(d);
            tails.push(g.iter().filter(|(e, _)| e[i] < d).map(|(e, c)| (e.clone(), field.neg(c))).collect());
        }
        Ok(QuotientRing { field, vars, ideal, degs, tails })
    }

    /// Build from literal generators such as `x^3 - 1`.
    pub fn from_literals(p: u64, vars: &[&str], generators: &[&str]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let field = Zmod::new(p);
        let ideal = generators
            .iter()
            .map(|g| terms_to_mpoly(&field, &vars, &parse_terms(g)?))
            .collect::<Result<Vec<_>>>()?;
        QuotientRing::new(p, vars, ideal)
    }

    /// Parse `zp:<p>[vars]/<poly>;<poly>`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad quotient ring spec '{spec}'"));
        let rest = spec.trim().strip_prefix("zp:").ok_or_else(bad)?;
        let open = rest.find('[').ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let p: u64 = rest[..open].parse().map_err(|_| bad())?;
        if !super::is_prime_u64(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        let vars: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
        let gens = rest[close + 1..].strip_prefix('/').ok_or_else(bad)?;
        let gens: Vec<&str> = gens.split(';').map(str::trim).filter(|g| !g.is_empty()).collect();
        QuotientRing::from_literals(p, &vars, &gens)
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Degree of generator i in its leading variable.
    pub fn degrees(&self) -> &[u32] {
        &self.degs
    }

    /// Canonical representative of an arbitrary polynomial.
    pub fn reduce(&self, mut a: MPoly) -> MPoly {
        for i in (0..self.ideal.len()).rev() {
            let d = self.degs[i];
            while let Some(e) = a.keys().find(|e| e[i] >= d).cloned() {
                let c = a.remove(&e).unwrap();
                let mut shifted = e;
                shifted[i] -= d;
                for (te, tc) in &self.tails[i] {
                    let key: Vec<u32> = shifted.iter().zip(te).map(|(x, y)| x + y).collect();
                    add_term(&self.field, &mut a, key, self.field.mul(&c, tc));
                }
            }
        }
        a
    }

    /// Monomials x^e with e_i < d_i; `None` if some variable has no generator.
    fn basis(&self) -> Option<Vec<Vec<u32>>> {
        if self.ideal.len() < self.vars.len() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &d in &self.degs {
            out = out
                .into_iter()
                .flat_map(|e: Vec<u32>| {
                    (0..d).map(move |k| {
                        let mut f = e.clone();
                        f.push(k);
                        f
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Solve b*x = a through the multiplication-by-b matrix on the basis.
    fn solve(&self, b: &MPoly, a: &MPoly) -> Result<MPoly> {
        let basis = self.basis().ok_or(Error::NotDivisible)?;
        let n = basis.len();
        let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let f = &self.field;
        // Augmented system, rows = coordinates, columns = basis images then a.
        let mut m = vec![vec![0u64; n + 1]; n];
        for (j, e) in basis.iter().enumerate() {
            let img = self.mul(b, &MPoly::from([(e.clone(), 1)]));
            for (k, c) in img {
                m[index[&k]][j] = c;
            }
        }
        for (k, c) in a {
            m[index[k]][n] = *c;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| m[r][col] != 0).ok_or(Error::ZeroDivisor)?;
            m.swap(col, piv);
            let inv = f.inv(&m[col][col])?;
            for x in m[col].iter_mut() {
                *x = f.mul(x, &inv);
            }
            for r in 0..n {
                if r != col && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in col..=n {
                        let t = f.mul(&factor, &m[col][c]);
                        m[r][c] = f.sub(&m[r][c], &t);
                    }
                }
            }
        }
        Ok(basis.into_iter().zip(&m).filter(|(_, row)| row[n] != 0).map(|(e, row)| (e, row[n])).collect())
    }
}

fn add_term(f: &Zmod, a: &mut MPoly, key: Vec<u32>, c: u64) {
    if c == 0 {
        return;
    }
    match a.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = f.add(o.get(), &c);
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn terms_to_mpoly(f: &Zmod, vars: &[String], terms: &[Term]) -> Result<MPoly> {
    let mut out = MPoly::new();
    for t in terms {
        let mut e = vec![0u32; vars.len()];
        for (v, k) in &t.vars {
            let i = vars
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::Parse(format!("unknown variable '{v}'")))?;
            e[i] += k;
        }
        add_term(f, &mut out, e, f.from_bigint(&t.coeff));
    }
    Ok(out)
}

impl Ring for QuotientRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::new()
    }
    fn one(&self) -> MPoly {
        self.from_i64(1)
    }
    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = a.clone();
        for (e, c) in b {
            add_term(&self.field, &mut out, e.clone(), *c);
        }
        out
    }
    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = a.clone();
        for (e, c) in b {
            add_term(&self.field, &mut out, e.clone(), self.field.neg(c));
        }
        out
    }
    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = MPoly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let key: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&self.field, &mut out, key, self.field.mul(ca, cb));
            }
        }
        self.reduce(out)
    }
    fn neg(&self, a: &MPoly) -> MPoly {
        a.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect()
    }
    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_empty()
    }
    fn is_one(&self, a: &MPoly) -> bool {
        a.len() == 1 && a.get(&vec![0; self.vars.len()]) == Some(&1)
    }
    fn from_i64(&self, k: i64) -> MPoly {
        let c = self.field.from_i64(k);
        let mut out = MPoly::new();
        add_term(&self.field, &mut out, vec![0; self.vars.len()], c);
        out
    }
    fn from_bigint(&self, k: &BigInt) -> MPoly {
        let c = self.field.from_bigint(k);
        let mut out = MPoly::new();
        add_term(&self.field, &mut out, vec![0; self.vars.len()], c);
        out
    }
    fn spec(&self) -> RingSpec {
        let p = self.modulus();
        RingSpec {
            characteristic: p,
            is_integral_domain: false,
            is_field: false,
            has_exact_division: false,
            max_invertible_integer: Some(p - 1),
            root_of_unity_orders: RootOrders::DivisorsOf(p - 1),
        }
    }
    fn exact_div(&self, a: &MPoly, b: &MPoly) -> Result<MPoly> {
        if b.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        self.solve(b, a)
    }
    fn div_by_integer(&self, a: &MPoly, k: u64) -> Result<MPoly> {
        let ik = self.field.inv(&(k % self.modulus())).map_err(|_| Error::IntegerNotInvertible(k))?;
        Ok(a.iter().map(|(e, c)| (e.clone(), self.field.mul(c, &ik))).collect())
    }
    fn inv(&self, a: &MPoly) -> Result<MPoly> {
        if a.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        self.solve(a, &self.one()).map_err(|e| match e {
            Error::ZeroDivisor | Error::NotDivisible => Error::NotUnit,
            other => other,
        })
    }
    fn root_of_unity(&self, order: u64) -> Option<MPoly> {
        self.field.root_of_unity(order).map(|c| self.from_i64(c as i64))
    }
    fn bit_size(&self, a: &MPoly) -> u64 {
        a.values().map(|c| 64 - c.leading_zeros() as u64).max().unwrap_or(0)
    }
    fn to_terms(&self, a: &MPoly) -> Vec<Term> {
        let terms = a
            .iter()
            .map(|(e, c)| Term {
                coeff: BigInt::from(*c),
                vars: self.vars.iter().zip(e).filter(|(_, k)| **k > 0).map(|(v, k)| (v.clone(), *k)).collect(),
            })
            .collect();
        canonical_terms(terms)
    }
    fn from_terms(&self, terms: &[Term]) -> Result<MPoly> {
        Ok(self.reduce(terms_to_mpoly(&self.field, &self.vars, terms)?))
    }
    fn describe(&self) -> String {
        let gens: Vec<String> = self.ideal.iter().map(|g| format_terms(&self.to_terms(g))).collect();
        format!("zp:{}[{}]/{}", self.modulus(), self.vars.join(","), gens.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> QuotientRing {
        QuotientRing::parse_spec("zp:7[x]/x^3-1").unwrap()
    }

    #[test]
    fn reduces_modulo_cubic() {
        let r = cubic();
        assert_eq!(r.parse("x^3").unwrap(), r.one());
        assert_eq!(r.format(&r.parse("x^4").unwrap()), "1*x^1");
        assert_eq!(r.parse("8").unwrap(), r.one());
    }

    #[test]
    fn rejects_non_triangular_ideals() {
        assert!(matches!(
            QuotientRing::from_literals(7, &["x", "y"], &["x^2 + y^1"]),
            Err(Error::NonTriangularIdeal(_))
        ));
        assert!(matches!(QuotientRing::from_literals(7, &["x"], &["2*x^2 + 1"]), Err(Error::NonTriangularIdeal(_))));
    }

    #[test]
    fn bivariate_triangular_reduction() {
        let r = QuotientRing::from_literals(7, &["y", "x"], &["y^3 - 2*y^1 + 1", "x^5 - 5*x^1*y^1 + 1"]).unwrap();
        let x = r.parse("x^1").unwrap();
        let x5 = (0..5).fold(r.one(), |acc, _| r.mul(&acc, &x));
        assert_eq!(r.format(&x5), r.format(&r.parse("5*x^1*y^1 - 1").unwrap()));
        let y = r.parse("y^1").unwrap();
        let y3 = r.mul(&r.mul(&y, &y), &y);
        assert_eq!(r.format(&y3), "6+2*y^1");
    }

    #[test]
    fn units_and_zero_divisors() {
        let r = cubic();
        let x = r.parse("x^1").unwrap();
        let ix = r.inv(&x).unwrap();
        assert_eq!(r.format(&ix), "1*x^2");
        let zd = r.parse("x^1 - 1").unwrap();
        assert_eq!(r.inv(&zd), Err(Error::NotUnit));
        assert_eq!(r.exact_div(&r.one(), &zd), Err(Error::ZeroDivisor));
    }
}
