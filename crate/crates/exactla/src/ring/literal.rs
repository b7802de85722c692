//! Ring literal grammar: signed decimal integers and sums of `c*x^k` terms.
//!
//! A term is an optional sign, then an integer coefficient and/or factors
//! `var^k` joined by `*`. Both `*` and `^` are mandatory, so `3*x^2*y^1` and
//! `x^1` parse but `3x` and `x` do not. Whitespace is ignored.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// One monomial: coefficient times a product of variable powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub vars: Vec<(String, u32)>,
}

impl Term {
    pub fn constant(c: BigInt) -> Self {
        Term { coeff: c, vars: Vec::new() }
    }

    /// Exponent of `var` in this term.
    pub fn exponent(&self, var: &str) -> u32 {
        self.vars.iter().filter(|(v, _)| v == var).map(|(_, e)| *e).sum()
    }

    /// This term with `var` removed.
    pub fn without(&self, var: &str) -> Term {
        Term {
            coeff: self.coeff.clone(),
            vars: self.vars.iter().filter(|(v, _)| v != var).cloned().collect(),
        }
    }
}

pub fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
            pieces.push(&s[start..i]);
            start = i;
        }
    }
    pieces.push(&s[start..]);
    let terms = pieces.into_iter().map(parse_term).collect::<Result<Vec<_>>>()?;
    Ok(canonical_terms(terms))
}

/// Sort variables inside each term, combine like terms, drop zeros, and
/// order the terms by their variable lists.
pub fn canonical_terms(terms: Vec<Term>) -> Vec<Term> {
    let mut combined: BTreeMap<Vec<(String, u32)>, BigInt> = BTreeMap::new();
    for t in terms {
        let mut powers: BTreeMap<String, u32> = BTreeMap::new();
        for (v, e) in t.vars {
            *powers.entry(v).or_insert(0) += e;
        }
        let vars: Vec<_> = powers.into_iter().filter(|(_, e)| *e > 0).collect();
        *combined.entry(vars).or_insert_with(BigInt::zero) += t.coeff;
    }
    combined
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(vars, coeff)| Term { coeff, vars })
        .collect()
}

fn parse_term(piece: &str) -> Result<Term> {
    let (negative, body) = match piece.as_bytes()[0] {
        b'+' => (false, &piece[1..]),
        b'-' => (true, &piece[1..]),
        _ => (false, piece),
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("dangling sign in '{piece}'")));
    }
    let mut coeff = BigInt::one();
    let mut powers: BTreeMap<String, u32> = BTreeMap::new();
    for (idx, factor) in body.split('*').enumerate() {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in '{piece}'")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            if idx != 0 {
                return Err(Error::Parse(format!("coefficient must come first in '{piece}'")));
            }
            coeff = factor.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))?;
            continue;
        }
        let (var, exp) = factor
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("missing '^' in factor '{factor}'")))?;
        if var.is_empty()
            || !var.chars().next().unwrap().is_ascii_alphabetic()
            || !var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(Error::Parse(format!("bad variable name '{var}'")));
        }
        let e: u32 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent '{exp}'")))?;
        *powers.entry(var.to_string()).or_insert(0) += e;
    }
    if negative {
        coeff = -coeff;
    }
    Ok(Term { coeff, vars: powers.into_iter().filter(|(_, e)| *e > 0).collect() })
}

/// Render terms in the literal grammar; the empty sum is `0`.
pub fn format_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let negative = t.coeff.is_negative();
        if i > 0 {
            out.push(if negative { '-' } else { '+' });
        } else if negative {
            out.push('-');
        }
        out.push_str(&t.coeff.abs().to_string());
        for (v, e) in &t.vars {
            out.push_str(&format!("*{v}^{e}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_polynomial_terms() {
        let t = parse_terms("3*x^2 - 1*x^0 + x^1").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(format_terms(&t), "-1+1*x^1+3*x^2");
    }

    #[test]
    fn rejects_missing_operators() {
        assert!(parse_terms("3x^2").is_err());
        assert!(parse_terms("3*x").is_err());
    }

    #[test]
    fn negative_exponent_sign_is_not_a_split() {
        assert!(parse_terms("2*x^-1").is_err());
    }

    #[test]
    fn combines_like_terms() {
        let t = parse_terms("2*x^1*y^1 + 3*y^1*x^1").unwrap();
        assert_eq!(t, vec![Term { coeff: 5.into(), vars: vec![("x".into(), 1), ("y".into(), 1)] }]);
    }
}
