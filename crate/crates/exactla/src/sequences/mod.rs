//! Linear recurrences: Berlekamp-Massey, the Hankel system, Wiedemann.

use crate::elimination::{rank, solve_gauss};
use crate::error::{Error, Result};
use crate::matrix::{self, DenseMatrix};
use crate::poly;
use crate::ring::Ring;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_RETRIES: usize = 4;

/// Terms a_0, a_1, ... of a sequence assumed to have a generator of degree
/// at most `bound`. Recovery reads the first 2·bound terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrentSequence<E> {
    pub terms: Vec<E>,
    pub bound: usize,
}

impl<E: Clone> RecurrentSequence<E> {
    pub fn new(terms: Vec<E>, bound: usize) -> Result<Self> {
        if terms.len() < 2 * bound {
            return Err(Error::DimensionMismatch(format!(
                "{} terms for a generator bound of {bound}",
                terms.len()
            )));
        }
        Ok(Self { terms, bound })
    }
}

/// True when the ascending polynomial p gives Σ_k p_k a_{i+k} = 0 for every
/// window that fits in `terms`.
pub fn generates<R: Ring>(r: &R, p: &[R::Elem], terms: &[R::Elem]) -> bool {
    let Some(d) = poly::degree(p) else {
        return false;
    };
    (0..terms.len().saturating_sub(d)).all(|i| {
        let s = p.iter().enumerate().fold(r.zero(), |acc, (k, c)| r.add(&acc, &r.mul(c, &terms[i + k])));
        r.is_zero(&s)
    })
}

fn check_len<E>(seq: &RecurrentSequence<E>) -> Result<()> {
    if seq.terms.len() < 2 * seq.bound {
        return Err(Error::DimensionMismatch(format!(
            "{} terms for a generator bound of {}",
            seq.terms.len(),
            seq.bound
        )));
    }
    Ok(())
}

/// Minimal monic generator (ascending) by extended Euclid on
/// (X^{2n}, Σ_{i<2n} a_i X^i), stopped once deg R < n.
pub fn berlekamp_massey<R: Ring>(r: &R, seq: &RecurrentSequence<R::Elem>) -> Result<Vec<R::Elem>> {
    check_len(seq)?;
    let n = seq.bound;
    let head = &seq.terms[..2 * n];
    if head.iter().all(|a| r.is_zero(a)) {
        return Err(Error::ZeroSequence);
    }
    let mut r0 = poly::monomial(r, r.one(), 2 * n);
    let mut r1 = poly::normalized(r, head.to_vec());
    let mut v0: Vec<R::Elem> = Vec::new();
    let mut v1 = vec![r.one()];
    while poly::degree(&r1).is_some_and(|d| d >= n) {
        let (q, rem) = poly::divrem(r, &r0, &r1)?;
        let v2 = poly::sub(r, &v0, &poly::mul_auto(r, &q, &v1));
        r0 = std::mem::replace(&mut r1, rem);
        v0 = std::mem::replace(&mut v1, v2);
    }
    let dv = poly::degree(&v1).unwrap_or(0);
    let d = match poly::degree(&r1) {
        Some(dr) => dv.max(dr + 1),
        None => dv,
    };
    // X^d V(1/X)
    let mut p = vec![r.zero(); d + 1];
    for (k, c) in v1.iter().enumerate() {
        p[d - k] = c.clone();
    }
    poly::make_monic(r, &poly::normalized(r, p))
}

/// Minimal generator from the Hankel matrix [a_{i+j}]_{0≤i,j<n}: its rank d
/// is the generator degree and the d×d system Σ_j a_{i+j} g_j = a_{d+i}
/// gives X^d - Σ g_i X^i.
pub fn hankel_minpoly<R: Ring>(r: &R, seq: &RecurrentSequence<R::Elem>) -> Result<Vec<R::Elem>> {
    check_len(seq)?;
    let n = seq.bound;
    let a = &seq.terms;
    if a[..2 * n].iter().all(|x| r.is_zero(x)) {
        return Err(Error::ZeroSequence);
    }
    let h = DenseMatrix::from_fn(n, n, |i, j| a[i + j].clone());
    let d = rank(r, &h)?;
    let sys = h.principal_submatrix(d);
    let rhs: Vec<R::Elem> = (0..d).map(|i| a[d + i].clone()).collect();
    let g = solve_gauss(r, &sys, &rhs).map_err(|e| match e {
        Error::ZeroDivisor => Error::SingularHankelSystem,
        other => other,
    })?;
    let mut p: Vec<R::Elem> = g.iter().map(|x| r.neg(x)).collect();
    p.push(r.one());
    Ok(p)
}

/// Random vectors u, v from ChaCha8 seeded with `seed`, the 2n terms
/// u·A^k·v and their Berlekamp-Massey generator. Keeps the highest-degree
/// generator over `retries` draws and stops early once it reaches
/// `target` (n when absent). Falling short of an explicit target after
/// every retry is `RetriesExhausted`.
pub fn wiedemann_minpoly<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
    seed: u64,
    retries: usize,
    target: Option<usize>,
) -> Result<Vec<R::Elem>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(vec![r.one()]);
    }
    let goal = target.unwrap_or(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Vec<R::Elem>> = None;
    for _ in 0..retries.max(1) {
        let u: Vec<R::Elem> = (0..n).map(|_| r.from_bigint(&BigInt::from(rng.gen::<u64>()))).collect();
        let mut w: Vec<R::Elem> = (0..n).map(|_| r.from_bigint(&BigInt::from(rng.gen::<u64>()))).collect();
        let mut terms = Vec::with_capacity(2 * n);
        for k in 0..2 * n {
            if k > 0 {
                w = matrix::mat_vec(r, a, &w);
            }
            terms.push(crate::ring::dot(r, &u, &w));
        }
        let seq = RecurrentSequence { terms, bound: n };
        let p = match berlekamp_massey(r, &seq) {
            Ok(p) => p,
            Err(Error::ZeroSequence) => continue,
            Err(e) => return Err(e),
        };
        if !generates(r, &p, &seq.terms) {
            return Err(Error::Inconsistent);
        }
        let deg = p.len() - 1;
        if best.as_ref().map_or(true, |b| deg > b.len() - 1) {
            best = Some(p);
        }
        if deg >= goal {
            break;
        }
    }
    let best_deg = best.as_ref().map_or(0, |b| b.len() - 1);
    match (best, target) {
        (Some(p), None) => Ok(p),
        (Some(p), Some(t)) if best_deg >= t => Ok(p),
        (None, None) => Err(Error::ZeroSequence),
        _ => Err(Error::RetriesExhausted { best: best_deg, target: goal }),
    }
}
