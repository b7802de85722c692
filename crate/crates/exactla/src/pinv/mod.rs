//! Gram coefficients and rank-r Moore-Penrose inverses.
//!
//! Plain mode uses the transpose as the star operator and is meaningful over
//! formally real fields such as Q. Generalized mode works over K(t) with
//! A° = (t^{j-i} a_{j,i}), which keeps the rank conditions valid over any
//! field. Specialized mode substitutes a caller-supplied nonzero τ for t.

use crate::charpoly::charpoly_berkowitz;
use crate::error::{Error, Result};
use crate::matrix::{self, DenseMatrix};
use crate::poly;
use crate::ring::{signed, Frac, FracElem, GcdDomain, PolyRing, Ring};

/// Rational functions in t over K.
pub type RatFun<K> = Frac<PolyRing<K>>;
pub type RatFunElem<E> = FracElem<Vec<E>>;

pub fn rational_functions<K: GcdDomain>(k: &K) -> RatFun<K> {
    Frac::new(PolyRing::new(k.clone(), "t"))
}

pub fn embed_matrix<K: GcdDomain>(f: &RatFun<K>, a: &DenseMatrix<K::Elem>) -> DenseMatrix<RatFunElem<K::Elem>> {
    a.map(|x| f.embed(f.base.constant(x.clone())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramMode<E> {
    Plain,
    Generalized,
    Specialized(E),
}

/// a_0 = 1, a_1, ..., a_p with p = min(m, n). Entry k holds the ascending
/// t-polynomial Σ_l a_{k,l} t^l and a_k(t) = t^{-shifts[k]} times it.
/// Plain and specialized modes store constants with zero shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramSpectrum<E> {
    pub mode: GramMode<E>,
    pub coeffs: Vec<Vec<E>>,
    pub shifts: Vec<usize>,
}

impl<E: Clone> GramSpectrum<E> {
    /// a_k for plain and specialized spectra (zero when k > p).
    pub fn constant<K: Ring<Elem = E>>(&self, k: &K, idx: usize) -> E {
        match self.coeffs.get(idx).and_then(|c| c.first()) {
            Some(c) if self.coeffs[idx].len() == 1 => c.clone(),
            Some(_) => panic!("a_{idx} is not a constant"),
            None => k.zero(),
        }
    }

    pub fn is_zero(&self, idx: usize) -> bool {
        self.coeffs.get(idx).map_or(true, |c| c.is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PinvMatrix<E> {
    Field(DenseMatrix<E>),
    RationalFunctions(DenseMatrix<RatFunElem<E>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinvResult<E> {
    pub matrix: PinvMatrix<E>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution<E> {
    Field(Vec<E>),
    RationalFunctions(Vec<RatFunElem<E>>),
}

impl<E: Clone> Solution<E> {
    /// Entries as constants of K, when none of them involves t.
    pub fn constants<K: Ring<Elem = E>>(&self, k: &K) -> Option<Vec<E>> {
        match self {
            Solution::Field(v) => Some(v.clone()),
            Solution::RationalFunctions(v) => v
                .iter()
                .map(|x| match (x.num.as_slice(), x.den.as_slice()) {
                    ([], _) => Some(k.zero()),
                    ([c], [d]) => k.exact_div(c, d).ok(),
                    _ => None,
                })
                .collect(),
        }
    }
}

fn t_pow<K: GcdDomain>(f: &RatFun<K>, e: i64) -> RatFunElem<K::Elem> {
    let k = &f.base.base;
    let m = poly::monomial(k, k.one(), e.unsigned_abs() as usize);
    if e >= 0 {
        f.embed(m)
    } else {
        f.make(f.base.one(), m)
    }
}

/// A° = (t^{j-i} a_{j,i}), an n×m matrix for an m×n A over K(t).
pub fn star_operator<K: GcdDomain>(
    f: &RatFun<K>,
    a: &DenseMatrix<RatFunElem<K::Elem>>,
) -> DenseMatrix<RatFunElem<K::Elem>> {
    DenseMatrix::from_fn(a.cols(), a.rows(), |i, j| {
        let x = a.get(j, i);
        if f.is_zero(x) || i == j {
            x.clone()
        } else {
            f.mul(&t_pow(f, j as i64 - i as i64), x)
        }
    })
}

/// Star with t = τ: (τ^{j-i} a_{j,i}) over K.
fn star_specialized<K: Ring>(k: &K, a: &DenseMatrix<K::Elem>, tau: &K::Elem) -> Result<DenseMatrix<K::Elem>> {
    let inv = k.inv(tau)?;
    let pow = |e: i64| {
        let base = if e >= 0 { tau } else { &inv };
        crate::ring::pow(k, base, e.unsigned_abs())
    };
    Ok(DenseMatrix::from_fn(a.cols(), a.rows(), |i, j| {
        let x = a.get(j, i);
        if k.is_zero(x) || i == j {
            x.clone()
        } else {
            k.mul(&pow(j as i64 - i as i64), x)
        }
    }))
}

/// a_0..a_p from the characteristic polynomial of the smaller of A·A* and
/// A*·A: det(I + Z·M) = Σ_k (-1)^{d-k} c_{d-k} Z^k with c ascending.
fn gram_values<F: Ring>(f: &F, a: &DenseMatrix<F::Elem>, star: &DenseMatrix<F::Elem>) -> Result<Vec<F::Elem>> {
    let m = if a.rows() <= a.cols() { matrix::mul(f, a, star) } else { matrix::mul(f, star, a) };
    let d = m.rows();
    let cp = charpoly_berkowitz(f, &m, false)?;
    Ok(cp.coeffs.iter().enumerate().map(|(k, c)| signed(f, c, (d - k) % 2 == 1)).collect())
}

/// Coefficients of det(I_m + Z·A·A*) in the requested mode.
pub fn gram_coefficients<K: GcdDomain>(
    k: &K,
    a: &DenseMatrix<K::Elem>,
    mode: &GramMode<K::Elem>,
) -> Result<GramSpectrum<K::Elem>> {
    let constants = |vals: Vec<K::Elem>| {
        let shifts = vec![0; vals.len()];
        let coeffs = vals.into_iter().map(|v| poly::normalized(k, vec![v])).collect();
        GramSpectrum { mode: mode.clone(), coeffs, shifts }
    };
    match mode {
        GramMode::Plain => Ok(constants(gram_values(k, a, &a.transpose())?)),
        GramMode::Specialized(tau) => Ok(constants(gram_values(k, a, &star_specialized(k, a, tau)?)?)),
        GramMode::Generalized => {
            let f = rational_functions(k);
            let at = embed_matrix(&f, a);
            let vals = gram_values(&f, &at, &star_operator(&f, &at))?;
            let n = a.cols();
            let mut coeffs = Vec::with_capacity(vals.len());
            let mut shifts = Vec::with_capacity(vals.len());
            for (idx, v) in vals.iter().enumerate() {
                let s = idx * n.saturating_sub(idx);
                let num = f.base.mul(&v.num, &poly::monomial(k, k.one(), s));
                let p = f.base.exact_div(&num, &v.den).map_err(|e| {
                    Error::ExactDivisionFailed(format!("gram coefficient a_{idx} is not a Laurent polynomial: {e}"))
                })?;
                coeffs.push(p);
                shifts.push(s);
            }
            Ok(GramSpectrum { mode: mode.clone(), coeffs, shifts })
        }
    }
}

/// Largest r with a_r not identically zero.
pub fn rank_from_gram<E: Clone>(g: &GramSpectrum<E>) -> usize {
    (0..g.coeffs.len()).rev().find(|&k| !g.is_zero(k)).unwrap_or(0)
}

/// a_r^{-1} (a_{r-1} I_n - a_{r-2} S + ... + (-1)^{r-1} S^{r-1}) A* with
/// S = A*·A, by Horner in S.
fn pinv_formula<F: Ring>(
    f: &F,
    a: &DenseMatrix<F::Elem>,
    star: &DenseMatrix<F::Elem>,
    r: usize,
    gram: &[F::Elem],
) -> Result<DenseMatrix<F::Elem>> {
    let (m, n) = (a.rows(), a.cols());
    if r == 0 {
        return Ok(DenseMatrix::zeros(f, n, m));
    }
    let ar = gram.get(r).filter(|x| !f.is_zero(x)).ok_or(Error::GramCoefficientZero(r))?;
    let ar_inv = f.inv(ar).map_err(|_| Error::GramCoefficientZero(r))?;
    let s = matrix::mul(f, star, a);
    let scalar = |c: F::Elem| matrix::sub_scalar_identity(f, &DenseMatrix::zeros(f, n, n), &f.neg(&c));
    let mut acc = scalar(signed(f, &gram[0], (r - 1) % 2 == 1));
    for j in (0..r - 1).rev() {
        let c = signed(f, &gram[r - 1 - j], j % 2 == 1);
        acc = matrix::add(f, &matrix::mul(f, &acc, &s), &scalar(c));
    }
    Ok(matrix::scale(f, &ar_inv, &matrix::mul(f, &acc, star)))
}

fn check_rank(r: usize, a: &DenseMatrix<impl Clone>) -> Result<()> {
    if r > a.rows().min(a.cols()) {
        return Err(Error::GramCoefficientZero(r));
    }
    Ok(())
}

/// Moore-Penrose inverse of A in rank r.
pub fn pinv_rank_r<K: GcdDomain>(
    k: &K,
    a: &DenseMatrix<K::Elem>,
    r: usize,
    mode: &GramMode<K::Elem>,
) -> Result<PinvResult<K::Elem>> {
    check_rank(r, a)?;
    let matrix = match mode {
        GramMode::Plain => {
            let star = a.transpose();
            let g = gram_values(k, a, &star)?;
            PinvMatrix::Field(pinv_formula(k, a, &star, r, &g)?)
        }
        GramMode::Specialized(tau) => {
            let star = star_specialized(k, a, tau)?;
            let g = gram_values(k, a, &star)?;
            PinvMatrix::Field(pinv_formula(k, a, &star, r, &g)?)
        }
        GramMode::Generalized => {
            let f = rational_functions(k);
            let at = embed_matrix(&f, a);
            let star = star_operator(&f, &at);
            let g = gram_values(&f, &at, &star)?;
            PinvMatrix::RationalFunctions(pinv_formula(&f, &at, &star, r, &g)?)
        }
    };
    Ok(PinvResult { matrix, rank: r })
}

/// X = A^{[-1]r}·V when A·X = V, otherwise `Inconsistent`.
pub fn solve_uniform<K: GcdDomain>(
    k: &K,
    a: &DenseMatrix<K::Elem>,
    v: &[K::Elem],
    r: usize,
    mode: &GramMode<K::Elem>,
) -> Result<Solution<K::Elem>> {
    if v.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("right-hand side has {} entries, expected {}", v.len(), a.rows())));
    }
    match pinv_rank_r(k, a, r, mode)?.matrix {
        PinvMatrix::Field(x) => {
            let sol = matrix::mat_vec(k, &x, v);
            if matrix::mat_vec(k, a, &sol) != v {
                return Err(Error::Inconsistent);
            }
            Ok(Solution::Field(sol))
        }
        PinvMatrix::RationalFunctions(x) => {
            let f = rational_functions(k);
            let at = embed_matrix(&f, a);
            let vt: Vec<_> = v.iter().map(|c| f.embed(f.base.constant(c.clone()))).collect();
            let sol = matrix::mat_vec(&f, &x, &vt);
            if matrix::mat_vec(&f, &at, &sol) != vt {
                return Err(Error::Inconsistent);
            }
            Ok(Solution::RationalFunctions(sol))
        }
    }
}

#[cfg(test)]
mod tests;
