//! Characteristic polynomial algorithms, adjoint and simple eigenvectors.
//!
//! Every algorithm returns P_A(X) = det(A - X·I) with leading coefficient
//! (-1)^n.

mod bareiss;
mod berkowitz;
mod chistov;
mod frobenius;
mod hessenberg;
mod kaltofen;
mod leverrier;

pub use bareiss::{charpoly_bareiss_modified, charpoly_interpolation};
pub use berkowitz::{berkowitz_columns, charpoly_berkowitz, ToeplitzColumn};
pub use chistov::{charpoly_chistov, chistov_with_stage_stats};
pub use frobenius::{charpoly_frobenius, frobenius_blocks, FrobeniusBlocks};
pub use hessenberg::{charpoly_hessenberg, hessenberg_form};
pub use kaltofen::{charpoly_kaltofen, kaltofen_center, KaltofenCenter};
pub use leverrier::{
    charpoly_faddeev, charpoly_leverrier, charpoly_preparata_sarwate, faddeev_sequence, preparata_sarwate_detailed,
    FaddeevOutput, FaddeevSequence, NewtonSums, PreparataSarwateStats,
};

use crate::error::{Error, Result};
use crate::matrix::{self, DenseMatrix};
use crate::ring::{signed, Ring, RingSpec};

/// Coefficients p_0..p_n of P_A(X) = p_0 X^n + p_1 X^{n-1} + ... + p_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> CharPoly<E> {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// From the monic det(X·I - A), given in ascending order with n+1 entries.
    pub fn from_monic_ascending<R: Ring<Elem = E>>(r: &R, monic: &[E]) -> Self {
        let n = monic.len() - 1;
        let odd = n % 2 == 1;
        CharPoly { coeffs: monic.iter().rev().map(|c| signed(r, c, odd)).collect() }
    }

    /// From det(A - X·I) in ascending order, padded to n+1 entries.
    pub fn from_ascending<R: Ring<Elem = E>>(r: &R, p: &[E], n: usize) -> Self {
        let mut v = p.to_vec();
        v.resize(n + 1, r.zero());
        v.reverse();
        CharPoly { coeffs: v }
    }

    /// Ascending coefficient list of P_A.
    pub fn ascending(&self) -> Vec<E> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficients of the monic det(X·I - A), ascending.
    pub fn monic_ascending<R: Ring<Elem = E>>(&self, r: &R) -> Vec<E> {
        let odd = self.order() % 2 == 1;
        self.coeffs.iter().rev().map(|c| signed(r, c, odd)).collect()
    }

    /// p_n = det(A).
    pub fn det(&self) -> &E {
        self.coeffs.last().expect("nonempty")
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> CharPoly<F> {
        CharPoly { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Space separated p_0 .. p_n.
    pub fn format<R: Ring<Elem = E>>(&self, r: &R) -> String {
        self.coeffs.iter().map(|c| r.format(c)).collect::<Vec<_>>().join(" ")
    }
}

/// The characteristic polynomial algorithms, for dispatch by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Berkowitz,
    BerkowitzSparse,
    Chistov,
    ChistovSparse,
    Faddeev,
    LeVerrier,
    PreparataSarwate,
    Hessenberg,
    BareissModified,
    Interpolation,
    Frobenius,
    Kaltofen,
}

/// What an algorithm needs from the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    AnyRing,
    /// Division by the integers 1..n.
    IntegerDivision,
    /// Division by the integers 0..n differences plus exact division in a domain.
    DomainWithIntegerDivision,
    /// Integral domain with exact division (fields included).
    Domain,
    Field,
}

impl Algorithm {
    pub const ALL: [Algorithm; 12] = [
        Algorithm::Berkowitz,
        Algorithm::BerkowitzSparse,
        Algorithm::Chistov,
        Algorithm::ChistovSparse,
        Algorithm::Faddeev,
        Algorithm::LeVerrier,
        Algorithm::PreparataSarwate,
        Algorithm::Hessenberg,
        Algorithm::BareissModified,
        Algorithm::Interpolation,
        Algorithm::Frobenius,
        Algorithm::Kaltofen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Berkowitz => "berkowitz",
            Algorithm::BerkowitzSparse => "berkowitz-sparse",
            Algorithm::Chistov => "chistov",
            Algorithm::ChistovSparse => "chistov-sparse",
            Algorithm::Faddeev => "faddeev",
            Algorithm::LeVerrier => "leverrier",
            Algorithm::PreparataSarwate => "preparata-sarwate",
            Algorithm::Hessenberg => "hessenberg",
            Algorithm::BareissModified => "bareiss-modified",
            Algorithm::Interpolation => "interpolation",
            Algorithm::Frobenius => "frobenius",
            Algorithm::Kaltofen => "kaltofen",
        }
    }

    pub fn from_name(s: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s)
    }

    pub fn requirement(self) -> Requirement {
        match self {
            Algorithm::Berkowitz
            | Algorithm::BerkowitzSparse
            | Algorithm::Chistov
            | Algorithm::ChistovSparse
            | Algorithm::BareissModified
            | Algorithm::Kaltofen => Requirement::AnyRing,
            Algorithm::Faddeev | Algorithm::LeVerrier | Algorithm::PreparataSarwate => Requirement::IntegerDivision,
            Algorithm::Interpolation => Requirement::DomainWithIntegerDivision,
            Algorithm::Frobenius => Requirement::Domain,
            Algorithm::Hessenberg => Requirement::Field,
        }
    }

    /// Whether the algorithm runs without division at all.
    pub fn is_division_free(self) -> bool {
        self.requirement() == Requirement::AnyRing
    }

    /// Whether the ring meets the algorithm's requirement for order n.
    pub fn applies_to(self, spec: &RingSpec, n: usize) -> bool {
        let n = n as u64;
        match self.requirement() {
            Requirement::AnyRing => true,
            Requirement::IntegerDivision => spec.divides_integers_up_to(n),
            Requirement::DomainWithIntegerDivision => {
                spec.is_integral_domain && spec.has_exact_division && spec.divides_integers_up_to(n)
            }
            Requirement::Domain => spec.is_integral_domain && spec.has_exact_division,
            Requirement::Field => spec.is_field,
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Run one algorithm by enum.
pub fn charpoly<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, alg: Algorithm) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    match alg {
        Algorithm::Berkowitz => charpoly_berkowitz(r, a, false),
        Algorithm::BerkowitzSparse => charpoly_berkowitz(r, a, true),
        Algorithm::Chistov => charpoly_chistov(r, a, false),
        Algorithm::ChistovSparse => charpoly_chistov(r, a, true),
        Algorithm::Faddeev => charpoly_faddeev(r, a).map(|o| o.charpoly),
        Algorithm::LeVerrier => charpoly_leverrier(r, a),
        Algorithm::PreparataSarwate => charpoly_preparata_sarwate(r, a),
        Algorithm::Hessenberg => charpoly_hessenberg(r, a),
        Algorithm::BareissModified => charpoly_bareiss_modified(r, a),
        Algorithm::Interpolation => charpoly_interpolation(r, a),
        Algorithm::Frobenius => charpoly_frobenius(r, a),
        Algorithm::Kaltofen => charpoly_kaltofen(r, a),
    }
}

pub(crate) fn check_square<E: Clone>(a: &DenseMatrix<E>) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{}x{} is not square", a.rows(), a.cols())))
    }
}

/// Direction of the Newton conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NewtonDirection {
    CoeffsToSums,
    SumsToCoeffs,
}

/// Newton relations for P = X^n - (a_1 X^{n-1} + ... + a_n):
/// s_k = s_{k-1} a_1 + ... + s_1 a_{k-1} + k a_k.
pub fn newton_convert<R: Ring>(r: &R, direction: NewtonDirection, data: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let n = data.len();
    let mut out: Vec<R::Elem> = Vec::with_capacity(n);
    for k in 1..=n {
        // Σ_{i=1}^{k-1} s_{k-i} a_i, with s and a taken from data/out by direction
        let terms: Vec<R::Elem> = (1..k)
            .map(|i| match direction {
                NewtonDirection::CoeffsToSums => r.mul(&out[k - i - 1], &data[i - 1]),
                NewtonDirection::SumsToCoeffs => r.mul(&data[k - i - 1], &out[i - 1]),
            })
            .collect();
        let acc = if terms.is_empty() { None } else { Some(crate::ring::sum(r, &terms)) };
        let v = match direction {
            NewtonDirection::CoeffsToSums => {
                let ka = r.mul(&r.from_i64(k as i64), &data[k - 1]);
                match acc {
                    None => ka,
                    Some(s) => r.add(&s, &ka),
                }
            }
            NewtonDirection::SumsToCoeffs => {
                let num = match acc {
                    None => data[k - 1].clone(),
                    Some(s) => r.sub(&data[k - 1], &s),
                };
                r.div_by_integer(&num, k as u64)?
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// Newton sums s_1..s_n to P_A.
pub(crate) fn charpoly_from_sums<R: Ring>(r: &R, sums: &[R::Elem]) -> Result<CharPoly<R::Elem>> {
    let a = newton_convert(r, NewtonDirection::SumsToCoeffs, sums)?;
    Ok(charpoly_from_newton_coeffs(r, &a))
}

/// P_A = (-1)^n (X^n - a_1 X^{n-1} - ... - a_n).
pub(crate) fn charpoly_from_newton_coeffs<R: Ring>(r: &R, a: &[R::Elem]) -> CharPoly<R::Elem> {
    let n = a.len();
    let odd = n % 2 == 1;
    let mut coeffs = vec![signed(r, &r.one(), odd)];
    coeffs.extend(a.iter().map(|c| signed(r, c, !odd)));
    CharPoly { coeffs }
}

/// The c_k of det(X·I - A) = X^n - (c_1 X^{n-1} + ... + c_n).
fn c_coefficients<R: Ring>(r: &R, p: &CharPoly<R::Elem>) -> Vec<R::Elem> {
    let odd = p.order() % 2 == 1;
    p.coeffs[1..].iter().map(|x| signed(r, x, !odd)).collect()
}

/// B_0 = I, B_k = A·B_{k-1} - c_k I for k < n.
fn adjoint_series<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, p: &CharPoly<R::Elem>) -> Vec<DenseMatrix<R::Elem>> {
    let n = a.rows();
    let c = c_coefficients(r, p);
    let mut bs = vec![DenseMatrix::identity(r, n)];
    for k in 1..n {
        let prod = matrix::mul(r, a, &bs[k - 1]);
        bs.push(matrix::sub_scalar_identity(r, &prod, &c[k - 1]));
    }
    bs
}

/// Adj(A) = (-1)^{n-1} B_{n-1}, by the Horner scheme B_k = A·B_{k-1} - c_k I.
pub fn adjoint_from_charpoly<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
    p: &CharPoly<R::Elem>,
) -> Result<DenseMatrix<R::Elem>> {
    check_square(a)?;
    if p.order() != a.rows() {
        return Err(Error::DimensionMismatch(format!("charpoly of order {} for {}x{}", p.order(), a.rows(), a.cols())));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(a.clone());
    }
    let b = adjoint_series(r, a, p).pop().expect("n >= 1");
    Ok(if n % 2 == 0 { matrix::neg(r, &b) } else { b })
}

/// A nonzero column of Q(λ) = Adj(λI - A) = Σ B_k λ^{n-1-k}, computed
/// column by column with v_0 = e_l, v_k = λ v_{k-1} + (column l of B_k).
pub fn eigenvector_simple<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, lambda: &R::Elem) -> Result<Vec<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    let p = charpoly_berkowitz(r, a, false)?;
    let bs = adjoint_series(r, a, &p);
    for l in 0..n {
        let mut v: Vec<R::Elem> = (0..n).map(|i| if i == l { r.one() } else { r.zero() }).collect();
        for b in &bs[1..] {
            v = v.iter().enumerate().map(|(i, x)| r.add(&r.mul(lambda, x), b.get(i, l))).collect();
        }
        if v.iter().any(|x| !r.is_zero(x)) {
            return Ok(v);
        }
    }
    Err(Error::AdjointVanishes)
}

#[cfg(test)]
mod tests;
