use super::{check_square, CharPoly};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::poly;
use crate::ring::{Ring, SeriesRing};
use num_bigint::BigInt;
use num_integer::binomial;

/// Division-elimination center: a matrix C and vector V whose Krylov
/// sequence e_1^T C^k V has a normal remainder sequence with unit leading
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaltofenCenter<E> {
    pub matrix: DenseMatrix<E>,
    pub vector: Vec<E>,
}

fn binom(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// V_i = C(i-1, floor((i-1)/2)); C has ones on the superdiagonal and last row
/// C[n,i] = (-1)^floor((n-i)/2) C(floor((n+i-1)/2), i-1).
pub fn kaltofen_center<R: Ring>(r: &R, n: usize) -> KaltofenCenter<R::Elem> {
    let vector = (0..n).map(|i| r.from_bigint(&binom(i, i / 2))).collect();
    let matrix = DenseMatrix::from_fn(n, n, |i, j| {
        if i + 1 == n {
            // 1-based (n, j+1)
            let jj = j + 1;
            let b = binom((n + jj - 1) / 2, jj - 1);
            let v = if ((n - jj) / 2) % 2 == 1 { -b } else { b };
            r.from_bigint(&v)
        } else if j == i + 1 {
            r.one()
        } else {
            r.zero()
        }
    });
    KaltofenCenter { matrix, vector }
}

fn unit_failure(e: Error) -> Error {
    Error::ExactDivisionFailed(format!("kaltofen: leading coefficient not a unit ({e})"))
}

/// Kaltofen-Wiedemann over truncated series: the sequence (B^k V)_1 with
/// B = C + z(A - C), its generator by extended Euclid with unit leading
/// coefficients, then z = 1.
pub fn charpoly_kaltofen<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(CharPoly { coeffs: vec![r.one()] });
    }
    let s = SeriesRing::new(r.clone(), n);
    let center = kaltofen_center(r, n);
    let b = DenseMatrix::from_fn(n, n, |i, j| {
        let c = center.matrix.get(i, j);
        s.linear(c.clone(), r.sub(a.get(i, j), c))
    });
    let mut v: Vec<Vec<R::Elem>> = center.vector.iter().map(|x| s.constant(x.clone())).collect();
    let mut seq = Vec::with_capacity(2 * n);
    seq.push(v[0].clone());
    for _ in 1..2 * n {
        v = (0..n)
            .map(|i| {
                let mut acc = s.zero();
                for (bij, vj) in b.row(i).iter().zip(&v) {
                    if !s.is_zero(bij) && !s.is_zero(vj) {
                        acc = s.add(&acc, &s.mul(bij, vj));
                    }
                }
                acc
            })
            .collect();
        seq.push(v[0].clone());
    }

    // R1 = Σ_k r_{2n-1-k} X^k
    let mut r1: Vec<Vec<R::Elem>> = seq.iter().rev().cloned().collect();
    poly::normalize(&s, &mut r1);
    let x2n = poly::monomial(&s, s.one(), 2 * n);
    let (q, mut r2) = poly::divrem(&s, &x2n, &r1).map_err(unit_failure)?;
    let mut v1: Vec<Vec<R::Elem>> = vec![s.one()];
    let mut v2 = poly::neg(&s, &q);
    let mut ill = s.one();
    for _ in 2..=n {
        let lc = r2.last().cloned().ok_or_else(|| unit_failure(Error::ZeroDivisor))?;
        let ilc = s.inv(&lc).map_err(unit_failure)?;
        r2 = poly::scale(&s, &ilc, &r2);
        let (q, r3) = poly::divrem(&s, &r1, &r2).map_err(unit_failure)?;
        let left = poly::scale(&s, &ill, &v1);
        let right = poly::mul_auto(&s, &poly::scale(&s, &ilc, &v2), &q);
        let v3 = poly::sub(&s, &left, &right);
        ill = ilc;
        v1 = std::mem::replace(&mut v2, v3);
        r1 = std::mem::replace(&mut r2, r3);
    }
    let lc = v2.last().cloned().ok_or_else(|| unit_failure(Error::ZeroDivisor))?;
    let ilc = s.inv(&lc).map_err(unit_failure)?;
    let monic = poly::scale(&s, &ilc, &v2);
    // z = 1
    let at_one: Vec<R::Elem> = monic.iter().map(|c| crate::ring::sum(r, c)).collect();
    if at_one.len() != n + 1 {
        return Err(unit_failure(Error::DegreeTooHigh { degree: at_one.len().saturating_sub(1), bound: n }));
    }
    Ok(CharPoly::from_monic_ascending(r, &at_one))
}
