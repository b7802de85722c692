use super::{check_square, CharPoly};
use crate::elimination::{det_bareiss, det_gauss, jordan_bareiss};
use crate::error::{Error, Result};
use crate::matrix::{self, DenseMatrix};
use crate::poly;
use crate::ring::{signed, PolyRing, Ring};
use num_bigint::BigInt;
use num_integer::binomial;

/// Jordan-Bareiss on A - X·I over R[X]. Every leading principal minor is
/// a characteristic polynomial with leading coefficient ±1, so the exact
/// divisions never leave R[X]; the last diagonal entry is P_A.
pub fn charpoly_bareiss_modified<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(CharPoly { coeffs: vec![r.one()] });
    }
    let rx = PolyRing::new(r.clone(), "X");
    let minus_x = vec![r.zero(), r.neg(&r.one())];
    let m = DenseMatrix::from_fn(n, n, |i, j| {
        let c = rx.constant(a.get(i, j).clone());
        if i == j {
            rx.add(&c, &minus_x)
        } else {
            c
        }
    });
    let t = jordan_bareiss(&rx, &m)?;
    let p = t.entries.get(n - 1, n - 1);
    Ok(CharPoly::from_ascending(r, p, n))
}

/// Lagrange interpolation of P_A at the points 0..n:
/// n!·P_A = Σ_k (-1)^{n-k} C(n,k) det(A - k·I) Π_{j≠k} (X - j).
pub fn charpoly_interpolation<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    let spec = r.spec();
    if !spec.divides_integers_up_to(n as u64) {
        let bad = (2..=n as u64).find(|&k| r.div_by_integer(&r.one(), k).is_err()).unwrap_or(n as u64);
        return Err(Error::IntegerNotInvertible(bad));
    }
    let mut acc: Vec<R::Elem> = vec![r.zero(); n + 1];
    for k in 0..=n {
        let shifted = matrix::sub_scalar_identity(r, a, &r.from_i64(k as i64));
        let d = if spec.is_field { det_gauss(r, &shifted)? } else { det_bareiss(r, &shifted)? };
        if r.is_zero(&d) {
            continue;
        }
        // integer polynomial (-1)^{n-k} C(n,k) Π_{j≠k} (X - j)
        let mut basis: Vec<BigInt> = vec![BigInt::from(1)];
        for j in (0..=n).filter(|&j| j != k) {
            let mut next = vec![BigInt::from(0); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * BigInt::from(j);
            }
            basis = next;
        }
        let scale = BigInt::from(binomial(n as u64, k as u64));
        let negative = (n - k) % 2 == 1;
        for (i, b) in basis.iter().enumerate() {
            let coeff = r.from_bigint(&(b * &scale));
            let term = signed(r, &r.mul(&coeff, &d), negative);
            acc[i] = r.add(&acc[i], &term);
        }
    }
    let mut p = acc;
    for k in 2..=n as u64 {
        p = p.iter().map(|c| r.div_by_integer(c, k)).collect::<Result<Vec<_>>>()?;
    }
    Ok(CharPoly::from_ascending(r, &poly::normalized(r, p), n))
}
