//! Univariate polynomials and truncated power series over a [`Ring`].
//!
//! Polynomials are plain coefficient vectors in ascending order with no
//! trailing zeros; the zero polynomial is the empty vector.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Multiplication algorithm for [`mul`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MulStrategy {
    Schoolbook,
    Karatsuba,
    Dft,
    Auto,
}

/// Degree at which `Auto` switches from schoolbook to Karatsuba.
pub const KARATSUBA_THRESHOLD: usize = 16;
/// Degree at which `Auto` uses the DFT when the ring has the roots.
pub const DFT_THRESHOLD: usize = 128;

/// Strip trailing zeros in place.
pub fn normalize<R: Ring>(r: &R, p: &mut Vec<R::Elem>) {
    while p.last().is_some_and(|c| r.is_zero(c)) {
        p.pop();
    }
}

pub fn normalized<R: Ring>(r: &R, mut p: Vec<R::Elem>) -> Vec<R::Elem> {
    normalize(r, &mut p);
    p
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn monomial<R: Ring>(r: &R, c: R::Elem, k: usize) -> Vec<R::Elem> {
    if r.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![r.zero(); k];
    v.push(c);
    v
}

/// Polynomial from integer coefficients, ascending.
pub fn from_i64s<R: Ring>(r: &R, cs: &[i64]) -> Vec<R::Elem> {
    normalized(r, cs.iter().map(|&c| r.from_i64(c)).collect())
}

pub fn add<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => r.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    normalized(r, out)
}

pub fn sub<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => r.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => r.neg(y),
            (None, None) => unreachable!(),
        });
    }
    normalized(r, out)
}

pub fn neg<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|c| r.neg(c)).collect()
}

pub fn scale<R: Ring>(r: &R, c: &R::Elem, a: &[R::Elem]) -> Vec<R::Elem> {
    if r.is_zero(c) {
        return Vec::new();
    }
    normalized(r, a.iter().map(|x| r.mul(c, x)).collect())
}

/// Product with the chosen strategy. All strategies give the same result.
pub fn mul<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem], strategy: MulStrategy) -> Result<Vec<R::Elem>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    match strategy {
        MulStrategy::Schoolbook => Ok(mul_schoolbook(r, a, b)),
        MulStrategy::Karatsuba => Ok(mul_karatsuba(r, a, b)),
        MulStrategy::Dft => mul_dft(r, a, b),
        MulStrategy::Auto => Ok(mul_auto(r, a, b)),
    }
}

/// `Auto` strategy; never fails.
pub fn mul_auto<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let d = a.len().min(b.len()) - 1;
    if d >= DFT_THRESHOLD {
        if let Ok(p) = mul_dft(r, a, b) {
            return p;
        }
    }
    if d >= KARATSUBA_THRESHOLD {
        mul_karatsuba(r, a, b)
    } else {
        mul_schoolbook(r, a, b)
    }
}

/// Quadratic product; terms with a zero factor are skipped.
pub fn mul_schoolbook<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<Option<R::Elem>> = vec![None; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if r.is_zero(y) {
                continue;
            }
            let p = r.mul(x, y);
            let slot = &mut out[i + j];
            *slot = Some(match slot.take() {
                None => p,
                Some(s) => r.add(&s, &p),
            });
        }
    }
    normalized(r, out.into_iter().map(|c| c.unwrap_or_else(|| r.zero())).collect())
}

/// Karatsuba product. Inputs are padded to a common length; odd lengths
/// split as ceil/floor with the high half zero-padded.
pub fn mul_karatsuba<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len().max(b.len());
    let pad = |p: &[R::Elem]| {
        let mut v = p.to_vec();
        v.resize(n, r.zero());
        v
    };
    normalized(r, kara(r, &pad(a), &pad(b)))
}

/// Product of two length-n vectors, returned with exactly 2n-1 entries.
fn kara<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len();
    if n == 1 {
        return vec![r.mul(&a[0], &b[0])];
    }
    let h = n.div_ceil(2);
    let split = |p: &[R::Elem]| {
        let lo = p[..h].to_vec();
        let mut hi = p[h..].to_vec();
        hi.resize(h, r.zero());
        (lo, hi)
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let sa: Vec<_> = a0.iter().zip(&a1).map(|(x, y)| r.add(x, y)).collect();
    let sb: Vec<_> = b0.iter().zip(&b1).map(|(x, y)| r.add(x, y)).collect();
    let low = kara(r, &a0, &b0);
    let high = kara(r, &a1, &b1);
    let mid = kara(r, &sa, &sb);
    let mid: Vec<_> = mid.iter().zip(&low).zip(&high).map(|((m, l), h)| r.sub(&r.sub(m, l), h)).collect();

    let mut out: Vec<Option<R::Elem>> = vec![None; 4 * h - 1];
    for (shift, part) in [(0, &low), (h, &mid), (2 * h, &high)] {
        for (i, c) in part.iter().enumerate() {
            let slot = &mut out[shift + i];
            *slot = Some(match slot.take() {
                None => c.clone(),
                Some(s) => r.add(&s, c),
            });
        }
    }
    out.truncate(2 * n - 1);
    out.into_iter().map(|c| c.unwrap_or_else(|| r.zero())).collect()
}

/// Product through a radix-2 discrete Fourier transform.
///
/// Needs a principal root of unity of order 2^k >= deg a + deg b + 1 and
/// an invertible 2.
pub fn mul_dft<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let len = a.len() + b.len() - 1;
    let size = len.next_power_of_two();
    let xi = r
        .root_of_unity(size as u64)
        .ok_or_else(|| Error::DftUnavailable(format!("no principal root of order {size}")))?;
    if !r.spec().divides_integers_up_to(size as u64) {
        return Err(Error::DftUnavailable(format!("{size} is not invertible")));
    }
    let mut fa = a.to_vec();
    fa.resize(size, r.zero());
    let mut fb = b.to_vec();
    fb.resize(size, r.zero());
    dft_in_place(r, &mut fa, &xi);
    dft_in_place(r, &mut fb, &xi);
    let mut prod: Vec<_> = fa.iter().zip(&fb).map(|(x, y)| r.mul(x, y)).collect();
    let xi_inv = crate::ring::pow(r, &xi, size as u64 - 1);
    dft_in_place(r, &mut prod, &xi_inv);
    prod.truncate(len);
    let out = prod.iter().map(|c| r.div_by_integer(c, size as u64)).collect::<Result<Vec<_>>>()?;
    Ok(normalized(r, out))
}

/// Evaluate at xi^0 .. xi^(n-1) in place (iterative Cooley-Tukey).
pub fn dft_in_place<R: Ring>(r: &R, v: &mut [R::Elem], xi: &R::Elem) {
    let n = v.len();
    debug_assert!(n.is_power_of_two());
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            v.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let w_len = crate::ring::pow(r, xi, (n / len) as u64);
        let mut ws = Vec::with_capacity(len / 2);
        let mut w = r.one();
        for _ in 0..len / 2 {
            ws.push(w.clone());
            w = r.mul(&w, &w_len);
        }
        for start in (0..n).step_by(len) {
            for k in 0..len / 2 {
                let u = v[start + k].clone();
                let t = r.mul(&v[start + k + len / 2], &ws[k]);
                v[start + k] = r.add(&u, &t);
                v[start + k + len / 2] = r.sub(&u, &t);
            }
        }
        len <<= 1;
    }
}

/// Euclidean division by a divisor whose leading coefficient divides
/// every leading coefficient met (always true over a field or for a unit
/// leading coefficient).
pub fn divrem<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<(Vec<R::Elem>, Vec<R::Elem>)> {
    let db = degree(b).ok_or(Error::ZeroDivisor)?;
    let lb = &b[db];
    let mut rem = normalized(r, a.to_vec());
    if rem.len() <= db {
        return Ok((Vec::new(), rem));
    }
    let mut q = vec![r.zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = if r.is_one(lb) {
            rem[dr].clone()
        } else if r.is_one(&r.neg(lb)) {
            r.neg(&rem[dr])
        } else {
            r.exact_div(&rem[dr], lb)?
        };
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db) {
            if !r.is_zero(bc) {
                rem[shift + i] = r.sub(&rem[shift + i], &r.mul(&c, bc));
            }
        }
        rem.pop();
        normalize(r, &mut rem);
        q[shift] = c;
    }
    Ok((normalized(r, q), rem))
}

/// Horner evaluation.
pub fn eval<R: Ring>(r: &R, p: &[R::Elem], x: &R::Elem) -> R::Elem {
    let mut it = p.iter().rev();
    let Some(first) = it.next() else { return r.zero() };
    it.fold(first.clone(), |acc, c| r.add(&r.mul(&acc, x), c))
}

/// Formal derivative.
pub fn derivative<R: Ring>(r: &R, p: &[R::Elem]) -> Vec<R::Elem> {
    normalized(r, p.iter().enumerate().skip(1).map(|(i, c)| r.mul(&r.from_i64(i as i64), c)).collect())
}

/// X^n * P(1/X).
pub fn reciprocal<R: Ring>(r: &R, p: &[R::Elem], n: usize) -> Result<Vec<R::Elem>> {
    if let Some(d) = degree(p) {
        if d > n {
            return Err(Error::DegreeTooHigh { degree: d, bound: n });
        }
    }
    let mut v = p.to_vec();
    v.resize(n + 1, r.zero());
    v.reverse();
    Ok(normalized(r, v))
}

/// Make monic by dividing through the leading coefficient.
pub fn make_monic<R: Ring>(r: &R, p: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let Some(d) = degree(p) else { return Ok(Vec::new()) };
    if r.is_one(&p[d]) {
        return Ok(p.to_vec());
    }
    let u = r.inv(&p[d])?;
    Ok(scale(r, &u, p))
}

/// Truncated power series: exactly `order + 1` coefficients of z^0..z^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTrunc<E> {
    pub order: usize,
    pub coeffs: Vec<E>,
}

impl<E: Clone> SeriesTrunc<E> {
    /// Truncate or zero-pad a polynomial to the given order.
    pub fn from_poly<R: Ring<Elem = E>>(r: &R, p: &[E], order: usize) -> Self {
        let mut coeffs: Vec<E> = p.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, r.zero());
        SeriesTrunc { order, coeffs }
    }

    pub fn to_poly<R: Ring<Elem = E>>(&self, r: &R) -> Vec<E> {
        normalized(r, self.coeffs.clone())
    }
}

/// Product of two coefficient lists truncated to `order`; zero terms skipped.
pub fn mul_trunc<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem], order: usize) -> Vec<R::Elem> {
    let mut out: Vec<Option<R::Elem>> = vec![None; order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if r.is_zero(y) {
                continue;
            }
            let p = r.mul(x, y);
            let slot = &mut out[i + j];
            *slot = Some(match slot.take() {
                None => p,
                Some(s) => r.add(&s, &p),
            });
        }
    }
    out.into_iter().map(|c| c.unwrap_or_else(|| r.zero())).collect()
}

/// Inverse of a series with unit constant term.
///
/// Writing P = p0 (1 - w) with w(0) = 0, the inverse is
/// p0^-1 (1 + w)(1 + w^2)(1 + w^4)... truncated at the series order.
pub fn series_inverse<R: Ring>(r: &R, p: &SeriesTrunc<R::Elem>) -> Result<SeriesTrunc<R::Elem>> {
    let order = p.order;
    Ok(SeriesTrunc { order, coeffs: series_inverse_coeffs(r, &p.coeffs, order)? })
}

pub(crate) fn series_inverse_coeffs<R: Ring>(r: &R, p: &[R::Elem], order: usize) -> Result<Vec<R::Elem>> {
    let p0 = p.first().cloned().unwrap_or_else(|| r.zero());
    let u = r.inv(&p0).map_err(|_| Error::NonUnitConstantTerm)?;
    let mut w: Vec<R::Elem> = vec![r.zero(); order + 1];
    for (i, c) in p.iter().enumerate().take(order + 1).skip(1) {
        if !r.is_zero(c) {
            w[i] = r.neg(&if r.is_one(&u) { c.clone() } else { r.mul(&u, c) });
        }
    }
    let mut result: Vec<R::Elem> = vec![r.zero(); order + 1];
    result[0] = r.one();
    let mut power = 1usize;
    while power <= order && w.iter().any(|c| !r.is_zero(c)) {
        let mut factor = w.clone();
        factor[0] = r.one();
        result = mul_trunc(r, &result, &factor, order);
        power *= 2;
        if power <= order {
            w = mul_trunc(r, &w, &w, order);
        }
    }
    if !r.is_one(&u) {
        result = result.iter().map(|c| if r.is_zero(c) { c.clone() } else { r.mul(&u, c) }).collect();
    }
    Ok(result)
}

/// Toeplitz matrix (given by first column and first row) times a vector,
/// through one polynomial product.
pub fn toeplitz_apply<R: Ring>(
    r: &R,
    first_col: &[R::Elem],
    first_row: &[R::Elem],
    v: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    let (m, k) = (first_col.len(), first_row.len());
    if m == 0 || k == 0 {
        return Err(Error::DimensionMismatch("empty Toeplitz matrix".into()));
    }
    if first_col[0] != first_row[0] {
        return Err(Error::DimensionMismatch("first column and first row disagree at (1,1)".into()));
    }
    if v.len() != k {
        return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), k)));
    }
    // t[s] holds the diagonal value for i - j = s - (k - 1).
    let mut t: Vec<R::Elem> = first_row[1..].iter().rev().cloned().collect();
    t.extend(first_col.iter().cloned());
    let prod = mul_auto(r, &t, v);
    Ok((0..m).map(|i| prod.get(i + k - 1).cloned().unwrap_or_else(|| r.zero())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{with_counting, Counted, Integers, Zmod};
    use num_bigint::BigInt;

    fn z(cs: &[i64]) -> Vec<BigInt> {
        from_i64s(&Integers, cs)
    }

    #[test]
    fn difference_of_squares() {
        for s in [MulStrategy::Schoolbook, MulStrategy::Karatsuba, MulStrategy::Auto] {
            assert_eq!(mul(&Integers, &z(&[1, 1]), &z(&[1, -1]), s).unwrap(), z(&[1, 0, -1]));
        }
        let f = Zmod::new(998244353);
        let p = from_i64s(&f, &[1, 1]);
        let q = from_i64s(&f, &[1, -1]);
        assert_eq!(mul(&f, &p, &q, MulStrategy::Dft).unwrap(), from_i64s(&f, &[1, 0, -1]));
    }

    #[test]
    fn dft_unavailable_over_integers() {
        assert!(matches!(mul(&Integers, &z(&[1, 1]), &z(&[1, 1]), MulStrategy::Dft), Err(Error::DftUnavailable(_))));
        let f = Zmod::new(7);
        let p = from_i64s(&f, &[1, 1, 1, 1, 1]);
        assert!(matches!(mul(&f, &p, &p, MulStrategy::Dft), Err(Error::DftUnavailable(_))));
    }

    #[test]
    fn karatsuba_degree_three_counts() {
        let r = Counted::new(Zmod::new(10007));
        let a = from_i64s(&r, &[3, 5, 7, 11]);
        let b = from_i64s(&r, &[13, 17, 19, 23]);
        let (p, s) = with_counting(|| mul(&r, &a, &b, MulStrategy::Karatsuba).unwrap());
        assert_eq!(s.muls, 9);
        assert_eq!(s.total(), 33);
        assert_eq!(p, mul_schoolbook(&r.inner, &a, &b));
    }

    #[test]
    fn series_inverse_examples() {
        let r = Integers;
        let inv = series_inverse(&r, &SeriesTrunc::from_poly(&r, &z(&[1, -1]), 2)).unwrap();
        assert_eq!(inv.coeffs, z(&[1, 1, 1]));
        let inv = series_inverse(&r, &SeriesTrunc::from_poly(&r, &z(&[1, 1]), 3)).unwrap();
        assert_eq!(inv.coeffs, z(&[1, -1, 1, -1]));
        let inv = series_inverse(&r, &SeriesTrunc::from_poly(&r, &z(&[1]), 5)).unwrap();
        assert_eq!(inv.to_poly(&r), z(&[1]));
        assert_eq!(
            series_inverse(&r, &SeriesTrunc::from_poly(&r, &z(&[2, 1]), 3)),
            Err(Error::NonUnitConstantTerm)
        );
    }

    #[test]
    fn reciprocal_examples() {
        let r = Integers;
        assert_eq!(reciprocal(&r, &z(&[1, 2]), 1).unwrap(), z(&[2, 1]));
        assert_eq!(reciprocal(&r, &z(&[0, 0, 1]), 2).unwrap(), z(&[1]));
        assert!(matches!(reciprocal(&r, &z(&[0, 0, 1]), 1), Err(Error::DegreeTooHigh { .. })));
    }

    #[test]
    fn toeplitz_identity_and_lower_triangular() {
        let r = Integers;
        let v = z(&[4, 5, 6]);
        let e1: Vec<BigInt> = [1, 0, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(toeplitz_apply(&r, &e1, &e1, &v).unwrap(), v);
        let a = z(&[2, 3, 5]);
        let b = z(&[7, 11, 13]);
        let lower = toeplitz_apply(&r, &a, &[a[0].clone(), 0.into(), 0.into()], &b).unwrap();
        let mut full = mul_schoolbook(&r, &a, &b);
        full.truncate(3);
        assert_eq!(lower, full);
    }

    #[test]
    fn division_with_remainder() {
        let r = Integers;
        let (q, rem) = divrem(&r, &z(&[-1, 0, 1]), &z(&[-1, 1])).unwrap();
        assert_eq!(q, z(&[1, 1]));
        assert!(rem.is_empty());
    }
}
