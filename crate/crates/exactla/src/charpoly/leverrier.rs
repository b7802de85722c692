//! Le Verrier's method and its two refinements: Souriau-Faddeev-Frame and
//! Preparata-Sarwate.

use super::{charpoly_from_newton_coeffs, charpoly_from_sums, check_square, CharPoly};
use crate::error::Result;
use crate::matrix::{self, DenseMatrix};
use crate::ring::{dot, signed, Ring};

/// Power sums s_1..s_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonSums<E> {
    pub sums: Vec<E>,
}

impl<E: Clone> NewtonSums<E> {
    /// s_k = Tr(A^k): powers A^2..A^{n-1}, then only the diagonal of A^n.
    pub fn of_matrix<R: Ring<Elem = E>>(r: &R, a: &DenseMatrix<E>) -> Result<Self> {
        check_square(a)?;
        let n = a.rows();
        let mut sums = Vec::with_capacity(n);
        if n == 0 {
            return Ok(NewtonSums { sums });
        }
        let mut power = a.clone();
        sums.push(matrix::trace(r, &power));
        for _ in 2..n {
            power = matrix::mul(r, a, &power);
            sums.push(matrix::trace(r, &power));
        }
        if n >= 2 {
            let pt = power.transpose();
            let diag: Vec<E> = (0..n).map(|i| dot(r, a.row(i), pt.row(i))).collect();
            sums.push(crate::ring::sum(r, &diag));
        }
        Ok(NewtonSums { sums })
    }
}

/// Le Verrier: traces of the powers of A, then Newton's relations.
pub fn charpoly_leverrier<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    let s = NewtonSums::of_matrix(r, a)?;
    charpoly_from_sums(r, &s.sums)
}

/// B_0..B_{n-1} and c_1..c_n with B_k = A B_{k-1} - c_k I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaddeevSequence<E> {
    pub b: Vec<DenseMatrix<E>>,
    pub c: Vec<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaddeevOutput<E> {
    pub charpoly: CharPoly<E>,
    pub sequence: FaddeevSequence<E>,
    pub adjoint: DenseMatrix<E>,
    /// A^{-1} = c_n^{-1} B_{n-1} when c_n is a unit.
    pub inverse: Option<DenseMatrix<E>>,
}

/// c_k = Tr(A B_{k-1}) / k. Stops early once some B_k vanishes, since
/// every later c is then zero.
pub fn faddeev_sequence<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<FaddeevSequence<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    let mut b = vec![DenseMatrix::identity(r, n)];
    let mut c = Vec::with_capacity(n);
    if n == 0 {
        return Ok(FaddeevSequence { b, c });
    }
    let mut vanished = false;
    for k in 1..n {
        if vanished {
            c.push(r.zero());
            b.push(DenseMatrix::zeros(r, n, n));
            continue;
        }
        let prod = if k == 1 { a.clone() } else { matrix::mul(r, &b[k - 1], a) };
        let ck = r.div_by_integer(&matrix::trace(r, &prod), k as u64)?;
        let bk = matrix::sub_scalar_identity(r, &prod, &ck);
        vanished = bk.is_zero(r);
        c.push(ck);
        b.push(bk);
    }
    let cn = if vanished {
        r.zero()
    } else {
        let last = &b[n - 1];
        let diag: Vec<R::Elem> = if n == 1 {
            vec![a.get(0, 0).clone()]
        } else {
            let at = a.transpose();
            (0..n).map(|i| dot(r, last.row(i), at.row(i))).collect()
        };
        r.div_by_integer(&crate::ring::sum(r, &diag), n as u64)?
    };
    c.push(cn);
    Ok(FaddeevSequence { b, c })
}

/// Souriau-Faddeev-Frame: characteristic polynomial, adjoint and inverse.
pub fn charpoly_faddeev<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<FaddeevOutput<R::Elem>> {
    let seq = faddeev_sequence(r, a)?;
    let n = a.rows();
    let charpoly = charpoly_from_newton_coeffs(r, &seq.c);
    let last = seq.b.last().expect("B_0 always present");
    let adjoint = if n == 0 { last.clone() } else { last.map(|x| signed(r, x, n % 2 == 0)) };
    let inverse = match seq.c.last() {
        Some(cn) => r.inv(cn).ok().map(|u| matrix::scale(r, &u, last)),
        None => Some(last.clone()),
    };
    Ok(FaddeevOutput { charpoly, sequence: seq, adjoint, inverse })
}

/// Cost figures of one Preparata-Sarwate run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PreparataSarwateStats {
    pub r: usize,
    pub matrix_products: usize,
    pub trace_products: usize,
}

/// Tr(B C) = Σ b_kl c_lk.
fn trace_product<R: Ring>(r: &R, b: &DenseMatrix<R::Elem>, c: &DenseMatrix<R::Elem>) -> R::Elem {
    let ct = c.transpose();
    dot(r, b.entries(), ct.entries())
}

fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// Baby steps B_i = A^i (i < r), giant steps C_j = A^{rj} (j < r),
/// S_{jr+i} = Tr(B_i C_j); only sums with index at most n are formed.
pub fn preparata_sarwate_detailed<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
) -> Result<(CharPoly<R::Elem>, PreparataSarwateStats)> {
    check_square(a)?;
    let n = a.rows();
    let rr = ceil_sqrt(n);
    let mut stats = PreparataSarwateStats { r: rr, ..Default::default() };
    if n <= 1 {
        let sums: Vec<R::Elem> = (0..n).map(|_| matrix::trace(r, a)).collect();
        return Ok((charpoly_from_sums(r, &sums)?, stats));
    }
    let mut s: Vec<Option<R::Elem>> = vec![None; n + 1];
    // b[i] = A^i for i = 1..r-1
    let mut b = vec![DenseMatrix::identity(r, n), a.clone()];
    s[1] = Some(matrix::trace(r, a));
    for i in 1..rr.saturating_sub(1) {
        let next = matrix::mul(r, a, &b[i]);
        stats.matrix_products += 1;
        s[i + 1] = Some(matrix::trace(r, &next));
        b.push(next);
    }
    // c[j] = A^{rj} for j = 1..r-1
    let mut c = vec![DenseMatrix::identity(r, n), matrix::mul(r, a, &b[rr - 1])];
    stats.matrix_products += 1;
    s[rr] = Some(matrix::trace(r, &c[1]));
    for j in 1..rr.saturating_sub(1) {
        let next = matrix::mul(r, &c[1], &c[j]);
        stats.matrix_products += 1;
        if (j + 1) * rr <= n {
            s[(j + 1) * rr] = Some(matrix::trace(r, &next));
        }
        c.push(next);
    }
    for i in 1..rr {
        for j in 1..rr {
            let m = j * rr + i;
            if m <= n {
                s[m] = Some(trace_product(r, &b[i], &c[j]));
                stats.trace_products += 1;
            }
        }
    }
    if n == rr * rr {
        s[n] = Some(trace_product(r, &c[1], &c[rr - 1]));
        stats.trace_products += 1;
    }
    let sums: Vec<R::Elem> = s.into_iter().skip(1).map(|x| x.expect("every power sum up to n is formed")).collect();
    Ok((charpoly_from_sums(r, &sums)?, stats))
}

pub fn charpoly_preparata_sarwate<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    preparata_sarwate_detailed(r, a).map(|(p, _)| p)
}
