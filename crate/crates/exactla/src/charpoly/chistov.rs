use super::{check_square, CharPoly};
use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::poly::series_inverse_coeffs;
use crate::ring::{dot, dot_sparse, signed, sum, with_counting, OpStats, Ring};

fn row_dot<R: Ring>(r: &R, a: &[R::Elem], v: &[R::Elem], sparse: bool) -> R::Elem {
    if sparse {
        dot_sparse(r, a, v)
    } else {
        dot(r, a, v)
    }
}

/// c_k = tE_r (A_r)^k E_r for k = 1..n, with c_0 = 1.
fn diagonal_series<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, size: usize, sparse: bool) -> Vec<R::Elem> {
    let n = a.rows();
    let m = size - 1;
    let mut c = Vec::with_capacity(n + 1);
    c.push(r.one());
    let mut v: Vec<R::Elem> = (0..size).map(|i| a.get(i, m).clone()).collect();
    c.push(v[m].clone());
    for _ in 2..n {
        v = (0..size).map(|j| row_dot(r, &a.row(j)[..size], &v, sparse)).collect();
        c.push(v[m].clone());
    }
    if n >= 2 {
        c.push(row_dot(r, &a.row(m)[..size], &v, sparse));
    }
    c
}

/// b = c * q mod X^{n+1}; both have constant term 1.
fn truncated_product<R: Ring>(r: &R, c: &[R::Elem], q: &[R::Elem], sparse: bool) -> Vec<R::Elem> {
    (0..c.len())
        .map(|j| {
            let mut terms = Vec::with_capacity(j + 1);
            for k in 0..=j {
                let t = if k == 0 {
                    c[j].clone()
                } else if k == j {
                    q[j].clone()
                } else {
                    if sparse && (r.is_zero(&c[j - k]) || r.is_zero(&q[k])) {
                        continue;
                    }
                    r.mul(&c[j - k], &q[k])
                };
                terms.push(t);
            }
            sum(r, &terms)
        })
        .collect()
}

/// Chistov's algorithm with the cost of each of its four stages:
/// diagonal series, their product, the series inverse, the reciprocal.
pub fn chistov_with_stage_stats<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
    sparse: bool,
) -> Result<(CharPoly<R::Elem>, [OpStats; 4])> {
    check_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok((CharPoly { coeffs: vec![r.one()] }, [OpStats::default(); 4]));
    }
    let (series, s1) = with_counting(|| {
        // r = 1: q_i = q_{i-1} a_11 with q_0 = 1
        let mut first = vec![r.one(), a.get(0, 0).clone()];
        for i in 2..=n {
            first.push(r.mul(&first[i - 1], a.get(0, 0)));
        }
        let mut all = vec![first];
        for size in 2..=n {
            all.push(diagonal_series(r, a, size, sparse));
        }
        all
    });
    let (q, s2) = with_counting(|| {
        let mut it = series.into_iter();
        let first = it.next().expect("n >= 1");
        it.fold(first, |q, c| truncated_product(r, &c, &q, sparse))
    });
    let (inv, s3) = with_counting(|| series_inverse_coeffs(r, &q, n));
    let inv = inv?;
    let (coeffs, s4) = with_counting(|| {
        // P_A = (-1)^n X^n Q(1/X); inv is ascending so descending P_A is inv itself
        let odd = n % 2 == 1;
        inv.iter().map(|c| signed(r, c, odd)).collect::<Vec<_>>()
    });
    Ok((CharPoly { coeffs }, [s1, s2, s3, s4]))
}

/// Chistov's algorithm: product of the (B_r^{-1})_{r,r} mod X^{n+1},
/// series inversion, reciprocal.
pub fn charpoly_chistov<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, sparse: bool) -> Result<CharPoly<R::Elem>> {
    chistov_with_stage_stats(r, a, sparse).map(|(p, _)| p)
}
