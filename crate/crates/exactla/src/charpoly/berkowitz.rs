use super::{check_square, CharPoly};
use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::ring::{dot, dot_sparse, signed, sum, Ring};

/// Defining column of Toep(Q_{r+1}):
/// (-1, a_{r+1,r+1}, R_r S_r, R_r A_r S_r, ..., R_r A_r^{r-1} S_r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToeplitzColumn<E> {
    pub entries: Vec<E>,
}

fn row_dot<R: Ring>(r: &R, a: &[R::Elem], v: &[R::Elem], sparse: bool) -> R::Elem {
    if sparse {
        dot_sparse(r, a, v)
    } else {
        dot(r, a, v)
    }
}

/// Columns for r + 1 = 2..n. Matrix-vector products only, no powers of A_r.
pub fn berkowitz_columns<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, sparse: bool) -> Result<Vec<ToeplitzColumn<R::Elem>>> {
    check_square(a)?;
    let n = a.rows();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for size in 2..=n {
        let m = size - 1;
        let row = &a.row(m)[..m];
        let mut s: Vec<R::Elem> = (0..m).map(|i| a.get(i, m).clone()).collect();
        let mut c = vec![r.neg(&r.one()), a.get(m, m).clone()];
        for _ in 0..m - 1 {
            c.push(row_dot(r, row, &s, sparse));
            s = (0..m).map(|j| row_dot(r, &a.row(j)[..m], &s, sparse)).collect();
        }
        c.push(row_dot(r, row, &s, sparse));
        out.push(ToeplitzColumn { entries: c });
    }
    Ok(out)
}

/// P_{r+1} = Toep(Q_{r+1}) P_r. The diagonal -1 and the leading
/// coefficient (-1)^r of P_r only change signs.
fn toeplitz_step<R: Ring>(r: &R, col: &[R::Elem], v: &[R::Elem], sparse: bool) -> Vec<R::Elem> {
    let size = v.len();
    let lead_negative = size % 2 == 0;
    (0..=size)
        .map(|i| {
            let mut terms = Vec::with_capacity(i + 1);
            for j in 0..size.min(i + 1) {
                let q = &col[i - j];
                let t = if i == j {
                    r.neg(&v[j])
                } else if j == 0 {
                    signed(r, q, lead_negative)
                } else {
                    if sparse && (r.is_zero(q) || r.is_zero(&v[j])) {
                        continue;
                    }
                    r.mul(q, &v[j])
                };
                terms.push(t);
            }
            sum(r, &terms)
        })
        .collect()
}

/// Berkowitz's division-free algorithm; `sparse` skips zero factors.
pub fn charpoly_berkowitz<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, sparse: bool) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(CharPoly { coeffs: vec![r.one()] });
    }
    let cols = berkowitz_columns(r, a, sparse)?;
    let mut v = vec![r.neg(&r.one()), a.get(0, 0).clone()];
    for c in &cols {
        v = toeplitz_step(r, &c.entries, &v, sparse);
    }
    Ok(CharPoly { coeffs: v })
}
