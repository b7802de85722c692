use super::{check_square, CharPoly};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::ring::{signed, Ring};

fn field_div<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem) -> Result<R::Elem> {
    r.exact_div(a, b).map_err(|e| Error::ExactDivisionFailed(format!("hessenberg reduction: {e}")))
}

/// Similarity reduction to upper Hessenberg form: row eliminations below
/// the subdiagonal, each followed by the inverse column operation.
/// Columns with nothing to eliminate are skipped.
pub fn hessenberg_form<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<DenseMatrix<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    let mut h = a.clone();
    for jpiv in 0..n.saturating_sub(2) {
        let ipiv = jpiv + 1;
        let mut iciv = ipiv;
        while r.is_zero(h.get(iciv, jpiv)) && iciv < n - 1 {
            iciv += 1;
        }
        let piv = h.get(iciv, jpiv).clone();
        if r.is_zero(&piv) {
            continue;
        }
        if iciv > ipiv {
            h.swap_rows(ipiv, iciv);
            h.swap_cols(ipiv, iciv);
        }
        for i in iciv + 1..n {
            let c = field_div(r, h.get(i, jpiv), &piv)?;
            // row i -= c * row ipiv
            for j in jpiv + 1..n {
                let v = r.sub(h.get(i, j), &r.mul(&c, h.get(ipiv, j)));
                h.set(i, j, v);
            }
            h.set(i, jpiv, r.zero());
            // column ipiv += c * column i
            for k in 0..n {
                let v = r.add(h.get(k, ipiv), &r.mul(&c, h.get(k, i)));
                h.set(k, ipiv, v);
            }
        }
    }
    Ok(h)
}

/// Characteristic polynomials P_1..P_n of the leading blocks of a Hessenberg
/// matrix, ascending, P_m with the exact leading coefficient (-1)^m.
fn hessenberg_recurrence<R: Ring>(r: &R, h: &DenseMatrix<R::Elem>) -> Vec<Vec<R::Elem>> {
    let n = h.rows();
    let mut ps: Vec<Vec<R::Elem>> = vec![vec![r.one()]];
    if n == 0 {
        return ps;
    }
    ps.push(vec![h.get(0, 0).clone(), r.neg(&r.one())]);
    for m in 2..=n {
        let hmm = h.get(m - 1, m - 1);
        let prev = &ps[m - 1];
        let lead_negative = (m - 1) % 2 == 1;
        // (h_mm - X) P_{m-1}
        let mut p = Vec::with_capacity(m + 1);
        p.push(r.mul(hmm, &prev[0]));
        for k in 1..m {
            let hp = if k == m - 1 { signed(r, hmm, lead_negative) } else { r.mul(hmm, &prev[k]) };
            p.push(r.sub(&hp, &prev[k - 1]));
        }
        p.push(r.neg(&prev[m - 1]));
        let mut c = r.one();
        for i in 1..m {
            let sub = h.get(m - i, m - i - 1);
            c = if i == 1 { r.neg(sub) } else { r.neg(&r.mul(&c, sub)) };
            let coef = r.mul(&c, h.get(m - i - 1, m - 1));
            let q = &ps[m - i - 1];
            let d = q.len() - 1;
            let q_negative = d % 2 == 1;
            for (k, qk) in q.iter().enumerate() {
                let t = if k == d { signed(r, &coef, q_negative) } else { r.mul(&coef, qk) };
                p[k] = r.add(&p[k], &t);
            }
        }
        ps.push(p);
    }
    ps
}

/// Hessenberg's method over a field.
pub fn charpoly_hessenberg<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    let h = hessenberg_form(r, a)?;
    let n = h.rows();
    let p = hessenberg_recurrence(r, &h).pop().expect("P_0 always present");
    Ok(CharPoly::from_ascending(r, &p, n))
}
