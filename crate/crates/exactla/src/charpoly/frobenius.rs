use super::{check_square, CharPoly};
use crate::elimination::jorbarsol;
use crate::error::{Error, Result};
use crate::matrix::{self, DenseMatrix};
use crate::poly;
use crate::ring::Ring;

/// Block triangularization data: block j is the Krylov space of e_{start_j}
/// modulo the previous blocks, with companion polynomial polys[j]
/// (monic, ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusBlocks<E> {
    pub starts: Vec<usize>,
    pub sizes: Vec<usize>,
    pub polys: Vec<Vec<E>>,
}

/// Reduced vectors g_j = Σ_i t_j[i] f_i with g_j zero at the pivot rows of
/// every earlier g.
struct Echelon<E> {
    g: Vec<Vec<E>>,
    pivots: Vec<usize>,
    t: Vec<Vec<E>>,
}

impl<E: Clone> Echelon<E> {
    fn len(&self) -> usize {
        self.g.len()
    }

    /// Coordinates of w on the f basis if w lies in the span, else the
    /// reduced residue and the coordinates of w - residue.
    fn reduce<R: Ring<Elem = E>>(&self, r: &R, w: &[E]) -> Result<(Vec<E>, Vec<E>)> {
        let mut res = w.to_vec();
        let mut coords = vec![r.zero(); self.len()];
        for (j, g) in self.g.iter().enumerate() {
            let p = self.pivots[j];
            if r.is_zero(&res[p]) {
                continue;
            }
            let lambda = r
                .exact_div(&res[p], &g[p])
                .map_err(|e| Error::ExactDivisionFailed(format!("frobenius block reduction: {e}")))?;
            for (x, y) in res.iter_mut().zip(g) {
                if !r.is_zero(y) {
                    *x = r.sub(x, &r.mul(&lambda, y));
                }
            }
            for (c, tj) in coords.iter_mut().zip(&self.t[j]) {
                if !r.is_zero(tj) {
                    *c = r.add(c, &r.mul(&lambda, tj));
                }
            }
        }
        Ok((res, coords))
    }

    /// Append f_new = residue + Σ coords_i f_i, so the reduced vector is the
    /// residue and its transform is e_new - coords.
    fn push<R: Ring<Elem = E>>(&mut self, r: &R, residue: Vec<E>, coords: Vec<E>) {
        let pivot = residue.iter().position(|x| !r.is_zero(x)).expect("nonzero residue");
        let mut t: Vec<E> = coords.iter().map(|c| r.neg(c)).collect();
        t.push(r.one());
        for old in &mut self.t {
            old.push(r.zero());
        }
        self.g.push(residue);
        self.pivots.push(pivot);
        self.t.push(t);
    }
}

fn unit_vector<R: Ring>(r: &R, n: usize, i: usize) -> Vec<R::Elem> {
    (0..n).map(|k| if k == i { r.one() } else { r.zero() }).collect()
}

/// Krylov spaces of e_1, e_2, ... in turn, each extended until its next
/// image depends on everything collected so far.
pub fn frobenius_blocks<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<FrobeniusBlocks<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    let mut ech = Echelon { g: Vec::new(), pivots: Vec::new(), t: Vec::new() };
    let mut out = FrobeniusBlocks { starts: Vec::new(), sizes: Vec::new(), polys: Vec::new() };
    let mut next_e = 0;
    while ech.len() < n {
        // first canonical vector outside the current span
        let (start, mut v, residue, coords) = loop {
            if next_e >= n {
                return Err(Error::ExactDivisionFailed("canonical basis not spanned".into()));
            }
            let e = unit_vector(r, n, next_e);
            let (res, coords) = ech.reduce(r, &e)?;
            next_e += 1;
            if res.iter().any(|x| !r.is_zero(x)) {
                break (next_e - 1, e, res, coords);
            }
        };
        let first = ech.len();
        ech.push(r, residue, coords);
        loop {
            v = matrix::mat_vec(r, a, &v);
            let (res, coords) = ech.reduce(r, &v)?;
            if res.iter().any(|x| !r.is_zero(x)) {
                ech.push(r, res, coords);
                continue;
            }
            // A^k e_start = Σ coords_i f_i; the block polynomial only sees
            // the coordinates on this block's own vectors
            let k = ech.len() - first;
            let mut p: Vec<R::Elem> = coords[first..].iter().map(|c| r.neg(c)).collect();
            p.push(r.one());
            out.starts.push(start);
            out.sizes.push(k);
            out.polys.push(p);
            break;
        }
    }
    Ok(out)
}

fn krylov_matrix<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    let n = a.rows();
    let mut cols: Vec<Vec<R::Elem>> = vec![unit_vector(r, n, 0), a.col(0)];
    for _ in 2..=n {
        let next = matrix::mat_vec(r, a, cols.last().expect("nonempty"));
        cols.push(next);
    }
    DenseMatrix::from_fn(n, n + 1, |i, j| cols[j][i].clone())
}

/// Frobenius method: the Krylov matrix [e_1 | A e_1 | ... | A^n e_1] and
/// JorBarSol when e_1 is cyclic with a strongly regular Krylov matrix,
/// otherwise block triangularization.
pub fn charpoly_frobenius<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    check_square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(CharPoly { coeffs: vec![r.one()] });
    }
    match jorbarsol(r, &krylov_matrix(r, a)) {
        Ok(ell) => {
            let mut monic: Vec<R::Elem> = ell.iter().map(|l| r.neg(l)).collect();
            monic.push(r.one());
            Ok(CharPoly::from_monic_ascending(r, &monic))
        }
        Err(Error::ZeroDominantMinor(_)) => {
            let blocks = frobenius_blocks(r, a)?;
            let monic = blocks.polys.iter().fold(vec![r.one()], |acc, p| poly::mul_auto(r, &acc, p));
            Ok(CharPoly::from_monic_ascending(r, &monic))
        }
        Err(e) => Err(e),
    }
}
