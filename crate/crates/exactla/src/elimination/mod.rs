//! Pivot-based decompositions: Gauss LU/LUP, fraction-free Jordan-Bareiss,
//! Dodgson condensation for Hankel matrices, the JorBarSol dependence
//! solver and the recursive Bunch-Hopcroft LUP.

use crate::error::{Error, Result};
use crate::matrix::{self, assemble, mat_mul, triangular_inverse, DenseMatrix, MatMulStrategy, Side, DEFAULT_CUTOFF};
use crate::ring::Ring;

/// Unit lower triangular L and upper triangular U.
#[derive(Debug, Clone, PartialEq)]
pub struct LUFactors<E> {
    pub l: DenseMatrix<E>,
    pub u: DenseMatrix<E>,
    /// Order of the last nonzero leading principal minor met before a zero pivot.
    pub rank_detected: usize,
}

/// A = L·U·P. Column j of L·U is column `perm[j]` of A.
#[derive(Debug, Clone, PartialEq)]
pub struct LUPFactors<E> {
    pub l: DenseMatrix<E>,
    pub u: DenseMatrix<E>,
    pub perm: Vec<usize>,
    pub sign: i8,
}

impl<E: Clone> LUPFactors<E> {
    /// L·U·P, for multiply-back checks.
    pub fn product<R: Ring<Elem = E>>(&self, r: &R) -> DenseMatrix<E> {
        let lu = matrix::mul(r, &self.l, &self.u);
        let mut out = lu.clone();
        for j in 0..lu.cols() {
            for i in 0..lu.rows() {
                out.set(i, self.perm[j], lu.get(i, j).clone());
            }
        }
        out
    }

    /// sign·∏U_ii (the determinant when A is square).
    pub fn det<R: Ring<Elem = E>>(&self, r: &R) -> E {
        let mut d = r.one();
        for i in 0..self.u.rows() {
            d = r.mul(&d, self.u.get(i, i));
        }
        crate::ring::signed(r, &d, self.sign < 0)
    }
}

/// Output of the Jordan-Bareiss elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct BareissTableau<E> {
    /// Position (i,j) holds the bordered minor of order min(r, i, j) + 1
    /// (0-based indices).
    pub entries: DenseMatrix<E>,
    pub rank: usize,
}

/// Connected minors of a Hankel matrix by Dodgson condensation.
#[derive(Debug, Clone, PartialEq)]
pub struct DodgsonTable<E> {
    /// Row 0 is ones, row r ≥ 1 holds the order-r minors t_{r,j}.
    pub rows: Vec<Vec<E>>,
    /// 1-based index j of the first entry of each row.
    pub first: Vec<usize>,
}

impl<E> DodgsonTable<E> {
    /// t_{r,j} with the 1-based column index j.
    pub fn get(&self, r: usize, j: usize) -> Option<&E> {
        j.checked_sub(self.first[r]).and_then(|k| self.rows[r].get(k))
    }

    /// Entry of the deepest row that has one.
    pub fn final_minor(&self) -> Option<&E> {
        self.rows.iter().rev().find(|row| !row.is_empty()).and_then(|row| row.last())
    }
}

fn div_failed(what: &str, e: Error) -> Error {
    match e {
        Error::ExactDivisionFailed(_) => e,
        other => Error::ExactDivisionFailed(format!("{what}: {other}")),
    }
}

/// Gauss elimination without pivot search, stopping at the first zero pivot.
///
/// Each step costs one division per row below the pivot and one product
/// and one subtraction per updated entry.
pub fn gauss_lu<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<LUFactors<R::Elem>> {
    let (m, n) = (a.rows(), a.cols());
    let q = m.min(n);
    let mut t = a.clone();
    let mut rank = q;
    for p in 0..q {
        let piv = t.get(p, p).clone();
        if r.is_zero(&piv) {
            rank = p;
            break;
        }
        for i in p + 1..m {
            let l = r.exact_div(t.get(i, p), &piv).map_err(|e| div_failed("gauss pivot", e))?;
            for j in p + 1..n {
                let v = r.sub(t.get(i, j), &r.mul(&l, t.get(p, j)));
                t.set(i, j, v);
            }
            t.set(i, p, l);
        }
    }
    let l = DenseMatrix::from_fn(m, m, |i, j| {
        if i == j {
            r.one()
        } else if j < i && j < rank {
            t.get(i, j).clone()
        } else {
            r.zero()
        }
    });
    let u = DenseMatrix::from_fn(m, n, |i, j| if j >= i { t.get(i, j).clone() } else { r.zero() });
    Ok(LUFactors { l, u, rank_detected: rank })
}

/// LUP decomposition of a surjective matrix over a field. The pivot of row p
/// is the first nonzero entry at or right of the diagonal.
pub fn lup_surjective<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<LUPFactors<R::Elem>> {
    let (m, n) = (a.rows(), a.cols());
    if m > n {
        return Err(Error::NotSurjective(n));
    }
    let mut t = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i8;
    for p in 0..m {
        let Some(j) = (p..n).find(|&j| !r.is_zero(t.get(p, j))) else {
            return Err(Error::NotSurjective(p));
        };
        if j != p {
            t.swap_cols(p, j);
            perm.swap(p, j);
            sign = -sign;
        }
        let piv = t.get(p, p).clone();
        for i in p + 1..m {
            let l = r.exact_div(t.get(i, p), &piv).map_err(|e| div_failed("lup pivot", e))?;
            for j in p + 1..n {
                let v = r.sub(t.get(i, j), &r.mul(&l, t.get(p, j)));
                t.set(i, j, v);
            }
            t.set(i, p, l);
        }
    }
    let l = DenseMatrix::from_fn(m, m, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => r.one(),
        std::cmp::Ordering::Greater => t.get(i, j).clone(),
        std::cmp::Ordering::Less => r.zero(),
    });
    let u = DenseMatrix::from_fn(m, n, |i, j| if j >= i { t.get(i, j).clone() } else { r.zero() });
    Ok(LUPFactors { l, u, perm, sign })
}

/// Signature of a permutation given as an index array.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Rows below which the recursion hands over to `lup_surjective`.
pub const BUNCH_HOPCROFT_FLOOR: usize = 8;

/// Recursive LUP by halving the rows; products go through `mat_mul` and the
/// upper block is inverted with `triangular_inverse`.
pub fn bunch_hopcroft<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<LUPFactors<R::Elem>> {
    if a.rows() > a.cols() {
        return Err(Error::NotSurjective(a.cols()));
    }
    let (l, u, perm) = bh_rec(r, a, 0)?;
    let sign = permutation_sign(&perm);
    Ok(LUPFactors { l, u, perm, sign })
}

type Lup<E> = (DenseMatrix<E>, DenseMatrix<E>, Vec<usize>);

fn bh_rec<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, row_offset: usize) -> Result<Lup<R::Elem>> {
    let (n, p) = (a.rows(), a.cols());
    if n < BUNCH_HOPCROFT_FLOOR {
        return lup_surjective(r, a)
            .map(|f| (f.l, f.u, f.perm))
            .map_err(|e| match e {
                Error::NotSurjective(k) => Error::NotSurjective(k + row_offset),
                other => other,
            });
    }
    let n0 = n.next_power_of_two() / 2;
    let n1 = n - n0;
    let mm = |x: &DenseMatrix<R::Elem>, y: &DenseMatrix<R::Elem>| mat_mul(r, x, y, MatMulStrategy::Auto, DEFAULT_CUTOFF);

    let (l1, u1, q1) = bh_rec(r, &a.submatrix(0..n0, 0..p), row_offset)?;
    let a2 = a.submatrix(n0..n, 0..p).permute_cols(&q1);
    let v1 = u1.submatrix(0..n0, 0..n0);
    let b = u1.submatrix(0..n0, n0..p);
    let c = a2.submatrix(0..n1, 0..n0);
    let d = a2.submatrix(0..n1, n0..p);
    let v2 = triangular_inverse(r, &v1, Side::Upper)?;
    let c1 = mm(&c, &v2)?;
    let f = mm(&c1, &b)?;
    let e = matrix::sub(r, &d, &f);
    let (l2, u2, q2) = bh_rec(r, &e, row_offset + n0)?;

    let l = assemble(&l1, &DenseMatrix::zeros(r, n0, n1), &c1, &l2);
    let u = assemble(&v1, &b.permute_cols(&q2), &DenseMatrix::zeros(r, n1, n0), &u2);
    let mut perm = q1[..n0].to_vec();
    perm.extend(q2.iter().map(|&k| q1[n0 + k]));
    Ok((l, u, perm))
}

/// One-step fraction-free elimination on `t` for pivots p in 0..steps.
/// Returns the number of leading nonzero pivots met, and stops early at a
/// zero pivot. A row whose multiplier is zero is left untouched when the
/// pivot equals the previous one, since the update would be the identity.
fn bareiss_sweep<R: Ring>(r: &R, t: &mut DenseMatrix<R::Elem>, steps: usize) -> Result<Option<usize>> {
    let (m, n) = (t.rows(), t.cols());
    let mut den = r.one();
    for p in 0..steps {
        let piv = t.get(p, p).clone();
        if r.is_zero(&piv) {
            return Ok(Some(p));
        }
        let trivial = piv == den;
        for i in p + 1..m {
            let coe = t.get(i, p).clone();
            if trivial && r.is_zero(&coe) {
                continue;
            }
            for j in p + 1..n {
                let num = r.sub(&r.mul(&piv, t.get(i, j)), &r.mul(&coe, t.get(p, j)));
                let v = r.exact_div(&num, &den).map_err(|e| div_failed("bareiss step", e))?;
                t.set(i, j, v);
            }
        }
        den = piv;
    }
    Ok(None)
}

/// Jordan-Bareiss elimination without pivot search.
pub fn jordan_bareiss<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<BareissTableau<R::Elem>> {
    let q = a.rows().min(a.cols());
    let mut t = a.clone();
    let rank = match bareiss_sweep(r, &mut t, q.saturating_sub(1))? {
        Some(p) => p,
        None if q > 0 && r.is_zero(t.get(q - 1, q - 1)) => q - 1,
        None => q,
    };
    Ok(BareissTableau { entries: t, rank })
}

/// Determinant by Gauss elimination with row pivot search (field).
pub fn det_gauss<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<R::Elem> {
    square(a)?;
    let n = a.rows();
    let mut t = a.clone();
    let mut neg = false;
    let mut det = r.one();
    for p in 0..n {
        let Some(k) = (p..n).find(|&i| !r.is_zero(t.get(i, p))) else {
            return Ok(r.zero());
        };
        if k != p {
            t.swap_rows(k, p);
            neg = !neg;
        }
        let piv = t.get(p, p).clone();
        det = if p == 0 { piv.clone() } else { r.mul(&det, &piv) };
        for i in p + 1..n {
            if r.is_zero(t.get(i, p)) {
                continue;
            }
            let l = r.exact_div(t.get(i, p), &piv).map_err(|e| div_failed("gauss pivot", e))?;
            for j in p + 1..n {
                let v = r.sub(t.get(i, j), &r.mul(&l, t.get(p, j)));
                t.set(i, j, v);
            }
        }
    }
    Ok(crate::ring::signed(r, &det, neg))
}

/// Fraction-free determinant with row pivot search (integral domain).
pub fn det_bareiss<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<R::Elem> {
    square(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(r.one());
    }
    let mut t = a.clone();
    let mut neg = false;
    let mut den = r.one();
    for p in 0..n - 1 {
        let Some(k) = (p..n).find(|&i| !r.is_zero(t.get(i, p))) else {
            return Ok(r.zero());
        };
        if k != p {
            t.swap_rows(k, p);
            neg = !neg;
        }
        let piv = t.get(p, p).clone();
        for i in p + 1..n {
            let coe = t.get(i, p).clone();
            for j in p + 1..n {
                let num = r.sub(&r.mul(&piv, t.get(i, j)), &r.mul(&coe, t.get(p, j)));
                let v = r.exact_div(&num, &den).map_err(|e| div_failed("bareiss step", e))?;
                t.set(i, j, v);
            }
        }
        den = piv;
    }
    Ok(crate::ring::signed(r, t.get(n - 1, n - 1), neg))
}

/// Solves the square system A·x = b over a field by Gauss elimination with
/// row pivot search. Singular A gives `ZeroDivisor`.
pub fn solve_gauss<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    square(a)?;
    let n = a.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch(format!("right-hand side has {} entries, expected {n}", b.len())));
    }
    let mut t = a.clone();
    let mut rhs = b.to_vec();
    for p in 0..n {
        let Some(k) = (p..n).find(|&i| !r.is_zero(t.get(i, p))) else {
            return Err(Error::ZeroDivisor);
        };
        if k != p {
            t.swap_rows(k, p);
            rhs.swap(k, p);
        }
        let piv = t.get(p, p).clone();
        for i in p + 1..n {
            if r.is_zero(t.get(i, p)) {
                continue;
            }
            let l = r.exact_div(t.get(i, p), &piv).map_err(|e| div_failed("solve pivot", e))?;
            for j in p + 1..n {
                let v = r.sub(t.get(i, j), &r.mul(&l, t.get(p, j)));
                t.set(i, j, v);
            }
            rhs[i] = r.sub(&rhs[i], &r.mul(&l, &rhs[p]));
        }
    }
    let mut x = vec![r.zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in i + 1..n {
            acc = r.sub(&acc, &r.mul(t.get(i, j), &x[j]));
        }
        x[i] = r.exact_div(&acc, t.get(i, i)).map_err(|e| div_failed("back substitution", e))?;
    }
    Ok(x)
}

/// Rank over a field by row echelon reduction.
pub fn rank<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<usize> {
    let (m, n) = (a.rows(), a.cols());
    let mut t = a.clone();
    let mut row = 0;
    for c in 0..n {
        if row == m {
            break;
        }
        let Some(k) = (row..m).find(|&i| !r.is_zero(t.get(i, c))) else {
            continue;
        };
        t.swap_rows(k, row);
        let piv = t.get(row, c).clone();
        for i in row + 1..m {
            if r.is_zero(t.get(i, c)) {
                continue;
            }
            let l = r.exact_div(t.get(i, c), &piv).map_err(|e| div_failed("rank pivot", e))?;
            for j in c..n {
                let v = r.sub(t.get(i, j), &r.mul(&l, t.get(row, j)));
                t.set(i, j, v);
            }
        }
        row += 1;
    }
    Ok(row)
}

fn square<E: Clone>(a: &DenseMatrix<E>) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{}x{} is not square", a.rows(), a.cols())))
    }
}

/// Dodgson condensation of the m×n Hankel matrix h_{ij} = a_{i+j-1}.
pub fn dodgson_hankel<R: Ring>(r: &R, coeffs: &[R::Elem], m: usize, n: usize) -> Result<DodgsonTable<R::Elem>> {
    if m == 0 || n == 0 || coeffs.len() != m + n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for a {m}x{n} Hankel matrix",
            coeffs.len()
        )));
    }
    let q = m.min(n);
    let len = m + n - 1;
    let mut rows = vec![vec![r.one(); len], coeffs.to_vec()];
    let mut first = vec![1, 1];
    for k in 1..q {
        // row k+1 covers j = k+1 ..= m+n-k-1
        let (lo, hi) = (k + 1, m + n - k - 1);
        let mut next = Vec::with_capacity(hi + 1 - lo);
        for j in lo..=hi {
            let at = |row: usize, col: usize| &rows[row][col - first[row]];
            let den = at(k - 1, j);
            if r.is_zero(den) {
                return Err(Error::ZeroConnectedMinor { order: k - 1, index: j });
            }
            let num = r.sub(&r.mul(at(k, j - 1), at(k, j + 1)), &r.mul(at(k, j), at(k, j)));
            next.push(r.exact_div(&num, den).map_err(|e| div_failed("dodgson step", e))?);
        }
        rows.push(next);
        first.push(lo);
    }
    Ok(DodgsonTable { rows, first })
}

/// Coefficients l with last column = Σ l_j·(column j), for an n×(n+1)
/// matrix whose left block is strongly regular. Fraction-free elimination
/// followed by back substitution over the ring.
pub fn jorbarsol<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> Result<Vec<R::Elem>> {
    let n = a.rows();
    if a.cols() != n + 1 {
        return Err(Error::DimensionMismatch(format!("jorbarsol needs n x (n+1), got {}x{}", n, a.cols())));
    }
    let mut t = a.clone();
    if let Some(p) = bareiss_sweep(r, &mut t, n.saturating_sub(1))? {
        return Err(Error::ZeroDominantMinor(p + 1));
    }
    if n > 0 && r.is_zero(t.get(n - 1, n - 1)) {
        return Err(Error::ZeroDominantMinor(n));
    }
    let mut ell = vec![r.zero(); n];
    for p in (0..n).rev() {
        let lp = r.exact_div(t.get(p, n), t.get(p, p)).map_err(|e| div_failed("jorbarsol back substitution", e))?;
        for i in 0..p {
            let v = r.sub(t.get(i, n), &r.mul(&lp, t.get(i, p)));
            t.set(i, n, v);
        }
        ell[p] = lp;
    }
    Ok(ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{with_counting, Counted, Frac, FracElem, Integers, Zmod};
    use num_bigint::BigInt;

    fn zm(rows: usize, cols: usize, v: &[i64]) -> DenseMatrix<BigInt> {
        DenseMatrix::from_i64(&Integers, rows, cols, v)
    }

    fn m3() -> DenseMatrix<BigInt> {
        zm(
            6,
            5,
            &[
                -73, -53, -30, 45, -58, 21, -54, -11, 0, -1, 72, -59, 52, -23, 77, 33, 55, 66, -15, 62, -41, -95, -25,
                51, -54, 14, 55, 35, -5, 25,
            ],
        )
    }

    #[test]
    fn m3_tableau() {
        let t = jordan_bareiss(&Integers, &m3()).unwrap();
        let expect = zm(
            6,
            5,
            &[
                -73, -53, -30, 45, -58, 21, 5055, 1433, -945, 1291, 72, 8123, 272743, 2940, 243716, 33, -2266, 220594,
                2911532, -3038698, -41, 4762, 52277, 3660124, 0, 14, -3273, 83592, 3227536, 0,
            ],
        );
        assert_eq!(t.entries, expect);
        assert_eq!(t.rank, 4);
    }

    #[test]
    fn m3_gauss_rank() {
        let q = Frac::new(Integers);
        let a = m3().map(|x| q.embed(x.clone()));
        let f = gauss_lu(&q, &a).unwrap();
        assert_eq!(f.rank_detected, 4);
        assert_eq!(matrix::mul(&q, &f.l, &f.u), a);
        assert_eq!(q.format(f.l.get(5, 1)), "(-1091)/(1685)");
    }

    #[test]
    fn lu_two_by_two() {
        let q = Frac::new(Integers);
        let a = DenseMatrix::from_i64(&q, 2, 2, &[2, 1, 4, 3]);
        let f = gauss_lu(&q, &a).unwrap();
        assert_eq!(f.l, DenseMatrix::from_i64(&q, 2, 2, &[1, 0, 2, 1]));
        assert_eq!(f.u, DenseMatrix::from_i64(&q, 2, 2, &[2, 1, 0, 1]));
    }

    #[test]
    fn gauss_count_three() {
        let r = Counted::new(Zmod::new(1_000_000_007));
        let a = DenseMatrix::from_i64(&r, 3, 3, &[2, 7, 1, 8, 2, 8, 1, 8, 3]);
        let (_, st) = with_counting(|| gauss_lu(&r, &a).unwrap());
        assert_eq!(st.total(), 13);
    }

    #[test]
    fn lup_swap() {
        let q = Zmod::new(7);
        let a = DenseMatrix::from_i64(&q, 2, 2, &[0, 1, 1, 0]);
        let f = lup_surjective(&q, &a).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.det(&q), q.from_i64(-1));
        assert_eq!(f.product(&q), a);
        let b = DenseMatrix::from_i64(&q, 2, 2, &[1, 2, 2, 4]);
        assert_eq!(lup_surjective(&q, &b), Err(Error::NotSurjective(1)));
    }

    #[test]
    fn bunch_hopcroft_multiplies_back() {
        use rand::{Rng, SeedableRng};
        let f = Zmod::new(10007);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (n, p) in [(16, 16), (8, 12), (11, 13)] {
            let a = DenseMatrix::from_fn(n, p, |_, _| f.from_i64(rng.gen_range(0..10007)));
            let bh = bunch_hopcroft(&f, &a).unwrap();
            assert_eq!(bh.product(&f), a);
            assert_eq!(permutation_sign(&bh.perm), bh.sign);
            let plain = lup_surjective(&f, &a).unwrap();
            if n == p {
                assert_eq!(bh.det(&f), plain.det(&f));
            }
        }
    }

    #[test]
    fn jorbarsol_small() {
        let z = Integers;
        let l = jorbarsol(&z, &zm(2, 3, &[1, 0, 2, 0, 1, 3])).unwrap();
        assert_eq!(l, vec![BigInt::from(2), BigInt::from(3)]);
        let l = jorbarsol(&z, &zm(2, 3, &[1, 0, 0, 0, 1, 0])).unwrap();
        assert_eq!(l, vec![BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn hilbert_five() {
        let q = Frac::new(Integers);
        let a: Vec<FracElem<BigInt>> =
            (1..=9).map(|k| q.make(BigInt::from(1), BigInt::from(k))).collect();
        let t = dodgson_hankel(&q, &a, 5, 5).unwrap();
        assert_eq!(q.format(t.final_minor().unwrap()), "(1)/(266716800000)");
        assert_eq!(q.format(t.get(2, 2).unwrap()), "(1)/(12)");
    }

    #[test]
    fn integer_hankel_seven() {
        let a: Vec<BigInt> = [1, 7, 7, 1, 2, 2, 4, 3, 5, 3, 7, 2, 4].iter().map(|&k| BigInt::from(k)).collect();
        let t = dodgson_hankel(&Integers, &a, 7, 7).unwrap();
        assert_eq!(t.final_minor(), Some(&BigInt::from(870)));
        assert_eq!(t.get(5, 5), Some(&BigInt::from(-1671)));
        let h = DenseMatrix::from_fn(7, 7, |i, j| a[i + j].clone());
        assert_eq!(det_bareiss(&Integers, &h).unwrap(), BigInt::from(870));
    }

    #[test]
    fn dodgson_failure_is_reported() {
        let t = dodgson_hankel(&Integers, &[BigInt::from(5)], 1, 1).unwrap();
        assert_eq!(t.rows, vec![vec![BigInt::from(1)], vec![BigInt::from(5)]]);
        let b: Vec<BigInt> = [1, 0, 0, 0, 1].iter().map(|&k| BigInt::from(k)).collect();
        assert!(matches!(dodgson_hankel(&Integers, &b, 3, 3), Err(Error::ZeroConnectedMinor { .. })));
    }
}
