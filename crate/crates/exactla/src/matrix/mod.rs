//! Dense row-major matrices, classical and Strassen-Winograd products,
//! triangular inversion, and the matrix text format.
//!
//! Text format: the first line is `rows cols ring-spec`, followed by
//! rows*cols ring literals separated by whitespace, in row-major order.

use crate::error::{Error, Result};
use crate::ring::{dot, Ring};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> DenseMatrix<E> {
    /// Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        DenseMatrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        DenseMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<E> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Leading principal submatrix A_r = A[1..r, 1..r].
    pub fn principal_submatrix(&self, r: usize) -> Self {
        self.submatrix(0..r, 0..r)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        DenseMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> DenseMatrix<F> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Columns permuted so that column j of the result is column perm[j].
    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        DenseMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, perm[j]).clone())
    }
}

impl<E: Clone> DenseMatrix<E> {
    pub fn zeros<R: Ring<Elem = E>>(r: &R, rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![r.zero(); rows * cols] }
    }

    pub fn identity<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        DenseMatrix::from_fn(n, n, |i, j| if i == j { r.one() } else { r.zero() })
    }

    pub fn from_i64<R: Ring<Elem = E>>(r: &R, rows: usize, cols: usize, vals: &[i64]) -> Self {
        DenseMatrix::new(rows, cols, vals.iter().map(|&v| r.from_i64(v)).collect())
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.data.iter().all(|x| r.is_zero(x))
    }
}

/// Matrix product algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatMulStrategy {
    Classical,
    Strassen,
    Auto,
}

/// Below this order `Auto` and the Strassen recursion use the classical product.
pub const DEFAULT_CUTOFF: usize = 64;

fn check_product<E>(a: &DenseMatrix<E>, b: &DenseMatrix<E>) -> Result<()> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(())
}

/// Product with the chosen strategy; the result never depends on it.
pub fn mat_mul<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
    b: &DenseMatrix<R::Elem>,
    strategy: MatMulStrategy,
    cutoff: usize,
) -> Result<DenseMatrix<R::Elem>> {
    check_product(a, b)?;
    Ok(match strategy {
        MatMulStrategy::Classical => classical(r, a, b),
        MatMulStrategy::Strassen => strassen_padded(r, a, b, cutoff.max(1)),
        MatMulStrategy::Auto => {
            if a.rows.max(a.cols).max(b.cols) > cutoff {
                strassen_padded(r, a, b, cutoff.max(1))
            } else {
                classical(r, a, b)
            }
        }
    })
}

/// Classical product; each entry is a dot product of n mults and n-1 adds.
pub fn mul<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    check_product(a, b).expect("conformable matrices");
    classical(r, a, b)
}

fn classical<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    let bt = b.transpose();
    DenseMatrix::from_fn(a.rows, b.cols, |i, j| dot(r, a.row(i), bt.row(j)))
}

/// Classical product skipping zero factors (used on sparse inputs).
pub fn mul_sparse<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    check_product(a, b).expect("conformable matrices");
    let bt = b.transpose();
    DenseMatrix::from_fn(a.rows, b.cols, |i, j| crate::ring::dot_sparse(r, a.row(i), bt.row(j)))
}

pub fn mat_vec<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len(), "matrix-vector shape mismatch");
    (0..a.rows).map(|i| dot(r, a.row(i), v)).collect()
}

pub fn vec_mat<R: Ring>(r: &R, v: &[R::Elem], a: &DenseMatrix<R::Elem>) -> Vec<R::Elem> {
    assert_eq!(a.rows, v.len(), "vector-matrix shape mismatch");
    (0..a.cols).map(|j| dot(r, v, &a.col(j))).collect()
}

pub fn add<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    DenseMatrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| r.add(x, y)).collect() }
}

pub fn sub<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    DenseMatrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| r.sub(x, y)).collect() }
}

pub fn scale<R: Ring>(r: &R, c: &R::Elem, a: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    a.map(|x| r.mul(c, x))
}

pub fn neg<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> DenseMatrix<R::Elem> {
    a.map(|x| r.neg(x))
}

/// Trace as n-1 additions.
pub fn trace<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> R::Elem {
    let diag: Vec<R::Elem> = (0..a.rows.min(a.cols)).map(|i| a.get(i, i).clone()).collect();
    crate::ring::sum(r, &diag)
}

/// A - c*I, as n subtractions.
pub fn sub_scalar_identity<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, c: &R::Elem) -> DenseMatrix<R::Elem> {
    let mut out = a.clone();
    for i in 0..a.rows.min(a.cols) {
        out.set(i, i, r.sub(a.get(i, i), c));
    }
    out
}

fn pad<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, n: usize) -> DenseMatrix<R::Elem> {
    DenseMatrix::from_fn(n, n, |i, j| if i < a.rows && j < a.cols { a.get(i, j).clone() } else { r.zero() })
}

fn strassen_padded<R: Ring>(
    r: &R,
    a: &DenseMatrix<R::Elem>,
    b: &DenseMatrix<R::Elem>,
    cutoff: usize,
) -> DenseMatrix<R::Elem> {
    let n = a.rows.max(a.cols).max(b.cols).next_power_of_two();
    if n == a.rows && n == a.cols && n == b.cols {
        return strassen(r, a, b, cutoff);
    }
    let c = strassen(r, &pad(r, a, n), &pad(r, b, n), cutoff);
    c.submatrix(0..a.rows, 0..b.cols)
}

/// Winograd form of Strassen's recursion on 2^k square matrices:
/// 7 block products and 15 block additions per level.
fn strassen<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, b: &DenseMatrix<R::Elem>, cutoff: usize) -> DenseMatrix<R::Elem> {
    let n = a.rows;
    if n <= cutoff {
        return classical(r, a, b);
    }
    let h = n / 2;
    let q = |m: &DenseMatrix<R::Elem>, i: usize, j: usize| m.submatrix(i * h..(i + 1) * h, j * h..(j + 1) * h);
    let (a11, a12, a21, a22) = (q(a, 0, 0), q(a, 0, 1), q(a, 1, 0), q(a, 1, 1));
    let (b11, b12, b21, b22) = (q(b, 0, 0), q(b, 0, 1), q(b, 1, 0), q(b, 1, 1));

    let s1 = add(r, &a21, &a22);
    let s2 = sub(r, &s1, &a11);
    let s3 = sub(r, &a11, &a21);
    let s4 = sub(r, &a12, &s2);
    let t1 = sub(r, &b12, &b11);
    let t2 = sub(r, &b22, &t1);
    let t3 = sub(r, &b22, &b12);
    let t4 = sub(r, &t2, &b21);

    let p1 = strassen(r, &a11, &b11, cutoff);
    let p2 = strassen(r, &a12, &b21, cutoff);
    let p3 = strassen(r, &s4, &b22, cutoff);
    let p4 = strassen(r, &a22, &t4, cutoff);
    let p5 = strassen(r, &s1, &t1, cutoff);
    let p6 = strassen(r, &s2, &t2, cutoff);
    let p7 = strassen(r, &s3, &t3, cutoff);

    let c11 = add(r, &p1, &p2);
    let u2 = add(r, &p1, &p6);
    let u3 = add(r, &u2, &p7);
    let u4 = add(r, &u2, &p5);
    let c12 = add(r, &u4, &p3);
    let c21 = sub(r, &u3, &p4);
    let c22 = add(r, &u3, &p5);
    assemble(&c11, &c12, &c21, &c22)
}

/// [[a, b], [c, d]] from four blocks with matching shapes.
pub fn assemble<E: Clone>(a: &DenseMatrix<E>, b: &DenseMatrix<E>, c: &DenseMatrix<E>, d: &DenseMatrix<E>) -> DenseMatrix<E> {
    let (r1, c1) = (a.rows, a.cols);
    DenseMatrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r1, j < c1) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => b.get(i, j - c1).clone(),
        (false, true) => c.get(i - r1, j).clone(),
        (false, false) => d.get(i - r1, j - c1).clone(),
    })
}

/// Which triangle holds the nonzero entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Inverse of a triangular matrix by the 2x2 block recursion, padding with
/// an identity block up to a power of two.
pub fn triangular_inverse<R: Ring>(r: &R, t: &DenseMatrix<R::Elem>, side: Side) -> Result<DenseMatrix<R::Elem>> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", t.rows, t.cols)));
    }
    let n = t.rows;
    if n == 0 {
        return Ok(t.clone());
    }
    for i in 0..n {
        if r.inv(t.get(i, i)).is_err() {
            return Err(Error::NotInvertibleDiagonal(i));
        }
    }
    let m = n.next_power_of_two();
    let padded = DenseMatrix::from_fn(m, m, |i, j| {
        if i < n && j < n {
            t.get(i, j).clone()
        } else if i == j {
            r.one()
        } else {
            r.zero()
        }
    });
    Ok(tri_inv(r, &padded, side)?.principal_submatrix(n))
}

fn tri_inv<R: Ring>(r: &R, t: &DenseMatrix<R::Elem>, side: Side) -> Result<DenseMatrix<R::Elem>> {
    let n = t.rows;
    if n == 1 {
        return Ok(DenseMatrix::new(1, 1, vec![r.inv(t.get(0, 0))?]));
    }
    let h = n / 2;
    let a1 = t.submatrix(0..h, 0..h);
    let a2 = t.submatrix(h..n, h..n);
    let i1 = tri_inv(r, &a1, side)?;
    let i2 = tri_inv(r, &a2, side)?;
    let z = DenseMatrix::zeros(r, h, h);
    let mm = |x: &DenseMatrix<R::Elem>, y: &DenseMatrix<R::Elem>| {
        mat_mul(r, x, y, MatMulStrategy::Auto, DEFAULT_CUTOFF).expect("square blocks")
    };
    Ok(match side {
        Side::Lower => {
            let a3 = t.submatrix(h..n, 0..h);
            let off = neg(r, &mm(&mm(&i2, &a3), &i1));
            assemble(&i1, &z, &off, &i2)
        }
        Side::Upper => {
            let a3 = t.submatrix(0..h, h..n);
            let off = neg(r, &mm(&mm(&i1, &a3), &i2));
            assemble(&i1, &off, &z, &i2)
        }
    })
}

/// Header and literals of a matrix text file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixText {
    pub rows: usize,
    pub cols: usize,
    pub ring_spec: String,
    pub literals: Vec<String>,
}

impl MatrixText {
    pub fn parse(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let mut h = header.split_whitespace();
        let bad = || Error::Parse(format!("bad matrix header '{header}'"));
        let rows: usize = h.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let cols: usize = h.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let ring_spec: String = h.collect::<Vec<_>>().join("");
        if ring_spec.is_empty() {
            return Err(bad());
        }
        let literals: Vec<String> = lines.flat_map(|l| l.split_whitespace()).map(str::to_string).collect();
        if literals.len() != rows * cols {
            return Err(Error::Parse(format!("expected {} entries, found {}", rows * cols, literals.len())));
        }
        Ok(MatrixText { rows, cols, ring_spec, literals })
    }

    pub fn to_matrix<R: Ring>(&self, r: &R) -> Result<DenseMatrix<R::Elem>> {
        let data = self.literals.iter().map(|l| r.parse(l)).collect::<Result<Vec<_>>>()?;
        Ok(DenseMatrix::new(self.rows, self.cols, data))
    }
}

/// Render in the text format. Entries must not contain whitespace, which
/// holds for every literal the rings produce.
pub fn format_matrix<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>) -> String {
    let mut out = format!("{} {} {}\n", a.rows, a.cols, r.describe());
    for i in 0..a.rows {
        let row: Vec<String> = a.row(i).iter().map(|x| r.format(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{with_counting, Counted, Integers, Zmod};

    #[test]
    fn identity_is_neutral() {
        let z = Integers;
        let a = DenseMatrix::from_i64(&z, 2, 3, &[1, 2, 3, 4, 5, 6]);
        let i = DenseMatrix::identity(&z, 2);
        assert_eq!(mat_mul(&z, &i, &a, MatMulStrategy::Strassen, 1).unwrap(), a);
        assert!(matches!(mat_mul(&z, &a, &a, MatMulStrategy::Classical, 1), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn strassen_two_by_two_counts() {
        let r = Counted::new(Zmod::new(10007));
        let a = DenseMatrix::from_i64(&r, 2, 2, &[1, 2, 3, 4]);
        let b = DenseMatrix::from_i64(&r, 2, 2, &[5, 6, 7, 8]);
        let (c, s) = with_counting(|| mat_mul(&r, &a, &b, MatMulStrategy::Strassen, 1).unwrap());
        assert_eq!(s.muls, 7);
        assert_eq!(s.additive(), 15);
        assert_eq!(c, mat_mul(&r, &a, &b, MatMulStrategy::Classical, 1).unwrap());
    }

    #[test]
    fn unitriangular_inverse() {
        let z = Integers;
        let t = DenseMatrix::from_i64(&z, 2, 2, &[1, 0, 7, 1]);
        let ti = triangular_inverse(&z, &t, Side::Lower).unwrap();
        assert_eq!(ti, DenseMatrix::from_i64(&z, 2, 2, &[1, 0, -7, 1]));
        let bad = DenseMatrix::from_i64(&z, 2, 2, &[1, 0, 7, 2]);
        assert_eq!(triangular_inverse(&z, &bad, Side::Lower), Err(Error::NotInvertibleDiagonal(1)));
    }

    #[test]
    fn text_round_trip() {
        let z = Integers;
        let a = DenseMatrix::from_i64(&z, 2, 2, &[1, -2, 30, 4]);
        let text = format_matrix(&z, &a);
        assert_eq!(text, "2 2 z\n1 -2\n30 4\n");
        let parsed = MatrixText::parse(&text).unwrap();
        assert_eq!(parsed.to_matrix(&z).unwrap(), a);
    }
}
