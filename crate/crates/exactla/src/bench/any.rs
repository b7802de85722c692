use super::BenchRing;
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, MatrixText};
use crate::ring::{Frac, FracElem, Integers, MPoly, PolyRing, QuotientRing, Zmod};
use num_bigint::BigInt;

/// A matrix together with its ring, chosen at run time.
#[derive(Debug, Clone)]
pub enum AnyMatrix {
    Z(DenseMatrix<BigInt>),
    Q(DenseMatrix<FracElem<BigInt>>),
    Zp(Zmod, DenseMatrix<u64>),
    Poly1(PolyRing<Integers>, DenseMatrix<Vec<BigInt>>),
    Poly2(PolyRing<PolyRing<Integers>>, DenseMatrix<Vec<Vec<BigInt>>>),
    Quotient(QuotientRing, DenseMatrix<MPoly>),
}

/// Generic operation applied to whichever ring an [`AnyMatrix`] carries.
pub trait MatrixVisitor {
    type Output;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> Self::Output;
}

fn bad_spec(spec: &str) -> Error {
    Error::Parse(format!("unsupported ring spec '{spec}'"))
}

impl AnyMatrix {
    pub fn visit<V: MatrixVisitor>(&self, v: V) -> V::Output {
        match self {
            AnyMatrix::Z(a) => v.visit(&Integers, a),
            AnyMatrix::Q(a) => v.visit(&Frac::new(Integers), a),
            AnyMatrix::Zp(r, a) => v.visit(r, a),
            AnyMatrix::Poly1(r, a) => v.visit(r, a),
            AnyMatrix::Poly2(r, a) => v.visit(r, a),
            AnyMatrix::Quotient(r, a) => v.visit(r, a),
        }
    }

    pub fn rows(&self) -> usize {
        self.visit(Shape).0
    }

    pub fn cols(&self) -> usize {
        self.visit(Shape).1
    }

    pub fn ring_description(&self) -> String {
        self.visit(Describe)
    }

    /// Parse the matrix text format. Ring specs: `z`, `q`, `zp:<p>`,
    /// `z[x]`, `z[x,y]`, and quotient rings `zp:<p>[vars]/<poly>;<poly>`.
    pub fn parse(text: &str) -> Result<AnyMatrix> {
        let t = MatrixText::parse(text)?;
        let spec = t.ring_spec.trim().to_ascii_lowercase();
        if spec == "z" {
            return Ok(AnyMatrix::Z(t.to_matrix(&Integers)?));
        }
        if spec == "q" {
            return Ok(AnyMatrix::Q(t.to_matrix(&Frac::new(Integers))?));
        }
        if let Some(rest) = spec.strip_prefix("zp:") {
            if rest.contains('[') {
                let q = QuotientRing::parse_spec(&t.ring_spec)?;
                return Ok(AnyMatrix::Quotient(q.clone(), t.to_matrix(&q)?));
            }
            let p: u64 = rest.parse().map_err(|_| bad_spec(&spec))?;
            if p < 2 {
                return Err(bad_spec(&spec));
            }
            let r = Zmod::new(p);
            return Ok(AnyMatrix::Zp(r, t.to_matrix(&r)?));
        }
        if let Some(vars) = spec.strip_prefix("z[").and_then(|s| s.strip_suffix(']')) {
            let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
            return match vars.as_slice() {
                [x] => {
                    let r = PolyRing::new(Integers, *x);
                    Ok(AnyMatrix::Poly1(r.clone(), t.to_matrix(&r)?))
                }
                [x, y] => {
                    let r = PolyRing::new(PolyRing::new(Integers, *x), *y);
                    Ok(AnyMatrix::Poly2(r.clone(), t.to_matrix(&r)?))
                }
                _ => Err(bad_spec(&spec)),
            };
        }
        Err(bad_spec(&spec))
    }

    pub fn to_text(&self) -> String {
        self.visit(Render)
    }
}

struct Shape;

impl MatrixVisitor for Shape {
    type Output = (usize, usize);
    fn visit<R: BenchRing>(self, _r: &R, a: &DenseMatrix<R::Elem>) -> (usize, usize) {
        (a.rows(), a.cols())
    }
}

struct Describe;

impl MatrixVisitor for Describe {
    type Output = String;
    fn visit<R: BenchRing>(self, r: &R, _a: &DenseMatrix<R::Elem>) -> String {
        r.describe()
    }
}

struct Render;

impl MatrixVisitor for Render {
    type Output = String;
    fn visit<R: BenchRing>(self, r: &R, a: &DenseMatrix<R::Elem>) -> String {
        crate::matrix::format_matrix(r, a)
    }
}
