//! Benchmark harness: seeded matrix families, cross-validation of the
//! characteristic-polynomial algorithms, timing and operation counts.

mod any;
mod report;

pub use any::{AnyMatrix, MatrixVisitor};
pub use report::{run_benchmark, BenchConfig, BenchReport, CSV_HEADER};

use crate::charpoly::{charpoly, Algorithm, CharPoly, Requirement};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::poly;
use crate::ring::{
    with_counting_bits, Counted, Frac, GcdDomain, Integers, MPoly, OpStats, PolyRing, QuotientRing, Ring, Zmod,
};
use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::time::Instant;

/// Nonzero entries of a group-5 matrix: ⌈2n⌉.
pub fn sparse_nonzeros(n: usize) -> usize {
    2 * n
}

/// Ring parameters for a matrix family. Unused fields are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupParams {
    /// Group 3 modulus.
    pub p: Option<u64>,
    /// Group 2 and 3 variables.
    pub vars: Vec<String>,
    /// Group 3 ideal generators, as literals.
    pub ideal: Vec<String>,
    /// Group 4: substitute this integer for x instead of working in Z[x].
    pub x: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub group: u8,
    pub n: usize,
    pub seed: u64,
    pub params: GroupParams,
    pub algo: Algorithm,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunStatus {
    Done,
    Skipped(Error),
    Failed(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub case: BenchCase,
    pub ring: String,
    pub ms: f64,
    pub stats: OpStats,
    pub max_bits: u64,
    pub digest: String,
    pub status: RunStatus,
}

/// One measured run.
#[derive(Debug, Clone, PartialEq)]
pub struct Measured<E> {
    pub charpoly: CharPoly<E>,
    pub stats: OpStats,
    pub max_bits: u64,
    pub ms: f64,
}

/// Rings the harness can drive. Z runs the field-only algorithms
/// (Hessenberg, and Frobenius whose reductions need exact quotients) in Q
/// and maps the result back. Polynomial rings route only Frobenius that
/// way: Hessenberg over rational functions blows up (minutes at n = 5), so
/// it is reported as not applicable there.
pub trait BenchRing: Ring {
    /// `Err` carries the reason an algorithm is skipped on this ring.
    fn applicable(&self, n: usize, alg: Algorithm) -> Result<()> {
        default_applicable(self, n, alg)
    }

    fn run(&self, a: &DenseMatrix<Self::Elem>, alg: Algorithm) -> Result<Measured<Self::Elem>> {
        measure(self, a, alg)
    }
}

fn default_applicable<R: Ring>(r: &R, n: usize, alg: Algorithm) -> Result<()> {
    let spec = r.spec();
    if alg.applies_to(&spec, n) {
        return Ok(());
    }
    let integer_division = matches!(
        alg.requirement(),
        Requirement::IntegerDivision | Requirement::DomainWithIntegerDivision
    );
    if integer_division && !spec.divides_integers_up_to(n as u64) {
        let k = spec.max_invertible_integer.map_or(0, |m| m + 1);
        return Err(Error::IntegerNotInvertible(k));
    }
    Err(Error::NotApplicable(format!("{alg} needs {:?} over {}", alg.requirement(), r.describe())))
}

fn field_only(alg: Algorithm) -> bool {
    matches!(alg.requirement(), Requirement::Field) || alg == Algorithm::Frobenius
}

fn frobenius_only(alg: Algorithm) -> bool {
    alg == Algorithm::Frobenius
}

/// Counted, timed run of one algorithm.
pub fn measure<R: Ring>(r: &R, a: &DenseMatrix<R::Elem>, alg: Algorithm) -> Result<Measured<R::Elem>> {
    let c = Counted::new(r.clone());
    let start = Instant::now();
    let (res, stats, max_bits) = with_counting_bits(|| charpoly(&c, a, alg));
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Measured { charpoly: res?, stats, max_bits, ms })
}

fn via_fraction_field<R: GcdDomain>(r: &R, a: &DenseMatrix<R::Elem>, alg: Algorithm) -> Result<Measured<R::Elem>> {
    let q = Frac::new(r.clone());
    let aq = a.map(|x| q.embed(x.clone()));
    let m = measure(&q, &aq, alg)?;
    let coeffs = m
        .charpoly
        .coeffs
        .iter()
        .map(|c| q.as_integral(c).ok_or_else(|| Error::ExactDivisionFailed("non-integral coefficient".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Measured { charpoly: CharPoly { coeffs }, stats: m.stats, max_bits: m.max_bits, ms: m.ms })
}

macro_rules! domain_bench_ring {
    ($t:ty, $routed:expr) => {
        impl BenchRing for $t {
            fn applicable(&self, n: usize, alg: Algorithm) -> Result<()> {
                if $routed(alg) {
                    Ok(())
                } else {
                    default_applicable(self, n, alg)
                }
            }
            fn run(&self, a: &DenseMatrix<Self::Elem>, alg: Algorithm) -> Result<Measured<Self::Elem>> {
                if $routed(alg) {
                    via_fraction_field(self, a, alg)
                } else {
                    measure(self, a, alg)
                }
            }
        }
    };
}

domain_bench_ring!(Integers, field_only);
domain_bench_ring!(PolyRing<Integers>, frobenius_only);
domain_bench_ring!(PolyRing<PolyRing<Integers>>, frobenius_only);
impl BenchRing for Frac<Integers> {}
impl BenchRing for Zmod {}
impl BenchRing for QuotientRing {}

/// Canonical text of a characteristic polynomial: coefficients of
/// det(A - X·I), highest degree first, separated by ';'.
pub fn canonical_text<R: Ring>(r: &R, p: &CharPoly<R::Elem>) -> String {
    p.coeffs.iter().map(|c| r.format(c)).collect::<Vec<_>>().join(";")
}

/// First 16 hex digits of the SHA-256 of the canonical text.
pub fn digest<R: Ring>(r: &R, p: &CharPoly<R::Elem>) -> String {
    let h = Sha256::digest(canonical_text(r, p).as_bytes());
    hex::encode(&h[..8])
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgoRun {
    pub algo: Algorithm,
    pub status: RunStatus,
    pub text: Option<String>,
    pub digest: Option<String>,
    pub stats: OpStats,
    pub max_bits: u64,
    pub ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub first: Algorithm,
    pub second: Algorithm,
    pub first_poly: String,
    pub second_poly: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub runs: Vec<AlgoRun>,
    pub disagreements: Vec<Disagreement>,
}

impl ValidationReport {
    /// Every applicable algorithm ran and all results coincide.
    pub fn is_unanimous(&self) -> bool {
        self.disagreements.is_empty() && !self.runs.iter().any(|r| matches!(r.status, RunStatus::Failed(_)))
    }

    pub fn computed(&self) -> impl Iterator<Item = &AlgoRun> {
        self.runs.iter().filter(|r| r.status == RunStatus::Done)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &AlgoRun> {
        self.runs.iter().filter(|r| matches!(r.status, RunStatus::Skipped(_)))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.runs {
            let line = match &r.status {
                RunStatus::Done => format!(
                    "{:<18} ok       {} muls={} total={} ms={:.3}",
                    r.algo.name(),
                    r.digest.as_deref().unwrap_or(""),
                    r.stats.muls,
                    r.stats.total(),
                    r.ms
                ),
                RunStatus::Skipped(e) => format!("{:<18} skipped  {e}", r.algo.name()),
                RunStatus::Failed(e) => format!("{:<18} FAILED   {e}", r.algo.name()),
            };
            out.push_str(&line);
            out.push('\n');
        }
        for d in &self.disagreements {
            out.push_str(&format!(
                "disagreement: {} gives [{}], {} gives [{}]\n",
                d.first, d.first_poly, d.second, d.second_poly
            ));
        }
        out
    }
}

/// Runs every algorithm in `algos`, skipping the ones whose ring
/// requirements fail, and compares the results against the first.
pub fn cross_validate<R: BenchRing>(r: &R, a: &DenseMatrix<R::Elem>, algos: &[Algorithm]) -> ValidationReport {
    let n = a.rows();
    let mut runs = Vec::new();
    for &algo in algos {
        let mut run =
            AlgoRun { algo, status: RunStatus::Done, text: None, digest: None, stats: OpStats::default(), max_bits: 0, ms: 0.0 };
        match r.applicable(n, algo).and_then(|_| Ok(r.run(a, algo))) {
            Err(e) => run.status = RunStatus::Skipped(e),
            Ok(Err(e)) => run.status = RunStatus::Failed(e),
            Ok(Ok(m)) => {
                run.text = Some(canonical_text(r, &m.charpoly));
                run.digest = Some(digest(r, &m.charpoly));
                run.stats = m.stats;
                run.max_bits = m.max_bits;
                run.ms = m.ms;
            }
        }
        runs.push(run);
    }
    let mut disagreements = Vec::new();
    let mut done = runs.iter().filter(|r| r.status == RunStatus::Done);
    if let Some(base) = done.next() {
        for other in done {
            if other.text != base.text {
                disagreements.push(Disagreement {
                    first: base.algo,
                    second: other.algo,
                    first_poly: base.text.clone().unwrap_or_default(),
                    second_poly: other.text.clone().unwrap_or_default(),
                });
            }
        }
    }
    ValidationReport { runs, disagreements }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidGroupParams(msg.into())
}

fn rng_for(group: u8, n: usize, seed: u64) -> ChaCha8Rng {
    // distinct streams per (group, n, seed)
    let mixed = seed ^ ((group as u64) << 56) ^ ((n as u64) << 32).rotate_left(7);
    ChaCha8Rng::seed_from_u64(mixed)
}

fn small_int(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen_range(-99i64..=99))
}

/// Group 2 entry: six random terms of total degree ≤ 5.
fn random_bivariate(rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    let z = Integers;
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for _ in 0..6 {
        let total = rng.gen_range(0..=5usize);
        let i = rng.gen_range(0..=total);
        let j = total - i;
        // coefficient of x^i y^j: outer index j, inner index i
        if out.len() <= j {
            out.resize(j + 1, Vec::new());
        }
        if out[j].len() <= i {
            out[j].resize(i + 1, BigInt::from(0));
        }
        out[j][i] += small_int(rng);
    }
    let inner = PolyRing::new(z, "x");
    let mut out: Vec<Vec<BigInt>> = out.into_iter().map(|c| poly::normalized(&z, c)).collect();
    poly::normalize(&inner, &mut out);
    out
}

fn random_univariate(rng: &mut ChaCha8Rng, max_deg: usize, terms: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); max_deg + 1];
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        out[d] += small_int(rng);
    }
    poly::normalized(&Integers, out)
}

/// Jou(n, x)_{ij} = x + x^2 (x - ij)^2 + (x^2 + j)(x + i)^2, 1-based i, j.
pub fn jou_symbolic(n: usize) -> DenseMatrix<Vec<BigInt>> {
    let z = Integers;
    let px = |cs: &[i64]| poly::from_i64s(&z, cs);
    DenseMatrix::from_fn(n, n, |i, j| {
        let (i, j) = ((i + 1) as i64, (j + 1) as i64);
        let x = px(&[0, 1]);
        let x2 = px(&[0, 0, 1]);
        let xm = px(&[-i * j, 1]);
        let a = poly::mul_auto(&z, &x2, &poly::mul_auto(&z, &xm, &xm));
        let xi = px(&[i, 1]);
        let b = poly::mul_auto(&z, &px(&[j, 0, 1]), &poly::mul_auto(&z, &xi, &xi));
        poly::add(&z, &poly::add(&z, &x, &a), &b)
    })
}

/// Jou(n, x) with an integer substituted for x.
pub fn jou_at(n: usize, x: i64) -> DenseMatrix<BigInt> {
    let xv = BigInt::from(x);
    jou_symbolic(n).map(|p| poly::eval(&Integers, p, &xv))
}

fn quotient_ring(params: &GroupParams) -> Result<QuotientRing> {
    let p = params.p.ok_or_else(|| invalid("group 3 needs a modulus p"))?;
    if !crate::ring::is_prime_u64(p) {
        return Err(invalid(format!("group 3 modulus {p} is not prime")));
    }
    if params.vars.is_empty() {
        return Err(invalid("group 3 needs at least one variable"));
    }
    let vars: Vec<&str> = params.vars.iter().map(String::as_str).collect();
    let gens: Vec<&str> = params.ideal.iter().map(String::as_str).collect();
    QuotientRing::from_literals(p, &vars, &gens).map_err(|e| invalid(e.to_string()))
}

/// Uniform reduced element: every basis monomial gets a coefficient in
/// [0, p); variables without a generator get degree < 3.
fn random_quotient(q: &QuotientRing, rng: &mut ChaCha8Rng) -> MPoly {
    let k = q.vars().len();
    let degs: Vec<u32> = (0..k).map(|i| q.degrees().get(i).copied().unwrap_or(3)).collect();
    let mut exps = vec![Vec::new()];
    for &d in &degs {
        exps = exps
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..d).map(move |x| {
                    let mut f = e.clone();
                    f.push(x);
                    f
                })
            })
            .collect();
    }
    let mut out = MPoly::new();
    for e in exps {
        let c = rng.gen_range(0..q.modulus());
        if c != 0 {
            out.insert(e, c);
        }
    }
    q.reduce(out)
}

/// Seeded matrix of the requested family.
pub fn generate_matrix(group: u8, n: usize, seed: u64, params: &GroupParams) -> Result<AnyMatrix> {
    let mut rng = rng_for(group, n, seed);
    match group {
        1 => Ok(AnyMatrix::Z(DenseMatrix::from_fn(n, n, |_, _| small_int(&mut rng)))),
        2 => match params.vars.len() {
            0 | 2 => {
                let (vx, vy) = match params.vars.as_slice() {
                    [a, b] => (a.clone(), b.clone()),
                    _ => ("x".to_string(), "y".to_string()),
                };
                let r = PolyRing::new(PolyRing::new(Integers, vx), vy);
                Ok(AnyMatrix::Poly2(r, DenseMatrix::from_fn(n, n, |_, _| random_bivariate(&mut rng))))
            }
            1 => {
                let r = PolyRing::new(Integers, params.vars[0].clone());
                Ok(AnyMatrix::Poly1(r, DenseMatrix::from_fn(n, n, |_, _| random_univariate(&mut rng, 5, 6))))
            }
            k => Err(invalid(format!("group 2 takes one or two variables, got {k}"))),
        },
        3 => {
            let q = quotient_ring(params)?;
            let m = DenseMatrix::from_fn(n, n, |_, _| random_quotient(&q, &mut rng));
            Ok(AnyMatrix::Quotient(q, m))
        }
        4 => match params.x {
            Some(x) => Ok(AnyMatrix::Z(jou_at(n, x))),
            None => Ok(AnyMatrix::Poly1(PolyRing::new(Integers, "x"), jou_symbolic(n))),
        },
        5 => {
            let mut m = DenseMatrix::from_fn(n, n, |_, _| BigInt::from(0));
            let k = sparse_nonzeros(n).min(n * n);
            for idx in sample(&mut rng, n * n, k).into_iter() {
                let mut v = 0;
                while v == 0 {
                    v = rng.gen_range(-99i64..=99);
                }
                m.set(idx / n, idx % n, BigInt::from(v));
            }
            Ok(AnyMatrix::Z(m))
        }
        g => Err(invalid(format!("unknown group {g}"))),
    }
}

/// Random Z[x] matrix with entries of degree ≤ `deg`, coefficients in [-99, 99].
pub fn random_zx(n: usize, deg: usize, seed: u64) -> DenseMatrix<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DenseMatrix::from_fn(n, n, |_, _| {
        let cs: Vec<BigInt> = (0..=deg).map(|_| small_int(&mut rng)).collect();
        poly::normalized(&Integers, cs)
    })
}

#[cfg(test)]
mod tests;
