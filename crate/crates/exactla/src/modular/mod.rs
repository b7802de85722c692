//! Hadamard bounds, Chinese remaindering, and determinants and
//! characteristic polynomials over Z computed modulo word-sized primes.

mod primes;

pub use primes::PRIME_POOL;

use crate::charpoly::{charpoly, Algorithm, CharPoly};
use crate::elimination::det_gauss;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::ring::{Ring, Zmod};
use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Bounds B_k on |μ_k|, the coefficient of X^{n-k} in P_A, and the global
/// (2M)^n n^{n/2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffBound {
    pub per_coeff: Vec<BigInt>,
    pub global: BigInt,
}

impl CoeffBound {
    pub fn max(&self) -> BigInt {
        self.per_coeff.iter().max().cloned().unwrap_or_else(BigInt::one)
    }
}

/// x ≡ residues[i] (mod moduli[i]) with pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    pub moduli: Vec<BigInt>,
    pub residues: Vec<BigInt>,
}

impl ResidueSystem {
    pub fn new(moduli: Vec<BigInt>, residues: Vec<BigInt>) -> Result<Self> {
        if moduli.len() != residues.len() || moduli.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "{} moduli for {} residues",
                moduli.len(),
                residues.len()
            )));
        }
        for (i, m) in moduli.iter().enumerate() {
            if !m.is_positive() {
                return Err(Error::DimensionMismatch(format!("modulus {m} is not positive")));
            }
            if moduli[..i].iter().any(|o| !o.gcd(m).is_one()) {
                return Err(Error::DimensionMismatch(format!("modulus {m} is not coprime to the others")));
            }
        }
        Ok(Self { moduli, residues })
    }

    pub fn product(&self) -> BigInt {
        self.moduli.iter().product()
    }
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let s = x.sqrt();
    if &(&s * &s) == x {
        s
    } else {
        s + 1
    }
}

fn max_abs(a: &DenseMatrix<BigInt>) -> BigInt {
    a.entries().iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

fn square(a: &DenseMatrix<BigInt>) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{}x{} is not square", a.rows(), a.cols())))
    }
}

/// ⌈Π_j ||a_j||⌉ over the columns, computed exactly as the ceiling of the
/// square root of the product of squared norms.
pub fn hadamard_bound(a: &DenseMatrix<BigInt>) -> Result<BigInt> {
    square(a)?;
    let prod: BigInt = (0..a.cols()).map(|j| a.col(j).iter().map(|x| x * x).sum::<BigInt>()).product();
    Ok(ceil_sqrt(&prod))
}

/// B_k = ⌈C(n,k) M^k k^{k/2}⌉ and the global ⌈(2M)^n n^{n/2}⌉, M = max |a_ij|.
pub fn charpoly_coeff_bound(a: &DenseMatrix<BigInt>) -> Result<CoeffBound> {
    square(a)?;
    let n = a.rows();
    let m = max_abs(a);
    let per_coeff = (0..=n)
        .map(|k| {
            let c = binomial(BigInt::from(n), BigInt::from(k));
            let mk = num_traits::pow(m.clone(), k);
            let kk = num_traits::pow(BigInt::from(k), k);
            ceil_sqrt(&(&c * &c * &mk * &mk * kk))
        })
        .collect();
    let two_m_n = num_traits::pow(BigInt::from(2) * &m, n);
    let global = ceil_sqrt(&(&two_m_n * &two_m_n * num_traits::pow(BigInt::from(n), n)));
    Ok(CoeffBound { per_coeff, global })
}

/// The x congruent to every residue, taken in (-∏/2, ∏/2] and accepted only
/// when |x| ≤ bound.
pub fn crt_reconstruct(sys: &ResidueSystem, bound: &BigInt) -> Result<BigInt> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (mi, ri) in sys.moduli.iter().zip(&sys.residues) {
        // x + m·t ≡ ri (mod mi)
        let diff = (ri - &x).mod_floor(mi);
        let inv = mod_inverse(&m.mod_floor(mi), mi).ok_or(Error::NoCandidateWithinBound)?;
        let t = (diff * inv).mod_floor(mi);
        x += &m * t;
        m *= mi;
    }
    let half = &m >> 1;
    if x > half {
        x -= &m;
    }
    if &x.abs() > bound {
        return Err(Error::NoCandidateWithinBound);
    }
    Ok(x)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn reduce(z: &Zmod, a: &DenseMatrix<BigInt>) -> DenseMatrix<u64> {
    a.map(|x| z.from_bigint(x))
}

/// Runs `f` modulo pool primes until their product exceeds 2·bound. Primes
/// on which `f` fails (a bad reduction) are skipped.
fn multi_modular<T, F>(bound: &BigInt, f: F) -> Result<(Vec<u64>, Vec<T>)>
where
    T: Send,
    F: Fn(&Zmod) -> Result<T> + Sync,
{
    let target = bound * 2;
    let mut primes = Vec::new();
    let mut values = Vec::new();
    let mut prod = BigInt::one();
    let mut next = 0;
    while prod <= target {
        // enough primes for the remaining gap, each contributing at least 2^60
        let gap_bits = (&target / &prod).bits() + 1;
        let want = gap_bits.div_ceil(60) as usize;
        if next >= PRIME_POOL.len() {
            return Err(Error::PrimePoolExhausted);
        }
        let batch = &PRIME_POOL[next..(next + want).min(PRIME_POOL.len())];
        next += batch.len();
        let results: Vec<(u64, Result<T>)> = batch.par_iter().map(|&p| (p, f(&Zmod::new(p)))).collect();
        for (p, res) in results {
            match res {
                Ok(v) => {
                    primes.push(p);
                    values.push(v);
                    prod *= p;
                }
                Err(Error::ExactDivisionFailed(_) | Error::NotUnit | Error::ZeroDivisor) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok((primes, values))
}

fn reconstruct(primes: &[u64], residues: Vec<BigInt>, bound: &BigInt) -> Result<BigInt> {
    let sys = ResidueSystem { moduli: primes.iter().map(|&p| BigInt::from(p)).collect(), residues };
    crt_reconstruct(&sys, bound)
}

/// P_A over Z from `algo` run modulo enough primes, then per-coefficient CRT.
pub fn charpoly_modular(a: &DenseMatrix<BigInt>, algo: Algorithm) -> Result<CharPoly<BigInt>> {
    let bound = charpoly_coeff_bound(a)?;
    let n = a.rows();
    let (primes, polys) = multi_modular(&bound.max(), |z| charpoly(z, &reduce(z, a), algo))?;
    let coeffs = (0..=n)
        .map(|k| {
            let residues = polys.iter().map(|p| BigInt::from(p.coeffs[k])).collect();
            reconstruct(&primes, residues, &bound.per_coeff[k])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharPoly { coeffs })
}

pub fn charpoly_modular_default(a: &DenseMatrix<BigInt>) -> Result<CharPoly<BigInt>> {
    charpoly_modular(a, Algorithm::Hessenberg)
}

/// det(A) over Z from Gaussian elimination modulo primes, bounded by Hadamard.
pub fn det_modular(a: &DenseMatrix<BigInt>) -> Result<BigInt> {
    let bound = hadamard_bound(a)?;
    let (primes, dets) = multi_modular(&bound, |z| det_gauss(z, &reduce(z, a)))?;
    reconstruct(&primes, dets.into_iter().map(BigInt::from).collect(), &bound)
}

#[cfg(test)]
mod tests;
