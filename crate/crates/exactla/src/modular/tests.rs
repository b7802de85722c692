use super::*;
use crate::charpoly::charpoly_berkowitz;
use crate::elimination::jordan_bareiss;
use crate::ring::{is_prime_u64, Integers};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zm(n: usize, v: &[i64]) -> DenseMatrix<BigInt> {
    DenseMatrix::from_i64(&Integers, n, n, v)
}

fn random_z(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn prime_pool_is_the_top_of_the_range() {
    assert_eq!(PRIME_POOL[0], (1u64 << 61) - 1);
    for w in PRIME_POOL.windows(2) {
        assert!(w[0] > w[1]);
        assert!((w[1] + 1..w[0]).all(|k| !is_prime_u64(k)));
    }
    assert!(PRIME_POOL.iter().all(|&p| is_prime_u64(p)));
}

#[test]
fn hadamard_examples() {
    let id = DenseMatrix::identity(&Integers, 4);
    assert_eq!(hadamard_bound(&id).unwrap(), big(1));
    assert_eq!(hadamard_bound(&zm(2, &[3, 4, 0, 5])).unwrap(), big(20));
    // all entries M: M^n n^{n/2}
    let all7 = DenseMatrix::from_fn(4, 4, |_, _| big(7));
    assert_eq!(hadamard_bound(&all7).unwrap(), big(7i64.pow(4) * 16));
}

#[test]
fn hadamard_dominates_det() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..8 {
        let a = random_z(&mut rng, n, 50);
        let d = charpoly_berkowitz(&Integers, &a, false).unwrap().det().clone();
        assert!(d.abs() <= hadamard_bound(&a).unwrap());
    }
}

#[test]
fn coeff_bounds() {
    let z = DenseMatrix::zeros(&Integers, 3, 3);
    let b = charpoly_coeff_bound(&z).unwrap();
    assert_eq!(b.per_coeff, vec![big(1), big(0), big(0), big(0)]);

    let n = 6;
    let b = charpoly_coeff_bound(&DenseMatrix::identity(&Integers, n)).unwrap();
    for k in 0..=n {
        assert!(b.per_coeff[k] >= binomial(BigInt::from(n), BigInt::from(k)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_z(&mut rng, 5, 99);
        let b = charpoly_coeff_bound(&a).unwrap();
        let p = charpoly_berkowitz(&Integers, &a, false).unwrap();
        for (c, bk) in p.coeffs.iter().zip(&b.per_coeff) {
            assert!(&c.abs() <= bk);
            assert!(bk <= &b.global);
        }
    }
}

#[test]
fn crt_examples() {
    let sys = |m: &[i64], r: &[i64]| {
        ResidueSystem::new(m.iter().map(|&x| big(x)).collect(), r.iter().map(|&x| big(x)).collect()).unwrap()
    };
    assert_eq!(crt_reconstruct(&sys(&[3, 5], &[1, 2]), &big(7)).unwrap(), big(7));
    assert_eq!(crt_reconstruct(&sys(&[3, 5], &[2, 4]), &big(2)).unwrap(), big(-1));
    assert_eq!(crt_reconstruct(&sys(&[11], &[3]), &big(5)).unwrap(), big(3));
    assert_eq!(crt_reconstruct(&sys(&[3, 5], &[1, 2]), &big(6)), Err(Error::NoCandidateWithinBound));
    assert!(ResidueSystem::new(vec![big(6), big(4)], vec![big(1), big(1)]).is_err());
}

#[test]
fn crt_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let moduli: Vec<BigInt> = PRIME_POOL[..3].iter().map(|&p| BigInt::from(p)).collect();
    let prod: BigInt = moduli.iter().product();
    let bound = (&prod - 1) / 2;
    for _ in 0..200 {
        let bits: Vec<u64> = (0..3).map(|_| rng.gen()).collect();
        let mut x = BigInt::from(bits[0]) * BigInt::from(bits[1]) * BigInt::from(bits[2] >> 4);
        x %= &bound;
        if rng.gen() {
            x = -x;
        }
        let residues = moduli.iter().map(|m| x.mod_floor(m)).collect();
        let sys = ResidueSystem::new(moduli.clone(), residues).unwrap();
        assert_eq!(crt_reconstruct(&sys, &bound).unwrap(), x);
    }
}

#[test]
fn modular_identity() {
    let n = 5;
    let p = charpoly_modular_default(&DenseMatrix::identity(&Integers, n)).unwrap();
    // (1 - X)^5 descending: -1, 5, -10, 10, -5, 1
    assert_eq!(p.coeffs, [-1, 5, -10, 10, -5, 1].map(big).to_vec());
}

#[test]
fn modular_matches_berkowitz() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in [1, 3, 6, 10] {
        let a = random_z(&mut rng, n, 99);
        let want = charpoly_berkowitz(&Integers, &a, false).unwrap();
        assert_eq!(charpoly_modular_default(&a).unwrap(), want);
        assert_eq!(charpoly_modular(&a, Algorithm::Berkowitz).unwrap(), want);
    }
}

#[test]
fn modular_det_matches_bareiss() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let a = random_z(&mut rng, 12, 99);
    let t = jordan_bareiss(&Integers, &a).unwrap();
    let want = t.entries.get(11, 11).clone();
    assert_eq!(det_modular(&a).unwrap(), want);
    assert_eq!(charpoly_modular_default(&a).unwrap().det(), &want);
}

#[test]
fn singular_and_empty() {
    let a = zm(3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
    assert_eq!(det_modular(&a).unwrap(), big(0));
    let e: DenseMatrix<BigInt> = DenseMatrix::from_fn(0, 0, |_, _| big(0));
    assert_eq!(det_modular(&e).unwrap(), big(1));
}
