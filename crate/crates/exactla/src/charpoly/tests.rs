use super::*;
use crate::ring::{with_counting, Counted, Frac, Integers, PolyRing, Zmod};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zm(n: usize, v: &[i64]) -> DenseMatrix<BigInt> {
    DenseMatrix::from_i64(&Integers, n, n, v)
}

fn ints(p: &CharPoly<BigInt>) -> Vec<i64> {
    p.coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect()
}

fn random_z(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

fn q() -> Frac<Integers> {
    Frac::new(Integers)
}

fn to_q(a: &DenseMatrix<BigInt>) -> DenseMatrix<crate::ring::FracElem<BigInt>> {
    let q = q();
    a.map(|x| q.embed(x.clone()))
}

fn generic(n: usize, seed: u64) -> DenseMatrix<BigInt> {
    // entries in 2..=9 keep every intermediate pivot nonzero in practice
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DenseMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(2..=9)))
}

#[test]
fn identity_two() {
    let id = zm(2, &[1, 0, 0, 1]);
    for alg in Algorithm::ALL {
        let p = if alg.requirement() == Requirement::AnyRing {
            charpoly(&Integers, &id, alg).unwrap()
        } else {
            let qp = charpoly(&q(), &to_q(&id), alg).unwrap();
            qp.map(|c| q().as_integral(c).unwrap())
        };
        assert_eq!(ints(&p), vec![1, -2, 1], "{alg}");
    }
}

#[test]
fn symbolic_two_by_two() {
    let zabcd = PolyRing::new(PolyRing::new(PolyRing::new(PolyRing::new(Integers, "a"), "b"), "c"), "d");
    let a = DenseMatrix::from_rows(vec![
        vec![zabcd.parse("a^1").unwrap(), zabcd.parse("b^1").unwrap()],
        vec![zabcd.parse("c^1").unwrap(), zabcd.parse("d^1").unwrap()],
    ]);
    let expected = vec![zabcd.one(), zabcd.parse("-a^1 - d^1").unwrap(), zabcd.parse("a^1*d^1 - b^1*c^1").unwrap()];
    for alg in [Algorithm::Berkowitz, Algorithm::Chistov, Algorithm::BareissModified, Algorithm::Kaltofen] {
        assert_eq!(charpoly(&zabcd, &a, alg).unwrap().coeffs, expected, "{alg}");
    }
}

#[test]
fn berkowitz_count_at_four() {
    let a = generic(4, 1);
    let (_, st) = with_counting(|| charpoly_berkowitz(&Counted::new(Integers), &a, false).unwrap());
    assert_eq!(st.total(), 84);
}

#[test]
fn toeplitz_columns_start_with_minus_one() {
    let a = generic(5, 2);
    let cols = berkowitz_columns(&Integers, &a, false).unwrap();
    for (k, c) in cols.iter().enumerate() {
        assert_eq!(c.entries.len(), k + 3);
        assert_eq!(c.entries[0], BigInt::from(-1));
    }
}

#[test]
fn chistov_one_by_one_and_stage_one() {
    assert_eq!(ints(&charpoly_chistov(&Integers, &zm(1, &[1]), false).unwrap()), vec![-1, 1]);
    for n in 2..=6 {
        let a = generic(n, n as u64);
        let (_, stages) = chistov_with_stage_stats(&Counted::new(Integers), &a, false).unwrap();
        let expected: usize = (n - 1) + (2..=n).map(|r| (2 * r - 1) * (r * (n - 2) + 1)).sum::<usize>();
        assert_eq!(stages[0].total() as usize, expected, "n = {n}");
    }
}

#[test]
fn faddeev_small_cases() {
    let qq = q();
    let out = charpoly_faddeev(&qq, &to_q(&zm(2, &[1, 0, 0, 1]))).unwrap();
    assert_eq!(out.adjoint, to_q(&zm(2, &[1, 0, 0, 1])));
    assert_eq!(out.inverse, Some(to_q(&zm(2, &[1, 0, 0, 1]))));
    let out = charpoly_faddeev(&Integers, &zm(2, &[1, 0, 0, 2])).unwrap();
    assert_eq!(out.charpoly.det(), &BigInt::from(2));
    assert_eq!(out.adjoint, zm(2, &[2, 0, 0, 1]));
    assert_eq!(out.inverse, None);
    let a = generic(3, 9);
    let (_, st) = with_counting(|| faddeev_sequence(&Counted::new(Integers), &a).unwrap());
    assert_eq!(st.total(), 75);
}

#[test]
fn faddeev_sequence_closes() {
    let a = generic(5, 4);
    let seq = faddeev_sequence(&Integers, &a).unwrap();
    let last = matrix::mul(&Integers, &a, seq.b.last().unwrap());
    let cn = seq.c.last().unwrap();
    assert_eq!(last, matrix::scale(&Integers, cn, &DenseMatrix::identity(&Integers, 5)));
}

#[test]
fn leverrier_counts_and_identity() {
    let id = zm(3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
    assert_eq!(ints(&charpoly_leverrier(&Integers, &id).unwrap()), vec![-1, 3, -3, 1]);
    for n in 2..=6usize {
        let a = generic(n, 30 + n as u64);
        let (_, st) = with_counting(|| charpoly_leverrier(&Counted::new(Integers), &a).unwrap());
        assert_eq!(st.total() as usize, n * (2 * n - 1) * (n * n - 2 * n + 2), "n = {n}");
    }
}

#[test]
fn newton_examples() {
    let s = newton_convert(&Integers, NewtonDirection::CoeffsToSums, &[BigInt::from(3), BigInt::from(-2)]).unwrap();
    assert_eq!(s, vec![BigInt::from(3), BigInt::from(5)]);
    let a = newton_convert(&Integers, NewtonDirection::SumsToCoeffs, &s).unwrap();
    assert_eq!(a, vec![BigInt::from(3), BigInt::from(-2)]);
    let one = vec![BigInt::from(7)];
    assert_eq!(newton_convert(&Integers, NewtonDirection::CoeffsToSums, &one).unwrap(), one);
}

#[test]
fn preparata_sarwate_products() {
    let a = generic(9, 5);
    let (p, st) = preparata_sarwate_detailed(&Integers, &a).unwrap();
    assert_eq!((st.r, st.matrix_products), (3, 3));
    assert_eq!(p, charpoly_berkowitz(&Integers, &a, false).unwrap());
    for n in 1..=12 {
        let a = generic(n, 50 + n as u64);
        assert_eq!(charpoly_preparata_sarwate(&Integers, &a).unwrap(), charpoly_leverrier(&Integers, &a).unwrap());
    }
}

#[test]
fn hessenberg_examples() {
    let qq = q();
    let h = to_q(&zm(3, &[1, 0, 1, 1, 1, 1, 0, 0, 1]));
    let p = charpoly_hessenberg(&qq, &h).unwrap();
    assert_eq!(p, to_q_poly(&[-1, 3, -3, 1]));
    let a = to_q(&generic(3, 11));
    let (_, st) = with_counting(|| charpoly_hessenberg(&Counted::new(q()), &a).unwrap());
    assert_eq!(st.total(), 26);
}

fn to_q_poly(v: &[i64]) -> CharPoly<crate::ring::FracElem<BigInt>> {
    CharPoly { coeffs: v.iter().map(|&x| q().from_i64(x)).collect() }
}

#[test]
fn interpolation_diagonal() {
    let d = zm(3, &[1, 0, 0, 0, 2, 0, 0, 0, 3]);
    let expected = vec![-1, 6, -11, 6];
    assert_eq!(ints(&charpoly_interpolation(&q(), &to_q(&d)).unwrap().map(|c| q().as_integral(c).unwrap())), expected);
    assert_eq!(ints(&charpoly_interpolation(&Integers, &d).unwrap()), expected);
}

#[test]
fn frobenius_block_example() {
    let a = zm(
        7,
        &[
            1, 5, 43, 683, 794, 206, 268, -1, -2, -26, -458, -554, -148, -186, 0, 0, 1, 14, 18, 5, 6, 1, 3, 24, 387,
            469, 125, 157, 1, 4, 21, 300, 357, 92, 119, 2, 5, 53, 888, 1082, 292, 363, -7, -23, -163, -2547, -3074,
            -813, -1028,
        ],
    );
    let qq = q();
    let blocks = frobenius_blocks(&qq, &to_q(&a)).unwrap();
    assert_eq!(blocks.sizes, vec![2, 3, 2]);
    assert_eq!(blocks.starts, vec![0, 1, 2]);
    let factors = [vec![-4, -5, 1], vec![-2, -1, 2, 1], vec![-1, -5, 1]];
    let expected = factors
        .iter()
        .fold(vec![BigInt::from(1)], |acc, f| crate::poly::mul_auto(&Integers, &acc, &crate::poly::from_i64s(&Integers, f)));
    let expected = CharPoly::from_monic_ascending(&Integers, &expected);
    let p = charpoly_frobenius(&qq, &to_q(&a)).unwrap().map(|c| qq.as_integral(c).unwrap());
    assert_eq!(p, expected);
    assert_eq!(charpoly_berkowitz(&Integers, &a, false).unwrap(), expected);
}

#[test]
fn frobenius_identity_and_count() {
    let qq = q();
    let id = to_q(&zm(3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]));
    let blocks = frobenius_blocks(&qq, &id).unwrap();
    assert_eq!(blocks.sizes, vec![1, 1, 1]);
    assert_eq!(charpoly_frobenius(&qq, &id).unwrap(), to_q_poly(&[-1, 3, -3, 1]));
    for n in 2..=6usize {
        let a = generic(n, 70 + n as u64);
        let (_, st) = with_counting(|| charpoly_frobenius(&Counted::new(Integers), &a).unwrap());
        let expected = (10 * n * n * n + 11 * n) / 3 - 6 * n * n;
        assert_eq!(st.total() as usize, expected, "n = {n}");
    }
}

#[test]
fn kaltofen_center_values() {
    let c = kaltofen_center(&Integers, 10);
    let v: Vec<i64> = c.vector.iter().map(|x| i64::try_from(x).unwrap()).collect();
    assert_eq!(v, vec![1, 1, 2, 3, 6, 10, 20, 35, 70, 126]);
    let c7 = kaltofen_center(&Integers, 7);
    let last: Vec<i64> = c7.matrix.row(6).iter().map(|x| i64::try_from(x).unwrap()).collect();
    assert_eq!(last, vec![-1, 4, 6, -10, -5, 6, 1]);
}

#[test]
fn kaltofen_agrees_with_berkowitz() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=7 {
        for _ in 0..3 {
            let a = random_z(&mut rng, n, 9);
            assert_eq!(charpoly_kaltofen(&Integers, &a).unwrap(), charpoly_berkowitz(&Integers, &a, false).unwrap());
        }
    }
}

#[test]
fn all_algorithms_agree_over_q_and_zp() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let qq = q();
    let fp = Zmod::new(10007);
    for n in 1..=6 {
        let a = random_z(&mut rng, n, 20);
        let expected = charpoly_berkowitz(&Integers, &a, false).unwrap();
        let aq = to_q(&a);
        let ap = a.map(|x| fp.from_bigint(x));
        let ep = expected.map(|x| fp.from_bigint(x));
        for alg in Algorithm::ALL {
            let p = charpoly(&qq, &aq, alg).unwrap().map(|c| qq.as_integral(c).unwrap());
            assert_eq!(p, expected, "{alg} over Q, n = {n}");
            assert_eq!(charpoly(&fp, &ap, alg).unwrap(), ep, "{alg} over Z/p, n = {n}");
        }
    }
}

#[test]
fn sparse_variants_match() {
    let a = zm(4, &[0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3, 4, 0, 0, 0]);
    let dense = charpoly_berkowitz(&Integers, &a, false).unwrap();
    assert_eq!(charpoly_berkowitz(&Integers, &a, true).unwrap(), dense);
    assert_eq!(charpoly_chistov(&Integers, &a, true).unwrap(), dense);
    assert_eq!(ints(&dense), vec![1, 0, 0, 0, -24]);
}

#[test]
fn adjoint_and_eigenvectors() {
    let id = zm(2, &[1, 0, 0, 1]);
    let p = charpoly_berkowitz(&Integers, &id, false).unwrap();
    assert_eq!(adjoint_from_charpoly(&Integers, &id, &p).unwrap(), id);
    let d = zm(2, &[1, 0, 0, 2]);
    let p = charpoly_berkowitz(&Integers, &d, false).unwrap();
    assert_eq!(adjoint_from_charpoly(&Integers, &d, &p).unwrap(), zm(2, &[2, 0, 0, 1]));

    let v = eigenvector_simple(&Integers, &d, &BigInt::from(2)).unwrap();
    assert!(v[0] == BigInt::from(0) && v[1] != BigInt::from(0));
    let swap = zm(2, &[0, 1, 1, 0]);
    let v = eigenvector_simple(&Integers, &swap, &BigInt::from(1)).unwrap();
    assert_eq!(matrix::mat_vec(&Integers, &swap, &v), v);
    assert!(v[0] != BigInt::from(0) && v[0] == v[1]);
    assert_eq!(eigenvector_simple(&Integers, &id, &BigInt::from(1)), Err(Error::AdjointVanishes));
}

#[test]
fn adjoint_multiplies_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = random_z(&mut rng, 5, 9);
    let p = charpoly_berkowitz(&Integers, &a, false).unwrap();
    let adj = adjoint_from_charpoly(&Integers, &a, &p).unwrap();
    let prod = matrix::mul(&Integers, &a, &adj);
    assert_eq!(prod, matrix::scale(&Integers, p.det(), &DenseMatrix::identity(&Integers, 5)));
}

#[test]
fn applicability() {
    let z = Integers.spec();
    assert!(Algorithm::Berkowitz.applies_to(&z, 5));
    assert!(!Algorithm::Hessenberg.applies_to(&z, 5));
    assert!(!Algorithm::LeVerrier.applies_to(&Zmod::new(3).spec(), 3));
    assert!(Algorithm::LeVerrier.applies_to(&Zmod::new(5).spec(), 4));
    assert_eq!(Algorithm::from_name("preparata-sarwate"), Some(Algorithm::PreparataSarwate));
}
