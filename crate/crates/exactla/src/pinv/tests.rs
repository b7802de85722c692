use super::*;
use crate::elimination::{det_gauss, rank};
use crate::ring::{Integers, Zmod};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> Frac<Integers> {
    Frac::new(Integers)
}

fn qm(rows: usize, cols: usize, v: &[i64]) -> DenseMatrix<FracElem<num_bigint::BigInt>> {
    DenseMatrix::from_i64(&q(), rows, cols, v)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn minor<K: Ring>(k: &K, a: &DenseMatrix<K::Elem>, rows: &[usize], cols: &[usize]) -> K::Elem {
    let sub = DenseMatrix::from_fn(rows.len(), cols.len(), |i, j| a.get(rows[i], cols[j]).clone());
    det_gauss(k, &sub).unwrap()
}

/// Σ over (α, β) of μ², bucketed by l = Σα - Σβ + k(n-k) (0-based indices
/// give the same differences).
fn brute_generalized<K: Ring>(k: &K, a: &DenseMatrix<K::Elem>, order: usize) -> Vec<K::Elem> {
    let (m, n) = (a.rows(), a.cols());
    let width = order * (m + n - 2 * order) + 1;
    let mut out = vec![k.zero(); width];
    for al in subsets(m, order) {
        for be in subsets(n, order) {
            let mu = minor(k, a, &al, &be);
            let l = al.iter().sum::<usize>() as i64 - be.iter().sum::<usize>() as i64 + (order * (n - order)) as i64;
            let l = l as usize;
            out[l] = k.add(&out[l], &k.mul(&mu, &mu));
        }
    }
    poly::normalized(k, out)
}

fn random_rank(k: &Zmod, rng: &mut ChaCha8Rng, m: usize, n: usize, r: usize) -> DenseMatrix<u64> {
    let p = k.modulus();
    let u = DenseMatrix::from_fn(m, r, |_, _| rng.gen_range(0..p));
    let v = DenseMatrix::from_fn(r, n, |_, _| rng.gen_range(0..p));
    matrix::mul(k, &u, &v)
}

#[test]
fn star_examples() {
    let k = Zmod::new(7);
    let f = rational_functions(&k);
    let id = embed_matrix(&f, &DenseMatrix::identity(&k, 3));
    assert_eq!(star_operator(&f, &id), id);

    // 3×5 layout: entry (i, j) of A° is t^{j-i} a_{j,i}
    let a = DenseMatrix::from_fn(3, 5, |i, j| (10 * i + j + 1) as u64 % 6 + 1);
    let s = star_operator(&f, &embed_matrix(&f, &a));
    assert_eq!((s.rows(), s.cols()), (5, 3));
    let c = |x: u64| f.base.constant(x);
    assert_eq!(s.get(4, 0), &f.make(c(a.get(0, 4).clone()), poly::monomial(&k, 1, 4)));
    assert_eq!(s.get(0, 2), &f.embed(poly::monomial(&k, a.get(2, 0).clone(), 2)));
    assert_eq!(s.get(1, 1), &f.embed(c(a.get(1, 1).clone())));

    // t = 1 gives the transpose
    assert_eq!(star_specialized(&k, &a, &1).unwrap(), a.transpose());
}

#[test]
fn plain_gram_examples() {
    let k = q();
    let g = gram_coefficients(&k, &DenseMatrix::identity(&k, 2), &GramMode::Plain).unwrap();
    assert_eq!(g.constant(&k, 1), k.from_i64(2));
    assert_eq!(g.constant(&k, 2), k.from_i64(1));
    let g = gram_coefficients(&k, &qm(2, 2, &[1, 0, 0, 0]), &GramMode::Plain).unwrap();
    assert_eq!(g.constant(&k, 1), k.from_i64(1));
    assert!(g.is_zero(2));
    assert_eq!(rank_from_gram(&g), 1);
}

#[test]
fn plain_gram_is_sum_of_squared_minors() {
    let k = q();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for m in 1..=4 {
        for n in 1..=4 {
            let vals: Vec<i64> = (0..m * n).map(|_| rng.gen_range(-5..=5)).collect();
            let a = qm(m, n, &vals);
            let g = gram_coefficients(&k, &a, &GramMode::Plain).unwrap();
            assert_eq!(g.coeffs.len(), m.min(n) + 1);
            for order in 1..=m.min(n) {
                let want = subsets(m, order).iter().fold(k.zero(), |acc, al| {
                    subsets(n, order).iter().fold(acc, |acc, be| {
                        let mu = minor(&k, &a, al, be);
                        k.add(&acc, &k.mul(&mu, &mu))
                    })
                });
                assert_eq!(g.constant(&k, order), want, "{m}x{n} order {order}");
            }
        }
    }
}

#[test]
fn generalized_gram_matches_minor_buckets() {
    let k = Zmod::new(101);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for (m, n) in [(2, 3), (3, 2), (3, 3), (2, 4), (4, 3)] {
        let a = DenseMatrix::from_fn(m, n, |_, _| rng.gen_range(0..101u64));
        let g = gram_coefficients(&k, &a, &GramMode::Generalized).unwrap();
        for order in 1..=m.min(n) {
            assert_eq!(g.shifts[order], order * (n - order));
            assert_eq!(g.coeffs[order], brute_generalized(&k, &a, order), "{m}x{n} order {order}");
        }
        // value at t = 1 is the plain coefficient
        let plain = gram_coefficients(&k, &a, &GramMode::Plain).unwrap();
        for order in 0..=m.min(n) {
            let at_one = g.coeffs[order].iter().fold(0, |acc, c| k.add(&acc, c));
            assert_eq!(at_one, plain.constant(&k, order));
        }
    }
}

#[test]
fn ranks_from_gram() {
    let k = Zmod::new(5);
    assert_eq!(rank_from_gram(&gram_coefficients(&k, &DenseMatrix::identity(&k, 4), &GramMode::Generalized).unwrap()), 4);
    assert_eq!(rank_from_gram(&gram_coefficients(&k, &DenseMatrix::zeros(&k, 3, 2), &GramMode::Generalized).unwrap()), 0);
    // u = (1, 2, 0) is isotropic over F_5, so the plain test misses the rank
    let u = [1u64, 2, 0];
    let v = [3u64, 1, 4];
    let outer = DenseMatrix::from_fn(3, 3, |i, j| k.mul(&u[i], &v[j]));
    assert_eq!(rank_from_gram(&gram_coefficients(&k, &outer, &GramMode::Generalized).unwrap()), 1);
    assert_eq!(rank_from_gram(&gram_coefficients(&k, &outer, &GramMode::Plain).unwrap()), 0);
}

#[test]
fn generalized_rank_matches_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for p in [5u64, 7] {
        let k = Zmod::new(p);
        for _ in 0..60 {
            let m = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=5);
            let r = rng.gen_range(0..=m.min(n));
            let a = random_rank(&k, &mut rng, m, n, r);
            let g = gram_coefficients(&k, &a, &GramMode::Generalized).unwrap();
            assert_eq!(rank_from_gram(&g), rank(&k, &a).unwrap());
        }
    }
}

fn penrose<K: Ring>(k: &K, a: &DenseMatrix<K::Elem>, x: &DenseMatrix<K::Elem>) {
    assert_eq!(&matrix::mul(k, &matrix::mul(k, a, x), a), a);
    assert_eq!(&matrix::mul(k, &matrix::mul(k, x, a), x), x);
}

#[test]
fn pinv_plain_cases() {
    let k = q();
    let a = qm(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
    let PinvMatrix::Field(x) = pinv_rank_r(&k, &a, 3, &GramMode::Plain).unwrap().matrix else { panic!() };
    assert_eq!(matrix::mul(&k, &a, &x), DenseMatrix::identity(&k, 3));

    let e = qm(2, 2, &[1, 0, 0, 0]);
    let PinvMatrix::Field(x) = pinv_rank_r(&k, &e, 1, &GramMode::Plain).unwrap().matrix else { panic!() };
    assert_eq!(x, e);

    // rank 2, 3×4: rows 0 and 1 independent, row 2 = row 0 + row 1
    let a = qm(3, 4, &[1, 2, 0, -1, 0, 1, 3, 2, 1, 3, 3, 1]);
    let PinvMatrix::Field(x) = pinv_rank_r(&k, &a, 2, &GramMode::Plain).unwrap().matrix else { panic!() };
    penrose(&k, &a, &x);
    assert_eq!(pinv_rank_r(&k, &a, 3, &GramMode::Plain), Err(Error::GramCoefficientZero(3)));
}

#[test]
fn pinv_generalized_over_small_field() {
    let k = Zmod::new(5);
    let f = rational_functions(&k);
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for (m, n, r) in [(3, 3, 1), (3, 4, 2), (4, 2, 2), (2, 3, 2)] {
        let a = random_rank(&k, &mut rng, m, n, r);
        if rank(&k, &a).unwrap() != r {
            continue;
        }
        let PinvMatrix::RationalFunctions(x) = pinv_rank_r(&k, &a, r, &GramMode::Generalized).unwrap().matrix else {
            panic!()
        };
        penrose(&f, &embed_matrix(&f, &a), &x);
    }
}

#[test]
fn solve_cases() {
    let k = q();
    let a = qm(2, 2, &[2, 1, 1, 1]);
    let v = vec![k.from_i64(3), k.from_i64(2)];
    let s = solve_uniform(&k, &a, &v, 2, &GramMode::Plain).unwrap();
    assert_eq!(s.constants(&k).unwrap(), vec![k.from_i64(1), k.from_i64(1)]);

    let r1 = qm(2, 2, &[1, 2, 2, 4]);
    let w = vec![k.from_i64(1), k.from_i64(-3)];
    let v = matrix::mat_vec(&k, &r1, &w);
    let Solution::Field(x) = solve_uniform(&k, &r1, &v, 1, &GramMode::Plain).unwrap() else { panic!() };
    assert_eq!(matrix::mat_vec(&k, &r1, &x), v);
    // (2, -1) is orthogonal to the column space
    let bad = vec![k.from_i64(2), k.from_i64(-1)];
    assert_eq!(solve_uniform(&k, &r1, &bad, 1, &GramMode::Plain), Err(Error::Inconsistent));
}

#[test]
fn generalized_injective_solution_is_constant() {
    let k = Zmod::new(7);
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for _ in 0..10 {
        let a = random_rank(&k, &mut rng, 4, 2, 2);
        if rank(&k, &a).unwrap() != 2 {
            continue;
        }
        let w = vec![rng.gen_range(0..7u64), rng.gen_range(0..7u64)];
        let v = matrix::mat_vec(&k, &a, &w);
        let s = solve_uniform(&k, &a, &v, 2, &GramMode::Generalized).unwrap();
        assert_eq!(s.constants(&k).unwrap(), w);
    }
}

#[test]
fn specialized_mode_agrees_with_generalized() {
    let k = Zmod::new(101);
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let a = random_rank(&k, &mut rng, 3, 4, 2);
    let tau = 3u64;
    let PinvMatrix::Field(x) = pinv_rank_r(&k, &a, 2, &GramMode::Specialized(tau)).unwrap().matrix else { panic!() };
    penrose(&k, &a, &x);
    let PinvMatrix::RationalFunctions(xt) = pinv_rank_r(&k, &a, 2, &GramMode::Generalized).unwrap().matrix else {
        panic!()
    };
    let at_tau = xt.map(|e| k.mul(&poly::eval(&k, &e.num, &tau), &k.inv(&poly::eval(&k, &e.den, &tau)).unwrap()));
    assert_eq!(at_tau, x);
}
