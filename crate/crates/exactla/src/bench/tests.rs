use super::*;
use crate::charpoly::charpoly_berkowitz;

fn quotient_params(p: u64) -> GroupParams {
    GroupParams { p: Some(p), vars: vec!["x".into()], ideal: vec!["x^3 - 1".into()], x: None }
}

#[test]
fn group1_entries_in_range_and_deterministic() {
    let a = generate_matrix(1, 7, 3, &GroupParams::default()).unwrap();
    let b = generate_matrix(1, 7, 3, &GroupParams::default()).unwrap();
    let c = generate_matrix(1, 7, 4, &GroupParams::default()).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert_ne!(a.to_text(), c.to_text());
    let AnyMatrix::Z(m) = a else { panic!("group 1 is over Z") };
    assert!(m.entries().iter().all(|x| *x >= BigInt::from(-99) && *x <= BigInt::from(99)));
}

#[test]
fn text_round_trip() {
    for (g, params) in [(1, GroupParams::default()), (2, GroupParams::default()), (3, quotient_params(7))] {
        let a = generate_matrix(g, 4, 1, &params).unwrap();
        let b = AnyMatrix::parse(&a.to_text()).unwrap();
        assert_eq!(a.to_text(), b.to_text(), "group {g}");
        assert_eq!(a.ring_description(), b.ring_description());
    }
}

#[test]
fn jou_divisible_by_power_of_x() {
    let zx = PolyRing::new(Integers, "x");
    for n in [4, 6] {
        let a = jou_symbolic(n);
        let cp = charpoly_berkowitz(&zx, &a, false).unwrap();
        // coeffs[k] is the X^(n-k) coefficient; X^0..X^(n-4) must vanish
        for (k, c) in cp.coeffs.iter().enumerate() {
            if k > 3 {
                assert!(c.is_empty(), "n={n}, k={k}: {c:?}");
            }
        }
        assert!(!cp.coeffs[3].is_empty());
    }
}

#[test]
fn jou_at_matches_symbolic_evaluation() {
    let a = jou_at(3, 2);
    // i = j = 1, x = 2: 2 + 4*1 + 5*9
    assert_eq!(*a.get(0, 0), BigInt::from(51));
}

#[test]
fn cross_validate_identity() {
    let id = DenseMatrix::identity(&Integers, 5);
    let rep = cross_validate(&Integers, &id, &Algorithm::ALL);
    assert!(rep.is_unanimous(), "{}", rep.render());
    assert_eq!(rep.computed().count(), Algorithm::ALL.len());
}

#[test]
fn cross_validate_group1() {
    let AnyMatrix::Z(a) = generate_matrix(1, 6, 9, &GroupParams::default()).unwrap() else { panic!() };
    let rep = cross_validate(&Integers, &a, &Algorithm::ALL);
    assert!(rep.is_unanimous(), "{}", rep.render());
}

#[test]
fn quotient_skips_integer_division_beyond_characteristic() {
    let AnyMatrix::Quotient(q, a) = generate_matrix(3, 8, 2, &quotient_params(7)).unwrap() else { panic!() };
    let rep = cross_validate(&q, &a, &Algorithm::ALL);
    assert!(rep.is_unanimous(), "{}", rep.render());
    let faddeev = rep.runs.iter().find(|r| r.algo == Algorithm::Faddeev).unwrap();
    assert_eq!(faddeev.status, RunStatus::Skipped(Error::IntegerNotInvertible(7)));
    assert!(rep.computed().any(|r| r.algo == Algorithm::Berkowitz));
}

#[test]
fn group3_rejects_bad_params() {
    assert!(matches!(generate_matrix(3, 3, 0, &GroupParams::default()), Err(Error::InvalidGroupParams(_))));
    assert!(matches!(generate_matrix(3, 3, 0, &quotient_params(8)), Err(Error::InvalidGroupParams(_))));
    assert!(matches!(generate_matrix(6, 3, 0, &GroupParams::default()), Err(Error::InvalidGroupParams(_))));
}

#[test]
fn config_run_produces_rows_and_agreement() {
    let cfg = BenchConfig::parse(
        "[[case]]\ngroup = 1\nn = [8, 12, 16]\nseeds = [5]\nalgos = [\"berkowitz\", \"faddeev\"]\n",
    )
    .unwrap();
    let rep = run_benchmark(&cfg).unwrap();
    assert_eq!(rep.records.len(), 6);
    assert!(rep.disagreements.is_empty());
    for pair in rep.records.chunks(2) {
        assert_eq!(pair[0].digest, pair[1].digest);
        assert_eq!(pair[0].digest.len(), 16);
    }
    let csv = rep.to_csv();
    assert_eq!(csv.lines().count(), 7);
    assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
    assert!(rep.to_markdown().contains("| 12 |"));
}

#[test]
fn empty_config_gives_header_only() {
    let rep = run_benchmark(&BenchConfig::parse("").unwrap()).unwrap();
    assert_eq!(rep.to_csv(), format!("{CSV_HEADER}\n"));
}

#[test]
fn config_errors() {
    assert!(matches!(BenchConfig::parse("[[case]]\ngroup = 1\nn = [3]\nalgos = [\"nope\"]\n"), Err(Error::Config(_))));
    assert!(matches!(BenchConfig::parse("[[case]]\ngroup = 9\nn = [3]\n"), Err(Error::Config(_))));
    assert!(matches!(BenchConfig::parse("[[case]]\nn = [3]\n"), Err(Error::Config(_))));
}

#[test]
fn skipped_rows_in_csv() {
    let cfg = BenchConfig::parse(
        "[[case]]\ngroup = 3\nn = [8]\np = 7\nvars = [\"x\"]\nideal = [\"x^3 - 1\"]\nalgos = [\"berkowitz\", \"faddeev\"]\n",
    )
    .unwrap();
    let csv = run_benchmark(&cfg).unwrap().to_csv();
    assert!(csv.contains("skipped: "), "{csv}");
}

#[test]
fn sparse_berkowitz_saves_multiplications() {
    let AnyMatrix::Z(a) = generate_matrix(5, 64, 1, &GroupParams::default()).unwrap() else { panic!() };
    assert_eq!(a.entries().iter().filter(|x| **x != BigInt::from(0)).count(), 128);
    let dense = measure(&Integers, &a, Algorithm::Berkowitz).unwrap();
    let sparse = measure(&Integers, &a, Algorithm::BerkowitzSparse).unwrap();
    assert_eq!(dense.charpoly, sparse.charpoly);
    assert!(sparse.stats.muls < dense.stats.muls);
}
