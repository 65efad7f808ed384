mod common;

use common::{int_vec, nested_sum, proof_fixtures, random_tensor, rng, sum_fourth_plus};
use copositivity::enumeration::{enumerate_family, Family};
use copositivity::oracle::{
    composition_count, compositions, find_negative, find_positive_witness, find_zero_nonneg, lattice_lowest,
    lattice_min, oracle_verdict, refine, OracleConfig,
};
use copositivity::sign::SignTensor4x2;
use copositivity::{NumericMode, Scalar, SymTensor, Verdict, WitnessKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

fn cfg(n: u32) -> OracleConfig {
    OracleConfig::default().with_resolution(n)
}

fn serial(n: u32) -> OracleConfig {
    OracleConfig {
        parallel: false,
        ..cfg(n)
    }
}

fn int_tensor(rng: &mut impl Rng, dim: usize) -> SymTensor {
    copositivity::tensor::canonical_indices(4, dim)
        .into_iter()
        .fold(SymTensor::zeros(4, dim), |t, idx| t.with(idx.labels(), rng.gen_range(-4i64..=4)).unwrap())
}

fn diagonal3() -> SymTensor {
    (1..=3).fold(SymTensor::zeros(4, 3), |t, i| t.with(&[i; 4], 1).unwrap())
}

fn binary(c: [i8; 5]) -> SymTensor {
    SignTensor4x2(c).to_tensor()
}

#[test]
fn lattice_values_match_nested_sum() {
    let mut rng = rng(1);
    for _ in 0..20 {
        let t = int_tensor(&mut rng, 3);
        for n in 1..=10u32 {
            let all = lattice_lowest(&t, &serial(n), usize::MAX).unwrap();
            assert_eq!(all.len() as u128, composition_count(n, 3));
            for (v, k) in &all {
                let x = int_vec(&k.0.iter().map(|&a| a as i64).collect::<Vec<_>>());
                assert_eq!(v.as_exact().unwrap(), &nested_sum(&t, &x));
            }
            // sorted by value, ties lexicographically
            for w in all.windows(2) {
                assert!(w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 < w[1].1));
            }
        }
    }
}

#[test]
fn lattice_min_examples() {
    let (min, k) = lattice_min(&diagonal3(), &cfg(3)).unwrap();
    assert_eq!(min, Scalar::from_int(3));
    assert_eq!(k.0, vec![1, 1, 1]);

    let case1 = sum_fourth_plus(&[([3, 1, 0], -8), ([3, 0, 1], -8), ([0, 1, 3], -8)]);
    for n in [6, 20, 60] {
        assert!(lattice_min(&case1, &cfg(n)).unwrap().0.signum() > 0, "N = {n}");
    }

    let fourth = binary([1, -1, 1, -1, 1]);
    for n in [2, 10, 60] {
        let (min, k) = lattice_min(&fourth, &cfg(n)).unwrap();
        assert!(min.is_zero());
        assert_eq!(k.0, vec![n / 2, n / 2]);
    }
}

#[test]
fn composition_iterator_is_lexicographic_and_complete() {
    let all: Vec<Vec<u32>> = compositions(5, 3).collect();
    assert_eq!(all.len() as u128, composition_count(5, 3));
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    assert!(all.iter().all(|k| k.iter().sum::<u32>() == 5));
}

#[test]
fn parallel_scan_is_deterministic() {
    let mut rng = rng(2);
    for _ in 0..10 {
        let t = random_tensor(&mut rng, 3);
        let serial = lattice_lowest(&t, &serial(24), 16).unwrap();
        let parallel = lattice_lowest(&t, &cfg(24), 16).unwrap();
        assert_eq!(serial, parallel);
    }
}

#[test]
fn big_entries_use_wide_arithmetic() {
    // entries near 10^30 overflow the i128 fast path at N = 40
    let huge = Scalar::Exact(BigRational::from_integer(BigInt::from(10u8).pow(30)));
    let mut rng = rng(3);
    for _ in 0..5 {
        let t = int_tensor(&mut rng, 3);
        let big = t.scaled(&huge);
        let (small_min, small_k) = lattice_min(&t, &cfg(40)).unwrap();
        let (big_min, big_k) = lattice_min(&big, &cfg(40)).unwrap();
        assert_eq!(small_k, big_k);
        assert_eq!(big_min, &small_min * &huge);
    }
}

#[test]
fn verdict_examples() {
    let t33 = enumerate_family(Family::T33)
        .into_iter()
        .find(|t| {
            let s: i64 = [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]]
                .iter()
                .map(|l| t.get(l).as_small_int().unwrap())
                .sum();
            s == -1
        })
        .unwrap();
    let v = oracle_verdict(&t33, &cfg(60)).unwrap();
    assert_eq!(v.verdict, Verdict::NotCopositive);
    assert!(v.decisive);
    let w = v.witness.unwrap();
    let x: Vec<f64> = w.x.iter().map(Scalar::to_f64).collect();
    let s: f64 = x.iter().sum();
    assert!(x.iter().all(|xi| (xi / s - 1.0 / 3.0).abs() < 0.2), "{x:?}");

    let v = oracle_verdict(&binary([1, -1, 1, -1, 1]), &cfg(60)).unwrap();
    assert_eq!(v.verdict, Verdict::CopositiveNotStrict);
    let w = v.witness.unwrap();
    assert_eq!(w.x, vec![Scalar::Exact(BigRational::new(1.into(), 2.into())); 2]);
    assert!(w.value.is_zero());

    let ones = copositivity::tensor::canonical_indices(4, 3)
        .into_iter()
        .fold(SymTensor::zeros(4, 3), |t, idx| t.with(idx.labels(), 1).unwrap());
    let v = oracle_verdict(&ones, &cfg(20)).unwrap();
    assert_eq!(v.verdict, Verdict::StrictlyCopositive);
    assert!(v.decisive);
}

#[test]
fn negative_witnesses_reevaluate_negative() {
    let mut rng = rng(4);
    let mut found = 0;
    for _ in 0..200 {
        let t = random_tensor(&mut rng, 3);
        if let Some(w) = find_negative(&t, &cfg(20)).unwrap() {
            found += 1;
            let x: Vec<BigRational> = w.x.iter().map(|s| s.as_exact().unwrap().clone()).collect();
            assert!(x.iter().all(|xi| !xi.is_negative()) && x.iter().any(|xi| !xi.is_zero()));
            assert!(nested_sum(&t, &x).is_negative());
            assert_eq!(w.kind, WitnessKind::Negative);
        }
    }
    assert!(found > 50);
}

#[test]
fn scaling_keeps_verdict_and_argmin() {
    let mut rng = rng(5);
    let factor = Scalar::Exact(BigRational::new(7.into(), 3.into()));
    for _ in 0..100 {
        let t = random_tensor(&mut rng, 3);
        let a = oracle_verdict(&t, &cfg(12)).unwrap();
        let b = oracle_verdict(&t.scaled(&factor), &cfg(12)).unwrap();
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(a.argmin, b.argmin);
        assert_eq!(b.min_value, &a.min_value * &factor);
    }
}

#[test]
fn refinement_is_monotone() {
    let mut rng = rng(6);
    for _ in 0..50 {
        let t = random_tensor(&mut rng, 3);
        let (_, k) = lattice_min(&t, &cfg(60)).unwrap();
        let x0 = k.to_simplex_f64();
        let x = refine(&t, &x0, 40);
        assert!(t.evaluate_f64(&x).unwrap() <= t.evaluate_f64(&x0).unwrap());
        assert!((x.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(x.iter().all(|&xi| xi >= 0.0));
    }
    // x2^4 + x3^4 has its simplex minimum at the vertex e1
    let vertex_min = SymTensor::zeros(4, 3).with(&[2; 4], 1).unwrap().with(&[3; 4], 1).unwrap();
    assert_eq!(refine(&vertex_min, &[1.0, 0.0, 0.0], 40), vec![1.0, 0.0, 0.0]);
    let x = refine(&binary([1, -1, 1, -1, 1]), &[0.4, 0.6], 40);
    assert!(binary([1, -1, 1, -1, 1]).evaluate_f64(&x).unwrap() < 1e-10);
}

#[test]
fn positive_witness_search() {
    let w = find_positive_witness(&diagonal3()).unwrap().unwrap();
    assert_eq!(w.x, int_vec(&[1, 0, 0]).into_iter().map(Scalar::Exact).collect::<Vec<_>>());

    let t32 = enumerate_family(Family::T32)
        .into_iter()
        .find(|t| [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]].iter().all(|l| t.get(l) == Scalar::from_int(1)))
        .unwrap();
    assert_eq!(nested_sum(&t32, &int_vec(&[1, 1, 1])), BigRational::from_integer(57.into()));
    assert_eq!(find_positive_witness(&t32).unwrap().unwrap().value, Scalar::from_int(1));

    assert!(find_positive_witness(&SymTensor::zeros(4, 3)).unwrap().is_none());
}

#[test]
fn zero_witness_search() {
    let w = find_zero_nonneg(&binary([1, -1, 1, -1, 1]), &cfg(60)).unwrap().unwrap();
    assert!(w.value.is_zero());
    assert_eq!(w.x[0], w.x[1]);

    assert!(find_zero_nonneg(&diagonal3(), &cfg(60)).unwrap().is_none());

    let t36 = sum_fourth_plus(&[([0, 2, 2], -6), ([2, 1, 1], -24), ([1, 2, 1], -24), ([1, 1, 2], -24)]);
    assert!(find_zero_nonneg(&t36, &cfg(60)).unwrap().is_none());
}

#[test]
fn proof_fixtures_are_positive_on_the_lattice() {
    for (name, t) in proof_fixtures() {
        let (min, _) = lattice_min(&t, &cfg(60)).unwrap();
        assert!(min.signum() > 0, "{name}");
    }
}

#[test]
fn float_boundary_form_is_not_decisive() {
    let t = binary([1, -1, 1, -1, 1]).to_mode(NumericMode::Float);
    let v = oracle_verdict(&t, &cfg(60)).unwrap();
    assert_eq!(v.verdict, Verdict::CopositiveNotStrict);
    assert!(!v.decisive);
    assert!(v.witness.unwrap().approximate);
}
