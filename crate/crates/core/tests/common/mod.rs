#![allow(dead_code)]

use copositivity::binary::Quartic2Coeffs;
use copositivity::{Scalar, SymTensor};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, num: i64, max_den: i64) -> Scalar {
    Scalar::Exact(BigRational::new(
        BigInt::from(rng.gen_range(-num..=num)),
        BigInt::from(rng.gen_range(1..=max_den)),
    ))
}

/// Order-4 tensor with every canonical entry a small random rational.
pub fn random_tensor(rng: &mut impl Rng, dim: usize) -> SymTensor {
    copositivity::tensor::canonical_indices(4, dim)
        .into_iter()
        .fold(SymTensor::zeros(4, dim), |t, idx| {
            let v = rational(rng, 5, 4);
            t.with(idx.labels(), v).unwrap()
        })
}

fn positive(rng: &mut impl Rng) -> Scalar {
    Scalar::Exact(BigRational::new(rng.gen_range(1..=6).into(), rng.gen_range(1..=3).into()))
}

/// Binary quartic with positive diagonal, mixing uniform samples with
/// products `(a x - b y)^2 (c x^2 + d x y + e y^2)` that sit on the
/// copositivity boundary.
pub fn random_binary_quartic(rng: &mut impl Rng) -> Quartic2Coeffs {
    if rng.gen_bool(0.7) {
        let a = positive(rng);
        let e = positive(rng);
        Quartic2Coeffs::new([a, rational(rng, 6, 3), rational(rng, 6, 3), rational(rng, 6, 3), e])
    } else {
        let (a, b) = (rng.gen_range(1..=4i64), rng.gen_range(0..=4i64));
        let (c, d, e) = (rng.gen_range(1..=3i64), rng.gen_range(-4..=4i64), rng.gen_range(1..=3i64));
        // (a x - b y)^2 = a^2 x^2 - 2ab x y + b^2 y^2
        let sq = [a * a, -2 * a * b, b * b];
        let q = [c, d, e];
        let mut coef = [0i64; 5];
        for (i, s) in sq.iter().enumerate() {
            for (j, r) in q.iter().enumerate() {
                coef[i + j] += s * r;
            }
        }
        if b == 0 {
            coef[4] = 1;
        }
        let mult = [1, 4, 6, 4, 1];
        Quartic2Coeffs::new(std::array::from_fn::<Scalar, 5, _>(|k| {
            Scalar::Exact(BigRational::new(coef[k].into(), BigInt::from(mult[k])))
        }))
    }
}

/// `sum over all i1..i4 of t[i1 i2 i3 i4] x_i1 x_i2 x_i3 x_i4`, straight from
/// the definition.
pub fn nested_sum(t: &SymTensor, x: &[BigRational]) -> BigRational {
    let n = t.dim();
    let mut total = BigRational::zero();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let v = t.get(&[i, j, k, l]).as_exact().unwrap().clone();
                    total += v * &x[i - 1] * &x[j - 1] * &x[k - 1] * &x[l - 1];
                }
            }
        }
    }
    total
}

pub fn int_vec(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&a| BigRational::from_integer(a.into())).collect()
}

/// Coefficients of `(x1 + x2 + x3)^4`.
fn sum_fourth() -> Vec<([u32; 3], i64)> {
    let fact = |k: u32| (1..=k as i64).product::<i64>();
    let mut out = Vec::new();
    for a in 0..=4u32 {
        for b in 0..=4 - a {
            let c = 4 - a - b;
            out.push(([a, b, c], 24 / (fact(a) * fact(b) * fact(c))));
        }
    }
    out
}

/// `(x1 + x2 + x3)^4` plus the given monomials.
pub fn sum_fourth_plus(extra: &[([u32; 3], i64)]) -> SymTensor {
    let terms = sum_fourth().into_iter().chain(extra.iter().copied());
    SymTensor::from_monomials(4, 3, terms.map(|(e, c)| (e, Scalar::from_int(c)))).unwrap()
}

const X1X2X3_X1: [u32; 3] = [2, 1, 1];
const X1X2X3_X2: [u32; 3] = [1, 2, 1];
const X1X2X3_X3: [u32; 3] = [1, 1, 2];

/// The auxiliary forms used in the strict-copositivity proofs of the ternary
/// theorems, each claimed positive on the nonnegative orthant minus 0.
pub fn proof_fixtures() -> Vec<(&'static str, SymTensor)> {
    let cubic = |exps: [[u32; 3]; 3]| exps.map(|e| (e, -8i64));
    let (x1_3x2, x1x2_3, x1_3x3, x1x3_3, x2x3_3, x2_3x3) =
        ([3, 1, 0], [1, 3, 0], [3, 0, 1], [1, 0, 3], [0, 1, 3], [0, 3, 1]);
    let case2 = |c: [[u32; 3]; 3]| {
        let mut v = cubic(c).to_vec();
        v.push((X1X2X3_X1, -24));
        sum_fourth_plus(&v)
    };
    let case3 = |c: [[u32; 3]; 3]| {
        let mut v = cubic(c).to_vec();
        v.extend([(X1X2X3_X1, -24), (X1X2X3_X2, -24)]);
        sum_fourth_plus(&v)
    };
    let squares = [([2, 2, 0], -12i64), ([2, 0, 2], -12), ([0, 2, 2], -12)];
    vec![
        ("case1", sum_fourth_plus(&cubic([x1_3x2, x1_3x3, x2x3_3]))),
        ("case2a", case2([x1x2_3, x1x3_3, x2x3_3])),
        ("case2b", case2([x1x2_3, x1_3x3, x2x3_3])),
        ("case2c", case2([x1_3x2, x1x3_3, x2x3_3])),
        ("case3a", case3([x1x2_3, x1x3_3, x2x3_3])),
        ("case3b", case3([x1_3x2, x1x3_3, x2x3_3])),
        ("case3c", case3([x1x2_3, x1_3x3, x2x3_3])),
        ("case3d", case3([x1_3x2, x1x3_3, x2_3x3])),
        (
            "t_prime",
            sum_fourth_plus(&[squares[0], squares[1], squares[2], (X1X2X3_X1, -24), (X1X2X3_X3, -12)]),
        ),
        (
            "t_double_prime",
            sum_fourth_plus(&[
                squares[0],
                squares[1],
                squares[2],
                (X1X2X3_X1, -12),
                (X1X2X3_X2, -12),
                (X1X2X3_X3, -12),
            ]),
        ),
        (
            "t_hat",
            sum_fourth_plus(&[([0, 2, 2], -6), (X1X2X3_X1, -24), (X1X2X3_X2, -24), (X1X2X3_X3, -24)]),
        ),
    ]
}

pub fn one() -> BigRational {
    BigRational::one()
}
