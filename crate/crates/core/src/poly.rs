//! Univariate polynomials over Q with exact real-root counting.
//!
//! Root counting uses Sturm sequences: for `a < b` the number of distinct real
//! roots in `(a, b]` equals `V(a) - V(b)`, where `V` counts sign variations of
//! the sequence with zeros dropped.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in increasing degree order, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<BigRational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.c.iter().enumerate().map(|(i, a)| format!("{a}*s^{i}")).collect();
        write!(f, "Poly[{}]", terms.join(" + "))
    }
}

impl Poly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn constant(a: BigRational) -> Self {
        Poly::new(vec![a])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn leading(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(l) => Poly::new(self.c.iter().map(|a| a / l).collect()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut r = self.c.clone();
        let n = self.c.len();
        if n <= dd {
            return (Poly::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let coef = &r[k + dd] / &lead;
            if !coef.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dj;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// The square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }

    /// Yun's square-free factorization: `p = lc * prod f_i^i` with pairwise
    /// coprime square-free `f_i`. Returns the nonconstant `(f_i, i)`.
    pub fn squarefree_factors(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0);
        let c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.exact_div(&a);
            let nc = d.exact_div(&a);
            d = &nc - &nb.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            b = nb;
            i += 1;
        }
        out
    }

    /// Standard Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut prev = self.clone();
        let mut cur = self.derivative();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let (_, r) = prev.div_rem(&cur);
            prev = cur;
            cur = -r;
        }
        seq
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots_between(&self, a: &BigRational, b: &BigRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let seq = self.squarefree().sturm_sequence();
        let va = variations(seq.iter().map(|p| p.eval(a)));
        let vb = variations(seq.iter().map(|p| p.eval(b)));
        va.saturating_sub(vb)
    }

    /// Number of distinct real roots in `(0, inf)`.
    pub fn count_positive_roots(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let seq = self.squarefree().sturm_sequence();
        let v0 = variations(seq.iter().map(|p| p.eval(&BigRational::zero())));
        let vinf = variations(seq.iter().map(Poly::leading));
        v0.saturating_sub(vinf)
    }

    /// `1 + max |a_i / a_n|`: every real root is strictly inside this bound.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let m = self.c[..self.c.len().saturating_sub(1)]
            .iter()
            .map(|a| a.abs() / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }

    /// Disjoint intervals `(lo, hi)` with `0 < lo < hi`, each holding exactly
    /// one positive root of the square-free part and neither endpoint a root.
    pub fn isolate_positive_roots(&self) -> Vec<(BigRational, BigRational)> {
        let sqf = self.squarefree();
        if sqf.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let seq = sqf.sturm_sequence();
        let var = |x: &BigRational| variations(seq.iter().map(|p| p.eval(x)));
        let deg = sqf.degree().unwrap();
        let mut out = Vec::new();
        let zero = BigRational::zero();
        let bound = sqf.cauchy_bound();
        let mut stack = vec![(zero, bound.clone(), var(&BigRational::zero()), var(&bound))];
        while let Some((lo, hi, vlo, vhi)) = stack.pop() {
            let count = vlo.saturating_sub(vhi);
            if count == 0 {
                continue;
            }
            if count == 1 && lo.is_positive() {
                out.push((lo, hi));
                continue;
            }
            let m = split_point(&sqf, &lo, &hi, deg);
            let vm = var(&m);
            stack.push((m.clone(), hi, vm, vhi));
            stack.push((lo, m, vlo, vm));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Shrinks an isolating interval of a simple root of `self` (square-free,
    /// opposite signs at the endpoints) until its width is at most `width`.
    /// Returns the exact root if a bisection point hits it.
    pub fn refine_root(&self, mut lo: BigRational, mut hi: BigRational, width: &BigRational) -> RootLocation {
        let two = BigRational::from_integer(2.into());
        let slo = sign(&self.eval(&lo));
        while &(&hi - &lo) > width {
            let m = (&lo + &hi) / &two;
            let sm = sign(&self.eval(&m));
            if sm == 0 {
                return RootLocation::Exact(m);
            }
            if sm == slo {
                lo = m;
            } else {
                hi = m;
            }
        }
        // A short interval may still contain a small-denominator rational root.
        let guess = simplest_rational_between(&lo, &hi);
        if self.eval(&guess).is_zero() {
            RootLocation::Exact(guess)
        } else {
            RootLocation::Approx { lo, hi, mid: guess }
        }
    }

    /// Sign behavior on `[0, inf)`. The zero polynomial reports a zero at 0.
    pub fn half_line_sign(&self) -> HalfLineSign {
        let zero = BigRational::zero();
        if self.is_zero() {
            return HalfLineSign::ZeroAt(RootLocation::Exact(zero));
        }
        let p0 = self.eval(&zero);
        if p0.is_negative() {
            return HalfLineSign::NegativeAt(zero);
        }
        if self.leading().is_negative() {
            let far = self.cauchy_bound() + BigRational::one();
            return HalfLineSign::NegativeAt(far);
        }
        let intervals = self.isolate_positive_roots();
        for (lo, hi) in &intervals {
            for s in [lo, hi] {
                if self.eval(s).is_negative() {
                    return HalfLineSign::NegativeAt(s.clone());
                }
            }
        }
        if p0.is_zero() {
            return HalfLineSign::ZeroAt(RootLocation::Exact(zero));
        }
        match intervals.into_iter().next() {
            None => HalfLineSign::Positive,
            Some((lo, hi)) => {
                let width = BigRational::new(BigInt::one(), BigInt::one() << 64u32);
                HalfLineSign::ZeroAt(self.squarefree().refine_root(lo, hi, &width))
            }
        }
    }
}

fn split_point(p: &Poly, lo: &BigRational, hi: &BigRational, deg: usize) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    // at most `deg` roots, so one of `deg + 1` interior points is not a root
    let steps = BigRational::from_integer(BigInt::from(deg + 2));
    (1..=deg + 1)
        .map(|k| lo + (hi - lo) * BigRational::from_integer(BigInt::from(k)) / &steps)
        .find(|m| !p.eval(m).is_zero())
        .expect("more roots than the degree allows")
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(values: impl Iterator<Item = BigRational>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for v in values {
        let s = sign(&v);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// The rational with the smallest denominator in `[a, b]`, `0 <= a <= b`.
pub fn simplest_rational_between(a: &BigRational, b: &BigRational) -> BigRational {
    let fl = a.floor();
    if &fl == a {
        return a.clone();
    }
    let next = &fl + BigRational::one();
    if &next <= b {
        return next;
    }
    let inner = simplest_rational_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

/// A real root known exactly or as a rational isolating interval.
#[derive(Debug, Clone, PartialEq)]
pub enum RootLocation {
    Exact(BigRational),
    Approx {
        lo: BigRational,
        hi: BigRational,
        mid: BigRational,
    },
}

impl RootLocation {
    pub fn point(&self) -> &BigRational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Approx { mid, .. } => mid,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RootLocation::Exact(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum HalfLineSign {
    /// Strictly positive on `[0, inf)`.
    Positive,
    /// Nonnegative on `[0, inf)` with a zero here (the smallest one).
    ZeroAt(RootLocation),
    /// Negative at this point.
    NegativeAt(BigRational),
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let z = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) - rhs.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(vec![]);
        }
        let mut c = vec![BigRational::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.into_iter().map(|a| -a).collect())
    }
}
