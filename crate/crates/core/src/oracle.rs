//! Brute-force ground truth over the standard simplex.
//!
//! By homogeneity, `T x^m >= 0` on the nonnegative orthant iff it holds on the
//! simplex, which the oracle covers with the lattice `{k / N : sum k = N}`.
//! Exact tensors are evaluated in integer arithmetic at the integer points
//! `k`; values reported by [`lattice_min`] are `T k^m`.
//!
//! On top of the lattice:
//! - dimension 2 exact tensors are decided exactly by root analysis of
//!   `p(s) = T (s, 1)^m` on `[0, inf)`;
//! - in dimension 3 the three edges of the simplex get the same exact
//!   treatment and interior points are polished by pairwise mass transfer.
//!
//! A `StrictlyCopositive` answer outside dimension 2 is a heuristic: it is
//! marked decisive only in exact mode when no lattice or refined value is
//! `<= 0`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{simplest_rational_between, HalfLineSign, Poly};
use crate::scalar::{NumericMode, Scalar};
use crate::tensor::SymTensor;
use crate::verdict::{Verdict, Witness, WitnessKind};

/// Environment variable overriding [`OracleConfig::max_lattice`].
pub const MAX_LATTICE_ENV: &str = "COPOSITIVITY_MAX_LATTICE";

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    pub resolution: u32,
    /// Relative tolerance for float tensors.
    pub tol: f64,
    /// Largest number of lattice points a scan may visit.
    pub max_lattice: u128,
    /// Sweeps of pairwise mass transfer per start point.
    pub refine_iterations: usize,
    /// Number of lowest lattice points used as refinement starts.
    pub refine_starts: usize,
    pub parallel: bool,
}

impl OracleConfig {
    /// Default resolution: 240 in dimension 2, 60 in dimension 3.
    pub fn for_dim(dim: usize) -> Self {
        OracleConfig {
            resolution: default_resolution(dim),
            ..OracleConfig::default()
        }
    }

    pub fn with_resolution(mut self, n: u32) -> Self {
        self.resolution = n;
        self
    }

    /// Applies `COPOSITIVITY_MAX_LATTICE` if set to a valid integer.
    pub fn with_env_cap(mut self) -> Self {
        if let Some(cap) = std::env::var(MAX_LATTICE_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            self.max_lattice = cap;
        }
        self
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            resolution: 60,
            tol: 1e-9,
            max_lattice: 20_000_000,
            refine_iterations: 40,
            refine_starts: 8,
            parallel: true,
        }
    }
}

pub fn default_resolution(dim: usize) -> u32 {
    match dim {
        0..=2 => 240,
        3 => 60,
        _ => 20,
    }
}

/// Integer composition `k` of `N = sum k` into `n` parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<u32>);

impl LatticePoint {
    pub fn resolution(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `k` as an exact integer vector.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.0.iter().map(|&k| Scalar::from_int(k as i64)).collect()
    }

    /// `k / N`, exact.
    pub fn to_simplex(&self) -> Vec<Scalar> {
        let n = BigInt::from(self.resolution().max(1));
        self.0
            .iter()
            .map(|&k| Scalar::Exact(BigRational::new(BigInt::from(k), n.clone())))
            .collect()
    }

    pub fn to_simplex_f64(&self) -> Vec<f64> {
        let n = self.resolution().max(1) as f64;
        self.0.iter().map(|&k| k as f64 / n).collect()
    }
}

/// `C(N + n - 1, n - 1)`, the number of lattice points.
pub fn composition_count(resolution: u32, parts: usize) -> u128 {
    if parts == 0 {
        return 0;
    }
    let (top, k) = (resolution as u128 + parts as u128 - 1, parts as u128 - 1);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(top - i) / (i + 1);
    }
    c
}

/// All compositions of `total` into `parts` parts, in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Compositions {
    Compositions {
        next: if parts == 0 {
            None
        } else {
            let mut v = vec![0; parts];
            v[parts - 1] = total;
            Some(v)
        },
    }
}

pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let r = cur.len();
        let mut nxt = cur.clone();
        let mut tail = 0;
        for i in (0..r.saturating_sub(1)).rev() {
            tail += nxt[i + 1];
            if tail > 0 {
                nxt[i] += 1;
                for v in &mut nxt[i + 1..] {
                    *v = 0;
                }
                nxt[r - 1] = tail - 1;
                self.next = Some(nxt);
                break;
            }
        }
        Some(cur)
    }
}

/// The form as a list of monomials, ready for fast evaluation at lattice
/// points.
enum Compiled {
    /// Integer coefficients scaled by a common positive denominator.
    Small { terms: Vec<(i128, Vec<u32>)>, denom: BigInt },
    Big { terms: Vec<(BigInt, Vec<u32>)>, denom: BigInt },
    Float { terms: Vec<(f64, Vec<u32>)> },
}

#[derive(Debug, Clone)]
enum Val {
    Small(i128),
    Big(BigInt),
    Float(f64),
}

impl Val {
    fn cmp(&self, other: &Val) -> Ordering {
        match (self, other) {
            (Val::Small(a), Val::Small(b)) => a.cmp(b),
            (Val::Big(a), Val::Big(b)) => a.cmp(b),
            (Val::Float(a), Val::Float(b)) => a.total_cmp(b),
            _ => unreachable!("mixed lattice value kinds"),
        }
    }
}

impl Compiled {
    fn new(t: &SymTensor, resolution: u32) -> Compiled {
        let dim = t.dim();
        if !t.is_exact() {
            return Compiled::Float {
                terms: t
                    .nonzero_entries()
                    .map(|(idx, v)| (idx.multiplicity() as f64 * v.to_f64(), idx.exponents(dim)))
                    .collect(),
            };
        }
        let denom = t
            .nonzero_entries()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.as_exact().unwrap().denom()));
        let terms: Vec<(BigInt, Vec<u32>)> = t
            .nonzero_entries()
            .map(|(idx, v)| {
                let r = v.as_exact().unwrap();
                let c = r.numer() * (&denom / r.denom()) * BigInt::from(idx.multiplicity());
                (c, idx.exponents(dim))
            })
            .collect();
        let bound: BigInt = terms.iter().map(|(c, _)| c.abs()).sum::<BigInt>()
            * num_traits::pow(BigInt::from(resolution.max(1)), t.order());
        if bound < (BigInt::one() << 120u32) {
            Compiled::Small {
                terms: terms.into_iter().map(|(c, e)| (c.to_i128().unwrap(), e)).collect(),
                denom,
            }
        } else {
            Compiled::Big { terms, denom }
        }
    }

    fn eval(&self, k: &[u32]) -> Val {
        match self {
            Compiled::Small { terms, .. } => Val::Small(
                terms
                    .iter()
                    .map(|(c, e)| {
                        e.iter()
                            .zip(k)
                            .fold(*c, |acc, (&p, &kv)| acc * (kv as i128).pow(p))
                    })
                    .sum(),
            ),
            Compiled::Big { terms, .. } => Val::Big(
                terms
                    .iter()
                    .map(|(c, e)| {
                        e.iter()
                            .zip(k)
                            .fold(c.clone(), |acc, (&p, &kv)| acc * num_traits::pow(BigInt::from(kv), p as usize))
                    })
                    .sum(),
            ),
            Compiled::Float { terms } => Val::Float(
                terms
                    .iter()
                    .map(|(c, e)| e.iter().zip(k).fold(*c, |acc, (&p, &kv)| acc * (kv as f64).powi(p as i32)))
                    .sum(),
            ),
        }
    }

    fn to_scalar(&self, v: &Val) -> Scalar {
        match (self, v) {
            (Compiled::Small { denom, .. }, Val::Small(i)) => {
                Scalar::Exact(BigRational::new(BigInt::from(*i), denom.clone()))
            }
            (Compiled::Big { denom, .. }, Val::Big(b)) => Scalar::Exact(BigRational::new(b.clone(), denom.clone())),
            (_, Val::Float(f)) => Scalar::Float(*f),
            _ => unreachable!("value kind does not match compiled form"),
        }
    }
}

/// Keeps the `keep` smallest `(value, k)` pairs, ordered by value then `k`.
fn push_best(best: &mut Vec<(Val, Vec<u32>)>, v: Val, k: &[u32], keep: usize) {
    let pos = best.partition_point(|(bv, bk)| match bv.cmp(&v) {
        Ordering::Less => true,
        Ordering::Equal => bk.as_slice() <= k,
        Ordering::Greater => false,
    });
    if pos < keep {
        best.insert(pos, (v, k.to_vec()));
        best.truncate(keep);
    }
}

fn merge_best(mut a: Vec<(Val, Vec<u32>)>, b: Vec<(Val, Vec<u32>)>, keep: usize) -> Vec<(Val, Vec<u32>)> {
    for (v, k) in b {
        push_best(&mut a, v, &k, keep);
    }
    a
}

fn scan_chunk(form: &Compiled, first: u32, total: u32, parts: usize, keep: usize) -> Vec<(Val, Vec<u32>)> {
    let mut best = Vec::with_capacity(keep.min(1024) + 1);
    let mut k = vec![0u32; parts];
    k[0] = first;
    if parts == 1 {
        push_best(&mut best, form.eval(&k), &k, keep);
        return best;
    }
    for rest in compositions(total - first, parts - 1) {
        k[1..].copy_from_slice(&rest);
        push_best(&mut best, form.eval(&k), &k, keep);
    }
    best
}

/// The `keep` lowest lattice points at resolution `N`, ascending by value with
/// lexicographic tie-break on `k`, plus their values `T k^m`.
pub fn lattice_lowest(t: &SymTensor, cfg: &OracleConfig, keep: usize) -> Result<Vec<(Scalar, LatticePoint)>> {
    let n = cfg.resolution;
    if n == 0 {
        return Err(Error::Precondition("lattice resolution must be at least 1".into()));
    }
    let count = composition_count(n, t.dim());
    if count > cfg.max_lattice {
        return Err(Error::LatticeTooLarge {
            count,
            resolution: n,
            cap: cfg.max_lattice,
        });
    }
    let form = Compiled::new(t, n);
    let keep = keep.max(1);
    let parts = t.dim();
    let best = if cfg.parallel {
        let chunks: Vec<_> = (0..=n)
            .into_par_iter()
            .map(|first| scan_chunk(&form, first, n, parts, keep))
            .collect();
        chunks.into_iter().fold(Vec::new(), |acc, c| merge_best(acc, c, keep))
    } else {
        (0..=n).fold(Vec::new(), |acc, first| merge_best(acc, scan_chunk(&form, first, n, parts, keep), keep))
    };
    Ok(best
        .into_iter()
        .map(|(v, k)| (form.to_scalar(&v), LatticePoint(k)))
        .collect())
}

/// Minimum of `T k^m` over all compositions `k` of `N`; ties go to the
/// lexicographically smallest `k`.
pub fn lattice_min(t: &SymTensor, cfg: &OracleConfig) -> Result<(Scalar, LatticePoint)> {
    Ok(lattice_lowest(t, cfg, 1)?.remove(0))
}

/// Float evaluator over monomials, for refinement.
struct FloatForm {
    terms: Vec<(f64, Vec<u32>)>,
}

impl FloatForm {
    fn new(t: &SymTensor) -> Self {
        FloatForm {
            terms: t
                .nonzero_entries()
                .map(|(idx, v)| (idx.multiplicity() as f64 * v.to_f64(), idx.exponents(t.dim())))
                .collect(),
        }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, e)| e.iter().zip(x).fold(*c, |acc, (&p, &xv)| acc * xv.powi(p as i32)))
            .sum()
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Local descent on the simplex by pairwise mass transfer.
///
/// Each step moves mass `t` from coordinate `j` to coordinate `i`, choosing
/// `t` in `[-x_i, x_j]` by a grid scan followed by golden-section search, and
/// accepts it only if the value strictly decreases. Stops after `iterations`
/// sweeps or when a sweep makes no progress.
pub fn refine(t: &SymTensor, x0: &[f64], iterations: usize) -> Vec<f64> {
    let form = FloatForm::new(t);
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut fx = form.eval(&x);
    for _ in 0..iterations {
        let mut improved = false;
        for i in 0..n {
            for j in i + 1..n {
                let (lo, hi) = (-x[i], x[j]);
                if hi - lo <= 0.0 {
                    continue;
                }
                let g = |s: f64| {
                    let mut y = x.clone();
                    y[i] += s;
                    y[j] -= s;
                    y[i] = y[i].max(0.0);
                    y[j] = y[j].max(0.0);
                    form.eval(&y)
                };
                const GRID: usize = 24;
                let step = (hi - lo) / GRID as f64;
                let (mut best_s, mut best_v) = (0.0, fx);
                let mut best_cell = None;
                for q in 0..=GRID {
                    let s = lo + step * q as f64;
                    let v = g(s);
                    if v < best_v {
                        best_s = s;
                        best_v = v;
                        best_cell = Some(q);
                    }
                }
                let (mut a, mut b) = match best_cell {
                    Some(q) => (lo + step * q.saturating_sub(1) as f64, (lo + step * (q + 1) as f64).min(hi)),
                    None => ((-step).max(lo), step.min(hi)),
                };
                let mut c = b - GOLDEN * (b - a);
                let mut d = a + GOLDEN * (b - a);
                let (mut gc, mut gd) = (g(c), g(d));
                for _ in 0..80 {
                    if gc < gd {
                        b = d;
                        d = c;
                        gd = gc;
                        c = b - GOLDEN * (b - a);
                        gc = g(c);
                    } else {
                        a = c;
                        c = d;
                        gc = gd;
                        d = a + GOLDEN * (b - a);
                        gd = g(d);
                    }
                }
                for (s, v) in [(c, gc), (d, gd)] {
                    if v < best_v {
                        best_s = s;
                        best_v = v;
                    }
                }
                if best_v < fx {
                    x[i] = (x[i] + best_s).max(0.0);
                    x[j] = (x[j] - best_s).max(0.0);
                    let tv = form.eval(&x);
                    if tv < fx {
                        fx = tv;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    x
}

/// Outcome of [`oracle_verdict`].
#[derive(Debug, Clone, PartialEq)]
pub struct OracleVerdict {
    pub verdict: Verdict,
    /// Lowest lattice value `T k^m` (not normalized by `N^m`).
    pub min_value: Scalar,
    pub argmin: LatticePoint,
    pub resolution: u32,
    pub decisive: bool,
    pub witness: Option<Witness>,
    /// Which stage settled the verdict.
    pub stage: OracleStage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleStage {
    Lattice,
    Refinement,
    /// Exact root analysis of a binary form (the whole tensor or an edge).
    RootAnalysis,
}

/// Sum of `multiplicity * |entry|`, the size of the form on the simplex.
pub fn form_scale(t: &SymTensor) -> f64 {
    t.nonzero_entries()
        .map(|(idx, v)| idx.multiplicity() as f64 * v.to_f64().abs())
        .sum()
}

/// `p(s) = T (s, 1)^m` for a 2-dimensional exact tensor.
pub fn dehomogenize(t: &SymTensor) -> Poly {
    assert_eq!(t.dim(), 2, "dehomogenize needs a binary form");
    let m = t.order();
    let mut c = vec![BigRational::zero(); m + 1];
    for (idx, v) in t.nonzero_entries() {
        let ones = idx.labels().iter().filter(|&&l| l == 1).count();
        let r = v.to_mode(NumericMode::Exact).as_exact().unwrap().clone();
        c[ones] += r * BigRational::from_integer(idx.multiplicity().into());
    }
    Poly::new(c)
}

/// Exact behavior of a binary form on the nonnegative quadrant.
#[derive(Debug, Clone, PartialEq)]
pub enum BinaryBehavior {
    Positive,
    Zero(Witness),
    Negative(Witness),
}

/// Exact sign analysis of a 2-dimensional tensor: the axis `(1, 0)` and
/// `p(s) = T (s, 1)^m` on `[0, inf)`.
pub fn binary_behavior(t: &SymTensor) -> Result<BinaryBehavior> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedShape {
            order: t.order(),
            dim: t.dim(),
        });
    }
    let t = &t.to_mode(NumericMode::Exact);
    let lead = t.diagonal(1);
    if lead.signum() < 0 {
        return Ok(BinaryBehavior::Negative(Witness::at_ints(t, &[1, 0])?));
    }
    let p = dehomogenize(t);
    let point = |s: BigRational| vec![Scalar::Exact(s), Scalar::one()];
    match p.half_line_sign() {
        HalfLineSign::NegativeAt(s) => Ok(BinaryBehavior::Negative(Witness::at(t, point(s))?)),
        _ if lead.is_zero() => Ok(BinaryBehavior::Zero(Witness::at_ints(t, &[1, 0])?)),
        HalfLineSign::Positive => Ok(BinaryBehavior::Positive),
        HalfLineSign::ZeroAt(root) => {
            let exact = root.is_exact();
            let x = point(root.point().clone());
            Ok(BinaryBehavior::Zero(if exact {
                Witness::at(t, x)?
            } else {
                Witness::approximate_zero(t, x)?
            }))
        }
    }
}

/// Lifts a witness of the principal subtensor on `labels` to the full space.
fn pad_witness(t: &SymTensor, w: &Witness, labels: &[usize]) -> Result<Witness> {
    let mut x = vec![Scalar::zero(); t.dim()];
    for (slot, &l) in labels.iter().enumerate() {
        x[l - 1] = w.x[slot].clone();
    }
    let mut padded = Witness::at(t, x)?;
    if w.approximate {
        padded.kind = WitnessKind::Zero;
        padded.approximate = true;
    }
    Ok(padded)
}

/// Exact analysis of every 2-dimensional principal subtensor (the simplex
/// edges). Returns the first negative witness, otherwise the first zero one.
fn edge_behavior(t: &SymTensor) -> Result<(Option<Witness>, Option<Witness>)> {
    let mut zero = None;
    for i in 1..=t.dim() {
        for j in i + 1..=t.dim() {
            let sub = t.principal_subtensor(&[i, j])?;
            match binary_behavior(&sub)? {
                BinaryBehavior::Negative(w) => return Ok((Some(pad_witness(t, &w, &[i, j])?), zero)),
                BinaryBehavior::Zero(w) if zero.is_none() => zero = Some(pad_witness(t, &w, &[i, j])?),
                _ => {}
            }
        }
    }
    Ok((None, zero))
}

fn rationalize(x: &[f64]) -> Vec<Scalar> {
    x.iter()
        .map(|&v| Scalar::Exact(BigRational::from_float(v.max(0.0)).unwrap_or_else(BigRational::zero)))
        .collect()
}

/// Snaps each coordinate to the simplest rational within `1e-9`.
fn snap(x: &[f64]) -> Vec<Scalar> {
    let eps = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    x.iter()
        .map(|&v| {
            let c = BigRational::from_float(v.max(0.0)).unwrap_or_else(BigRational::zero);
            let lo = (&c - &eps).max(BigRational::zero());
            Scalar::Exact(simplest_rational_between(&lo, &(&c + &eps)))
        })
        .collect()
}

struct Refined {
    negative: Option<Witness>,
    zero: Option<Witness>,
    any_nonpositive: bool,
}

fn refine_from(t: &SymTensor, starts: &[(Scalar, LatticePoint)], cfg: &OracleConfig) -> Result<Refined> {
    let band = cfg.tol * form_scale(t);
    let mut out = Refined {
        negative: None,
        zero: None,
        any_nonpositive: false,
    };
    for (_, k) in starts {
        let x = refine(t, &k.to_simplex_f64(), cfg.refine_iterations);
        if x.iter().all(|&v| v == 0.0) {
            continue;
        }
        if t.is_exact() {
            let w = Witness::at(t, rationalize(&x))?;
            if w.value.signum() < 0 {
                out.negative = Some(w);
                return Ok(out);
            }
            let snapped = Witness::at(t, snap(&x))?;
            if snapped.value.signum() < 0 {
                out.negative = Some(snapped);
                return Ok(out);
            }
            if snapped.value.is_zero() && snapped.x.iter().any(|s| !s.is_zero()) {
                out.any_nonpositive = true;
                out.zero.get_or_insert(snapped);
            }
            if w.value.is_zero() {
                out.any_nonpositive = true;
                out.zero.get_or_insert(w);
            }
        } else {
            let w = Witness::at(t, x.iter().map(|&v| Scalar::Float(v)).collect())?;
            let v = w.value.to_f64();
            if v < -band {
                out.negative = Some(w);
                return Ok(out);
            }
            if v <= band {
                out.any_nonpositive = true;
                out.zero.get_or_insert(Witness { kind: WitnessKind::Zero, approximate: true, ..w });
            }
        }
    }
    Ok(out)
}

/// Brute-force verdict: lattice scan, then exact root analysis (dimension 2
/// and simplex edges) and refinement.
///
/// - `NotCopositive` (decisive) when any lattice, edge or refined value is
///   negative (below `-tol * scale` for float tensors, with
///   `scale = sum multiplicity * |entry| * N^m` on the lattice);
/// - `CopositiveNotStrict` when a zero is found and nothing negative;
/// - `StrictlyCopositive` otherwise.
pub fn oracle_verdict(t: &SymTensor, cfg: &OracleConfig) -> Result<OracleVerdict> {
    let lowest = lattice_lowest(t, cfg, cfg.refine_starts)?;
    let (min_value, argmin) = lowest[0].clone();
    let n = cfg.resolution;
    let exact = t.is_exact();
    let lattice_band = cfg.tol * form_scale(t) * (n as f64).powi(t.order() as i32);
    let make = |verdict, decisive, witness, stage| OracleVerdict {
        verdict,
        min_value: min_value.clone(),
        argmin: argmin.clone(),
        resolution: n,
        decisive,
        witness,
        stage,
    };
    let lattice_witness = || Witness::at(t, argmin.to_simplex().into_iter().map(|s| s.to_mode(t.mode())).collect());

    let lattice_negative = if exact {
        min_value.signum() < 0
    } else {
        min_value.to_f64() < -lattice_band
    };
    if lattice_negative {
        return Ok(make(Verdict::NotCopositive, true, Some(lattice_witness()?), OracleStage::Lattice));
    }

    if exact && t.dim() == 2 {
        return Ok(match binary_behavior(t)? {
            BinaryBehavior::Negative(w) => make(Verdict::NotCopositive, true, Some(w), OracleStage::RootAnalysis),
            BinaryBehavior::Zero(_) if min_value.is_zero() => make(
                Verdict::CopositiveNotStrict,
                true,
                Some(lattice_witness()?),
                OracleStage::Lattice,
            ),
            BinaryBehavior::Zero(w) => make(Verdict::CopositiveNotStrict, true, Some(w), OracleStage::RootAnalysis),
            BinaryBehavior::Positive => make(Verdict::StrictlyCopositive, true, None, OracleStage::RootAnalysis),
        });
    }

    let (edge_negative, edge_zero) = if exact && t.dim() > 2 {
        edge_behavior(t)?
    } else {
        (None, None)
    };
    if let Some(w) = edge_negative {
        return Ok(make(Verdict::NotCopositive, true, Some(w), OracleStage::RootAnalysis));
    }

    let refined = refine_from(t, &lowest, cfg)?;
    if let Some(w) = refined.negative {
        return Ok(make(Verdict::NotCopositive, true, Some(w), OracleStage::Refinement));
    }

    let lattice_zero = if exact {
        min_value.is_zero()
    } else {
        min_value.to_f64() <= lattice_band
    };
    if lattice_zero {
        let mut w = lattice_witness()?;
        if !exact {
            w.kind = WitnessKind::Zero;
            w.approximate = true;
        }
        return Ok(make(Verdict::CopositiveNotStrict, exact, Some(w), OracleStage::Lattice));
    }
    if let Some(w) = edge_zero {
        let decisive = !w.approximate;
        return Ok(make(Verdict::CopositiveNotStrict, decisive, Some(w), OracleStage::RootAnalysis));
    }
    if let Some(w) = refined.zero {
        let decisive = exact && !w.approximate;
        return Ok(make(Verdict::CopositiveNotStrict, decisive, Some(w), OracleStage::Refinement));
    }
    let decisive = exact && !refined.any_nonpositive;
    Ok(make(Verdict::StrictlyCopositive, decisive, None, OracleStage::Refinement))
}

/// A strictly positive evaluation: unit vectors first, then the all-ones
/// vector, then the lattice at resolution 8 in lexicographic order.
pub fn find_positive_witness(t: &SymTensor) -> Result<Option<Witness>> {
    let n = t.dim();
    let mut candidates: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    candidates.push(vec![1; n]);
    for x in candidates {
        let w = Witness::at_ints(t, &x)?;
        if w.value.signum() > 0 {
            return Ok(Some(w));
        }
    }
    for k in compositions(8, n) {
        let x: Vec<i64> = k.iter().map(|&v| v as i64).collect();
        let w = Witness::at_ints(t, &x)?;
        if w.value.signum() > 0 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// A nonnegative nonzero `x` with `T x^m = 0` (exactly, for exact tensors;
/// within `tol * scale` for float tensors).
///
/// Dimension 2 exact tensors use root isolation, which may return a certified
/// but irrational zero as an `approximate` witness.
pub fn find_zero_nonneg(t: &SymTensor, cfg: &OracleConfig) -> Result<Option<Witness>> {
    if t.is_exact() && t.dim() == 2 {
        if t.diagonal(1).is_zero() {
            return Ok(Some(Witness::at_ints(t, &[1, 0])?));
        }
        let p = dehomogenize(t);
        if p.eval(&BigRational::zero()).is_zero() {
            return Ok(Some(Witness::at_ints(t, &[0, 1])?));
        }
        let Some((lo, hi)) = p.isolate_positive_roots().into_iter().next() else {
            return Ok(None);
        };
        let width = BigRational::new(BigInt::one(), BigInt::one() << 64u32);
        let root = p.squarefree().refine_root(lo, hi, &width);
        let x = vec![Scalar::Exact(root.point().clone()), Scalar::one()];
        return Ok(Some(if root.is_exact() {
            Witness::at(t, x)?
        } else {
            Witness::approximate_zero(t, x)?
        }));
    }
    let lowest = lattice_lowest(t, cfg, cfg.refine_starts)?;
    let exact = t.is_exact();
    let band = cfg.tol * form_scale(t) * (cfg.resolution as f64).powi(t.order() as i32);
    for (v, k) in &lowest {
        let hit = if exact { v.is_zero() } else { v.to_f64().abs() <= band };
        if hit {
            let mut w = Witness::at(t, k.to_simplex().into_iter().map(|s| s.to_mode(t.mode())).collect())?;
            if !exact {
                w.kind = WitnessKind::Zero;
                w.approximate = true;
            }
            return Ok(Some(w));
        }
    }
    if exact && t.dim() > 2 {
        if let (_, Some(w)) = edge_behavior(t)? {
            if !w.approximate {
                return Ok(Some(w));
            }
        }
    }
    let refined = refine_from(t, &lowest, cfg)?;
    Ok(refined.zero.filter(|w| !exact || !w.approximate))
}

/// A nonnegative point where the form is negative, if the oracle finds one.
pub fn find_negative(t: &SymTensor, cfg: &OracleConfig) -> Result<Option<Witness>> {
    let v = oracle_verdict(t, cfg)?;
    Ok(match v.verdict {
        Verdict::NotCopositive => v.witness,
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn diag3() -> SymTensor {
        SymTensor::zeros(4, 3)
            .with(&[1, 1, 1, 1], 1)
            .unwrap()
            .with(&[2, 2, 2, 2], 1)
            .unwrap()
            .with(&[3, 3, 3, 3], 1)
            .unwrap()
    }

    fn binary(c: [i64; 5]) -> SymTensor {
        crate::binary::Quartic2Coeffs::from_ints(c).to_tensor()
    }

    #[test]
    fn composition_enumeration() {
        let all: Vec<_> = compositions(2, 3).collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 2], vec![0, 1, 1], vec![0, 2, 0], vec![1, 0, 1], vec![1, 1, 0], vec![2, 0, 0]]
        );
        for (n, parts) in [(3u32, 3usize), (60, 3), (240, 2), (7, 4)] {
            assert_eq!(compositions(n, parts).count() as u128, composition_count(n, parts));
        }
        assert_eq!(composition_count(60, 3), 1891);
    }

    #[test]
    fn diagonal_lattice_minimum() {
        let cfg = OracleConfig::default().with_resolution(3);
        let (v, k) = lattice_min(&diag3(), &cfg).unwrap();
        assert_eq!(v, Scalar::from_int(3));
        assert_eq!(k, LatticePoint(vec![1, 1, 1]));
    }

    #[test]
    fn binary_lattice_zero_at_midpoint() {
        let cfg = OracleConfig::default().with_resolution(60);
        let (v, k) = lattice_min(&binary([1, -1, 1, -1, 1]), &cfg).unwrap();
        assert_eq!(v, Scalar::zero());
        assert_eq!(k, LatticePoint(vec![30, 30]));
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let cfg = OracleConfig {
            max_lattice: 100,
            ..OracleConfig::default()
        };
        assert!(matches!(
            lattice_min(&diag3(), &cfg),
            Err(Error::LatticeTooLarge { count: 1891, cap: 100, .. })
        ));
    }

    #[test]
    fn refine_is_monotone_and_converges() {
        let t = binary([1, -1, 1, -1, 1]);
        let x = refine(&t, &[0.4, 0.6], 50);
        assert!(t.evaluate_f64(&x).unwrap() < 1e-10);
        assert!((x[0] + x[1] - 1.0).abs() < 1e-12);
        // a vertex minimum of a diagonal tensor is a fixed point
        let d = SymTensor::zeros(4, 2).with(&[1, 1, 1, 1], 1).unwrap().with(&[2, 2, 2, 2], 5).unwrap();
        let v = d.evaluate_f64(&[1.0, 0.0]).unwrap();
        let y = refine(&d, &[1.0, 0.0], 10);
        assert!(d.evaluate_f64(&y).unwrap() <= v);
    }

    #[test]
    fn verdicts() {
        let cfg = OracleConfig::for_dim(2).with_resolution(60);
        let v = oracle_verdict(&binary([1, -1, 1, -1, 1]), &cfg).unwrap();
        assert_eq!(v.verdict, Verdict::CopositiveNotStrict);
        assert!(v.decisive);
        let w = v.witness.unwrap();
        assert_eq!(w.x, vec![Scalar::Exact(crate::scalar::rat(1, 2)); 2]);
        assert!(w.value.is_zero());

        let ones = crate::tensor::canonical_indices(4, 3)
            .into_iter()
            .fold(SymTensor::zeros(4, 3), |t, idx| t.with(idx.labels(), 1).unwrap());
        let v = oracle_verdict(&ones, &OracleConfig::default().with_resolution(20)).unwrap();
        assert_eq!(v.verdict, Verdict::StrictlyCopositive);
        assert!(v.decisive);
    }

    #[test]
    fn positive_witness_order() {
        let w = find_positive_witness(&diag3()).unwrap().unwrap();
        assert_eq!(w.x, vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
        assert!(find_positive_witness(&SymTensor::zeros(4, 3)).unwrap().is_none());
    }

    #[test]
    fn zero_witnesses() {
        let cfg = OracleConfig::default();
        let w = find_zero_nonneg(&binary([1, -1, 1, -1, 1]), &cfg).unwrap().unwrap();
        assert_eq!(w.x, vec![Scalar::one(), Scalar::one()]);
        assert!(find_zero_nonneg(&diag3(), &cfg).unwrap().is_none());
        assert!(find_zero_nonneg(&binary([1, 0, 0, 0, 1]), &cfg).unwrap().is_none());
    }

    #[test]
    fn dehomogenize_matches_evaluation() {
        let t = binary([2, -1, 3, 5, -7]);
        let p = dehomogenize(&t);
        for s in [0i64, 1, 2, 5] {
            let direct = t.evaluate(&[Scalar::from_int(s), Scalar::one()]).unwrap();
            assert_eq!(Scalar::Exact(p.eval(&int(s))), direct);
        }
    }
}
