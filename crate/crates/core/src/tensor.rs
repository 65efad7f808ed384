//! Symmetric tensors stored over canonical (sorted) multi-indices.
//!
//! A symmetric tensor of order `m` and dimension `n` has one independent entry
//! per non-decreasing index tuple. Only explicitly set entries are stored and
//! everything else reads as an exact zero. Labels are 1-based throughout.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{NumericMode, Scalar};

/// A multi-index in canonical (non-decreasing) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Sorts `labels` after checking each lies in `1..=dim`.
    pub fn canonicalize(labels: &[usize], dim: usize) -> Result<Self> {
        if let Some(&label) = labels.iter().find(|&&l| l == 0 || l > dim) {
            return Err(Error::IndexOutOfRange { label, dim });
        }
        let mut v = labels.to_vec();
        v.sort_unstable();
        Ok(MultiIndex(v))
    }

    /// Wraps labels that are already canonical. Returns `None` otherwise.
    pub fn from_canonical(labels: Vec<usize>) -> Option<Self> {
        if labels.windows(2).all(|w| w[0] <= w[1]) && labels.iter().all(|&l| l >= 1) {
            Some(MultiIndex(labels))
        } else {
            None
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// Number of distinct orderings of this index: `m! / prod(count!)`.
    pub fn multiplicity(&self) -> u64 {
        multiplicity(&self.0)
    }

    /// Exponent of each variable `1..=dim` in the monomial this index selects.
    pub fn exponents(&self, dim: usize) -> Vec<u32> {
        let mut e = vec![0u32; dim];
        for &l in &self.0 {
            e[l - 1] += 1;
        }
        e
    }

    /// Key used by the file format, e.g. `"1123"`. Requires labels below 10.
    pub fn key(&self) -> String {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// `m! / prod(count!)` for a sorted label tuple.
///
/// Panics on unsorted input: callers must canonicalize first.
pub fn multiplicity(sorted: &[usize]) -> u64 {
    assert!(
        sorted.windows(2).all(|w| w[0] <= w[1]),
        "multiplicity requires a canonical multi-index"
    );
    let mut result = factorial(sorted.len());
    let mut run = 1;
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            result /= factorial(run);
            run = 1;
        }
    }
    if !sorted.is_empty() {
        result /= factorial(run);
    }
    result
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All canonical multi-indices of the given order and dimension, in
/// lexicographic order. There are `C(n+m-1, m)` of them.
pub fn canonical_indices(order: usize, dim: usize) -> Vec<MultiIndex> {
    fn rec(start: usize, dim: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if left == 0 {
            out.push(MultiIndex(cur.clone()));
            return;
        }
        for l in start..=dim {
            cur.push(l);
            rec(l, dim, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, dim, order, &mut Vec::with_capacity(order), &mut out);
    out
}

pub type Vector = Vec<Scalar>;

/// Symmetric tensor with sparse canonical storage. Immutable once built.
#[derive(Debug, Clone)]
pub struct SymTensor {
    order: usize,
    dim: usize,
    mode: NumericMode,
    entries: BTreeMap<MultiIndex, Scalar>,
}

impl SymTensor {
    /// The zero tensor in exact mode.
    pub fn zeros(order: usize, dim: usize) -> Self {
        assert!(order >= 1 && dim >= 1, "order and dimension must be positive");
        SymTensor {
            order,
            dim,
            mode: NumericMode::Exact,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a tensor from `(labels, value)` pairs. Labels may be in any
    /// order; two pairs naming the same canonical index are rejected.
    pub fn from_entries<I, L>(order: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, Scalar)>,
        L: AsRef<[usize]>,
    {
        let mut t = SymTensor::zeros(order, dim);
        for (labels, value) in entries {
            let labels = labels.as_ref();
            let idx = t.index(labels)?;
            if t.entries.contains_key(&idx) {
                return Err(Error::parse(idx.key(), "duplicate canonical index"));
            }
            t.entries.insert(idx, value);
        }
        t.normalize_mode();
        Ok(t)
    }

    /// Builds the tensor of a homogeneous form given as `(exponents, coefficient)`
    /// monomials: each entry is the coefficient divided by the multiplicity.
    /// Repeated monomials are summed.
    pub fn from_monomials<I, E>(order: usize, dim: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, Scalar)>,
        E: AsRef<[u32]>,
    {
        let mut t = SymTensor::zeros(order, dim);
        for (exps, coeff) in monomials {
            let exps = exps.as_ref();
            if exps.len() != dim {
                return Err(Error::DimensionMismatch { got: exps.len(), dim });
            }
            let labels: Vec<usize> = exps
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| std::iter::repeat(i + 1).take(e as usize))
                .collect();
            let idx = t.index(&labels)?;
            let share = &coeff * &Scalar::Exact(BigRational::new(1.into(), idx.multiplicity().into()));
            let entry = t.entries.remove(&idx).map_or(share.clone(), |old| &old + &share);
            t.entries.insert(idx, entry);
        }
        t.normalize_mode();
        Ok(t)
    }

    /// Returns a copy with one entry replaced (any label order).
    pub fn with(mut self, labels: &[usize], value: impl Into<Scalar>) -> Result<Self> {
        let idx = self.index(labels)?;
        self.entries.insert(idx, value.into());
        self.normalize_mode();
        Ok(self)
    }

    fn normalize_mode(&mut self) {
        self.mode = if self.entries.values().all(Scalar::is_exact) {
            NumericMode::Exact
        } else {
            NumericMode::Float
        };
        if self.mode == NumericMode::Float {
            for v in self.entries.values_mut() {
                *v = v.to_mode(NumericMode::Float);
            }
        }
    }

    fn index(&self, labels: &[usize]) -> Result<MultiIndex> {
        if labels.len() != self.order {
            return Err(Error::OrderMismatch {
                got: labels.len(),
                order: self.order,
            });
        }
        MultiIndex::canonicalize(labels, self.dim)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> NumericMode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == NumericMode::Exact
    }

    /// Entry at any ordering of `labels`; unset entries are exact zero.
    pub fn get(&self, labels: &[usize]) -> Scalar {
        let mut v = labels.to_vec();
        v.sort_unstable();
        self.entries
            .get(&MultiIndex(v))
            .cloned()
            .unwrap_or_else(|| Scalar::zero().to_mode(self.mode))
    }

    /// Stored entries, including explicit zeros, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.entries.iter()
    }

    /// Stored entries with a nonzero value.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }

    /// Same tensor in another numeric mode.
    pub fn to_mode(&self, mode: NumericMode) -> SymTensor {
        SymTensor {
            order: self.order,
            dim: self.dim,
            mode,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.to_mode(mode)))
                .collect(),
        }
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(&self, factor: &Scalar) -> SymTensor {
        let mut t = SymTensor {
            order: self.order,
            dim: self.dim,
            mode: self.mode,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        };
        t.normalize_mode();
        t
    }

    /// `T x^m = sum over canonical idx of multiplicity(idx) * t_idx * prod x_i`.
    ///
    /// Exact when the tensor and every coordinate are exact.
    pub fn evaluate(&self, x: &[Scalar]) -> Result<Scalar> {
        self.check_len(x.len())?;
        if self.is_exact() && x.iter().all(Scalar::is_exact) {
            let xs: Vec<BigRational> = x.iter().map(|s| s.as_exact().unwrap().clone()).collect();
            Ok(Scalar::Exact(self.evaluate_exact(&xs)?))
        } else {
            let xs: Vec<f64> = x.iter().map(Scalar::to_f64).collect();
            Ok(Scalar::Float(self.evaluate_f64(&xs)?))
        }
    }

    /// Exact evaluation. Float entries are taken at their exact binary value.
    pub fn evaluate_exact(&self, x: &[BigRational]) -> Result<BigRational> {
        self.check_len(x.len())?;
        let mut sum = BigRational::zero();
        for (idx, v) in self.nonzero_entries() {
            let coeff = match v {
                Scalar::Exact(r) => r.clone(),
                Scalar::Float(_) => v.to_mode(NumericMode::Exact).as_exact().unwrap().clone(),
            };
            let mut term = coeff * BigRational::from_integer(idx.multiplicity().into());
            for &l in idx.labels() {
                term *= &x[l - 1];
            }
            sum += term;
        }
        Ok(sum)
    }

    pub fn evaluate_f64(&self, x: &[f64]) -> Result<f64> {
        self.check_len(x.len())?;
        Ok(self
            .nonzero_entries()
            .map(|(idx, v)| {
                idx.labels()
                    .iter()
                    .fold(idx.multiplicity() as f64 * v.to_f64(), |acc, &l| acc * x[l - 1])
            })
            .sum())
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch { got, dim: self.dim });
        }
        Ok(())
    }

    /// Restriction to the labels in `subset`, relabeled `1..=|subset|` in
    /// increasing label order.
    pub fn principal_subtensor(&self, subset: &[usize]) -> Result<SymTensor> {
        let mut labels = subset.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.is_empty() || labels.iter().any(|&l| l == 0 || l > self.dim) {
            return Err(Error::BadIndexSet { dim: self.dim });
        }
        let relabel = |l: usize| labels.iter().position(|&s| s == l).map(|p| p + 1);
        let entries = self.entries.iter().filter_map(|(idx, v)| {
            let mapped: Option<Vec<usize>> = idx.labels().iter().map(|&l| relabel(l)).collect();
            mapped.map(|m| (MultiIndex(m), v.clone()))
        });
        Ok(SymTensor {
            order: self.order,
            dim: labels.len(),
            mode: self.mode,
            entries: entries.collect(),
        })
    }

    /// Diagonal entry `t_{i...i}`.
    pub fn diagonal(&self, i: usize) -> Scalar {
        self.get(&vec![i; self.order])
    }

    /// Entry `t_{i...ij}` (label `i` repeated `order - 1` times).
    pub fn near_diagonal(&self, i: usize, j: usize) -> Scalar {
        let mut l = vec![i; self.order - 1];
        l.push(j);
        self.get(&l)
    }

    /// Checks the zero-diagonal necessary condition: if `t_{i...i} = 0` then
    /// every `t_{i...ij}` must be nonnegative. Returns the first violating
    /// pair `(i, j)`.
    pub fn zero_diagonal_filter(&self) -> Option<ZeroDiagonalViolation> {
        for i in 1..=self.dim {
            if !self.diagonal(i).is_zero() {
                continue;
            }
            for j in (1..=self.dim).filter(|&j| j != i) {
                let v = self.near_diagonal(i, j);
                if v.signum() < 0 {
                    return Some(ZeroDiagonalViolation { i, j, entry: v });
                }
            }
        }
        None
    }
}

/// A zero diagonal `t_{i...i}` next to a negative `t_{i...ij}`: the form is
/// negative at `e_i + eps e_j` for small `eps > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDiagonalViolation {
    pub i: usize,
    pub j: usize,
    pub entry: Scalar,
}

impl PartialEq for SymTensor {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.dim == other.dim
            && canonical_indices(self.order, self.dim)
                .iter()
                .all(|idx| self.get(idx.labels()) == other.get(idx.labels()))
    }
}
