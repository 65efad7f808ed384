//! Decision rules for tensors with entries in `{-1, 0, 1}` and the dispatcher
//! that composes every rule in the crate.
//!
//! Gated rules return a report with `applicable = false` when the tensor is
//! outside their hypotheses; only [`dispatch`] chains rules together.

use std::fmt;

use serde::Serialize;

use crate::binary::{quartic2_copositive, quartic2_strict, zero_diagonal_witness, Quartic2Coeffs, Tri};
use crate::error::{Error, Result};
use crate::oracle::{find_negative, oracle_verdict, OracleConfig, OracleVerdict};
use crate::scalar::Scalar;
use crate::tensor::{canonical_indices, SymTensor};
use crate::verdict::{Verdict, Witness, WitnessKind};

/// Identifier of the rule that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "zero_diagonal")]
    ZeroDiagonal,
    /// 2x2 matrix criterion (binary quartic with both diagonals zero).
    #[serde(rename = "l22")]
    Matrix,
    /// Binary quartic criterion with strictness by root counting.
    #[serde(rename = "l23")]
    Quartic,
    /// Binary cubic criterion (binary quartic with one zero diagonal).
    #[serde(rename = "l24")]
    Cubic,
    #[serde(rename = "l25")]
    SignTable2,
    #[serde(rename = "l26")]
    SignStrict2,
    #[serde(rename = "thm32")]
    Thm32,
    #[serde(rename = "thm33")]
    Thm33,
    #[serde(rename = "thm36")]
    Thm36,
    #[serde(rename = "cor34")]
    Cor34,
    #[serde(rename = "cor35")]
    Cor35,
    /// A 2-dimensional principal subtensor is not copositive.
    #[serde(rename = "subtensor")]
    Subtensor,
    #[serde(rename = "oracle")]
    Oracle,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::ZeroDiagonal => "zero_diagonal",
            Rule::Matrix => "l22",
            Rule::Quartic => "l23",
            Rule::Cubic => "l24",
            Rule::SignTable2 => "l25",
            Rule::SignStrict2 => "l26",
            Rule::Thm32 => "thm32",
            Rule::Thm33 => "thm33",
            Rule::Thm36 => "thm36",
            Rule::Cor34 => "cor34",
            Rule::Cor35 => "cor35",
            Rule::Subtensor => "subtensor",
            Rule::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierReport {
    pub verdict: Option<Verdict>,
    /// Set only when `applicable`.
    pub rule: Option<Rule>,
    pub applicable: bool,
    pub evidence: Option<Witness>,
    /// False when the verdict is a heuristic oracle answer.
    pub decisive: bool,
    /// The oracle run, when the verdict relied on one.
    pub oracle: Option<OracleVerdict>,
}

impl ClassifierReport {
    pub fn inapplicable() -> Self {
        ClassifierReport {
            verdict: None,
            rule: None,
            applicable: false,
            evidence: None,
            decisive: false,
            oracle: None,
        }
    }

    fn decided(rule: Rule, verdict: Verdict, evidence: Option<Witness>) -> Self {
        ClassifierReport {
            verdict: Some(verdict),
            rule: Some(rule),
            applicable: true,
            evidence,
            decisive: true,
            oracle: None,
        }
    }

    /// Gate passed but the rule draws no conclusion.
    fn silent(rule: Rule) -> Self {
        ClassifierReport {
            verdict: None,
            rule: Some(rule),
            applicable: true,
            evidence: None,
            decisive: false,
            oracle: None,
        }
    }
}

fn sign_of(s: &Scalar) -> Option<i8> {
    match s.as_small_int() {
        Some(v @ -1..=1) if s.is_exact() => Some(v as i8),
        _ => None,
    }
}

fn check_shape(t: &SymTensor, dim: usize) -> Result<()> {
    if t.order() != 4 || t.dim() != dim {
        return Err(Error::UnsupportedShape {
            order: t.order(),
            dim: t.dim(),
        });
    }
    Ok(())
}

fn out_of_range(what: &str) -> Error {
    Error::Precondition(format!("{what}: sign tensor entries must be -1, 0 or 1"))
}

/// `(t1111, t1112, t1122, t1222, t2222)` with entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignTensor4x2(pub [i8; 5]);

impl SignTensor4x2 {
    pub fn new(t: [i8; 5]) -> Result<Self> {
        if t.iter().any(|v| !(-1..=1).contains(v)) {
            return Err(out_of_range("binary sign tensor"));
        }
        Ok(SignTensor4x2(t))
    }

    pub fn to_tensor(&self) -> SymTensor {
        Quartic2Coeffs::from_ints(self.0.map(i64::from)).to_tensor()
    }
}

impl TryFrom<&SymTensor> for SignTensor4x2 {
    type Error = Error;

    fn try_from(t: &SymTensor) -> Result<Self> {
        check_shape(t, 2)?;
        let labels = [[1, 1, 1, 1], [1, 1, 1, 2], [1, 1, 2, 2], [1, 2, 2, 2], [2, 2, 2, 2]];
        let mut out = [0i8; 5];
        for (slot, l) in out.iter_mut().zip(labels) {
            *slot = sign_of(&t.get(&l)).ok_or_else(|| out_of_range("binary sign tensor"))?;
        }
        Ok(SignTensor4x2(out))
    }
}

/// The 15 canonical slots of a 4th-order 3-dimensional tensor, in
/// lexicographic order (`1111, 1112, 1113, 1122, ..., 3333`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignTensor4x3(pub [i8; 15]);

impl SignTensor4x3 {
    pub fn new(t: [i8; 15]) -> Result<Self> {
        if t.iter().any(|v| !(-1..=1).contains(v)) {
            return Err(out_of_range("ternary sign tensor"));
        }
        Ok(SignTensor4x3(t))
    }

    /// Entry for labels in any order.
    pub fn get(&self, labels: [usize; 4]) -> i8 {
        let mut l = labels;
        l.sort_unstable();
        let pos = canonical_indices(4, 3)
            .iter()
            .position(|idx| idx.labels() == l)
            .expect("labels in 1..=3");
        self.0[pos]
    }

    pub fn to_tensor(&self) -> SymTensor {
        canonical_indices(4, 3)
            .into_iter()
            .zip(self.0)
            .fold(SymTensor::zeros(4, 3), |t, (idx, v)| t.with(idx.labels(), v as i64).unwrap())
    }

    fn diag(&self, i: usize) -> i8 {
        self.get([i; 4])
    }

    /// `t_iiij`.
    fn near(&self, i: usize, j: usize) -> i8 {
        self.get([i, i, i, j])
    }

    /// `t_iijj`.
    fn pair(&self, i: usize, j: usize) -> i8 {
        self.get([i, i, j, j])
    }

    /// `t_iijk` for the repeated label `i`.
    fn mixed(&self, i: usize) -> i8 {
        let (j, k) = others(i);
        self.get([i, i, j, k])
    }

    /// `t1123 + t1223 + t1233`.
    pub fn mixed_sum(&self) -> i8 {
        (1..=3).map(|i| self.mixed(i)).sum()
    }

    fn all_diag(&self, v: i8) -> bool {
        (1..=3).all(|i| self.diag(i) == v)
    }

    fn all_near(&self, v: i8) -> bool {
        ordered_pairs().all(|(i, j)| self.near(i, j) == v)
    }

    fn pairs(&self) -> [i8; 3] {
        [self.pair(1, 2), self.pair(1, 3), self.pair(2, 3)]
    }
}

impl TryFrom<&SymTensor> for SignTensor4x3 {
    type Error = Error;

    fn try_from(t: &SymTensor) -> Result<Self> {
        check_shape(t, 3)?;
        let mut out = [0i8; 15];
        for (slot, idx) in out.iter_mut().zip(canonical_indices(4, 3)) {
            *slot = sign_of(&t.get(idx.labels())).ok_or_else(|| out_of_range("ternary sign tensor"))?;
        }
        Ok(SignTensor4x3(out))
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

fn ordered_pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=3).flat_map(|i| (1..=3).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn in01(v: i8) -> bool {
    v == 0 || v == 1
}

fn lemma25_copositive([a, b, c, d, e]: [i8; 5]) -> bool {
    match (a, e) {
        (1, 1) => (c == 0 && in01(b) && in01(d)) || c == 1 || (b == 1 && d == 1),
        (0, 1) => in01(b) && ((in01(c) && in01(d)) || (c == 1 && d == -1) || (b == 1 && c == -1 && d == 1)),
        (1, 0) => in01(d) && ((in01(c) && in01(b)) || (c == 1 && b == -1) || (d == 1 && c == -1 && b == 1)),
        (0, 0) => (in01(b) && in01(c) && in01(d)) || (b == 1 && d == 1 && c == -1),
        _ => false,
    }
}

fn lemma25_strict([a, b, c, d, e]: [i8; 5]) -> bool {
    a == 1 && e == 1 && ((c == 0 && in01(b) && in01(d)) || (b == 1 && d == 1) || (b * d <= 0 && c == 1))
}

/// Copositivity and strictness of a binary sign quartic by table lookup.
///
/// Witnesses for non-strict verdicts come from the exact binary analysis.
pub fn classify_sign_2d(s: SignTensor4x2) -> Result<ClassifierReport> {
    let verdict = Verdict::from_bits(lemma25_copositive(s.0), lemma25_strict(s.0));
    let evidence = match verdict {
        Verdict::StrictlyCopositive => None,
        _ => quartic2_strict(&Quartic2Coeffs::from_ints(s.0.map(i64::from)))?
            .witness
            .filter(|w| match verdict {
                Verdict::NotCopositive => w.kind == WitnessKind::Negative,
                _ => w.kind == WitnessKind::Zero,
            }),
    };
    Ok(ClassifierReport::decided(Rule::SignTable2, verdict, evidence))
}

/// Strictness of a binary quartic whose entries are all `+-1`.
pub fn strict_sign_2d_allones(s: SignTensor4x2) -> Result<bool> {
    if s.0.contains(&0) {
        return Err(Error::Precondition("all-ones strictness rule needs every entry equal to -1 or 1".into()));
    }
    let [a, b, c, d, e] = s.0;
    Ok(a == 1 && e == 1 && ((b == 1 && d == 1) || (b * d == -1 && c == 1)))
}

/// First point among `candidates` where the form is negative, else the
/// oracle's negative witness.
fn negative_evidence(s: &SignTensor4x3, candidates: &[[i64; 3]]) -> Result<Option<Witness>> {
    let t = s.to_tensor();
    for x in candidates {
        let w = Witness::at_ints(&t, x)?;
        if w.kind == WitnessKind::Negative {
            return Ok(Some(w));
        }
    }
    find_negative(&t, &OracleConfig::for_dim(3))
}

fn point_3_1_1(i: usize) -> [i64; 3] {
    let mut x = [1; 3];
    x[i - 1] = 3;
    x
}

pub fn thm32_gate(s: &SignTensor4x3) -> bool {
    s.0.iter().all(|&v| v != 0)
        && s.all_diag(1)
        && s.pairs() == [1, 1, 1]
        && ordered_pairs().all(|(i, j)| s.near(i, j) * s.near(j, i) == -1)
}

/// Ternary `+-1` tensors with unit diagonals and `t_iijj = 1` whose
/// `t_iiij`, `t_ijjj` have opposite signs: strictly copositive iff some
/// `t_iijk` is 1 and every `t_iijk = -1` has `t_iiij + t_iiik >= 0`.
pub fn thm32_decide(s: &SignTensor4x3) -> Result<ClassifierReport> {
    if !thm32_gate(s) {
        return Ok(ClassifierReport::inapplicable());
    }
    let some_positive = (1..=3).any(|i| s.mixed(i) == 1);
    let failing = (1..=3).find(|&i| {
        let (j, k) = others(i);
        s.mixed(i) == -1 && s.near(i, j) + s.near(i, k) < 0
    });
    if some_positive && failing.is_none() {
        return Ok(ClassifierReport::decided(Rule::Thm32, Verdict::StrictlyCopositive, None));
    }
    let candidates: Vec<[i64; 3]> = match failing {
        Some(i) if some_positive => vec![point_3_1_1(i), [1, 1, 1]],
        _ => vec![[1, 1, 1]],
    };
    let evidence = negative_evidence(s, &candidates)?;
    Ok(ClassifierReport::decided(Rule::Thm32, Verdict::NotCopositive, evidence))
}

pub fn thm33_gate(s: &SignTensor4x3) -> bool {
    s.all_diag(1) && s.all_near(1) && s.pairs() == [-1, -1, -1]
}

/// Unit `t_iiii`, `t_iiij` and `t_iijj = -1`: strictly copositive iff
/// `t1123 + t1223 + t1233 >= 0`.
pub fn thm33_decide(s: &SignTensor4x3) -> Result<ClassifierReport> {
    if !thm33_gate(s) {
        return Ok(ClassifierReport::inapplicable());
    }
    if s.mixed_sum() >= 0 {
        return Ok(ClassifierReport::decided(Rule::Thm33, Verdict::StrictlyCopositive, None));
    }
    let evidence = negative_evidence(s, &[[1, 1, 1]])?;
    Ok(ClassifierReport::decided(Rule::Thm33, Verdict::NotCopositive, evidence))
}

pub fn cor34_gate(s: &SignTensor4x3) -> bool {
    s.all_diag(1) && s.all_near(1)
}

/// Unit `t_iiii` and `t_iiij`: strictly copositive if
/// `t1123 + t1223 + t1233 >= 0`; silent otherwise.
pub fn cor34_sufficient(s: &SignTensor4x3) -> ClassifierReport {
    if !cor34_gate(s) {
        return ClassifierReport::inapplicable();
    }
    if s.mixed_sum() >= 0 {
        ClassifierReport::decided(Rule::Cor34, Verdict::StrictlyCopositive, None)
    } else {
        ClassifierReport::silent(Rule::Cor34)
    }
}

/// `t_iiii >= 1`, `t_iiij >= 1`, `t_iijj >= -1` and `t_iijk >= 0` imply
/// strict copositivity for any real entries.
pub fn cor35_sufficient(t: &SymTensor) -> Result<Option<Verdict>> {
    check_shape(t, 3)?;
    let one = Scalar::one();
    let minus_one = Scalar::from_int(-1);
    let zero = Scalar::zero();
    let ok = (1..=3).all(|i| t.diagonal(i) >= one)
        && ordered_pairs().all(|(i, j)| t.near_diagonal(i, j) >= one)
        && [[1, 1, 2, 2], [1, 1, 3, 3], [2, 2, 3, 3]].iter().all(|l| t.get(l) >= minus_one)
        && [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]].iter().all(|l| t.get(l) >= zero);
    Ok(ok.then_some(Verdict::StrictlyCopositive))
}

pub fn thm36_gate(s: &SignTensor4x3) -> bool {
    s.all_diag(1) && s.all_near(1) && (1..=3).all(|i| s.mixed(i) == -1)
}

/// Unit `t_iiii`, `t_iiij` and `t_iijk = -1`: strictly copositive iff every
/// `t_iijj` is 0 or 1 and at least two of them are 1.
pub fn thm36_decide(s: &SignTensor4x3) -> Result<ClassifierReport> {
    if !thm36_gate(s) {
        return Ok(ClassifierReport::inapplicable());
    }
    let p = s.pairs();
    if p.iter().all(|&v| in01(v)) && p.iter().filter(|&&v| v == 1).count() >= 2 {
        return Ok(ClassifierReport::decided(Rule::Thm36, Verdict::StrictlyCopositive, None));
    }
    let evidence = negative_evidence(s, &[[1, 1, 1]])?;
    Ok(ClassifierReport::decided(Rule::Thm36, Verdict::NotCopositive, evidence))
}

/// Runs every applicable rule with the default oracle configuration.
pub fn dispatch(t: &SymTensor) -> Result<ClassifierReport> {
    dispatch_with(t, &OracleConfig::for_dim(t.dim()))
}

/// Rule order:
/// - dimension 2: zero-diagonal filter, all-`+-1` strictness rule, sign
///   table, binary criteria (quartic / cubic / matrix), oracle;
/// - dimension 3: zero-diagonal filter, the three iff-theorems for sign
///   tensors, the two sufficient corollaries, screening of the 2-dimensional
///   principal subtensors, oracle.
pub fn dispatch_with(t: &SymTensor, cfg: &OracleConfig) -> Result<ClassifierReport> {
    if t.order() != 4 || !(2..=3).contains(&t.dim()) {
        return Err(Error::UnsupportedShape {
            order: t.order(),
            dim: t.dim(),
        });
    }
    if let Some(v) = t.zero_diagonal_filter() {
        let w = zero_diagonal_witness(t, v.i, v.j)?;
        return Ok(ClassifierReport::decided(Rule::ZeroDiagonal, Verdict::NotCopositive, Some(w)));
    }
    if t.dim() == 2 {
        dispatch2(t, cfg)
    } else {
        dispatch3(t, cfg)
    }
}

fn dispatch2(t: &SymTensor, cfg: &OracleConfig) -> Result<ClassifierReport> {
    if let Ok(s) = SignTensor4x2::try_from(t) {
        if !s.0.contains(&0) && strict_sign_2d_allones(s)? {
            return Ok(ClassifierReport::decided(Rule::SignStrict2, Verdict::StrictlyCopositive, None));
        }
        return classify_sign_2d(s);
    }
    let q = Quartic2Coeffs::from_tensor(t)?;
    if t.is_exact() {
        let out = quartic2_strict(&q)?;
        let rule = match out.via {
            "cubic" => Rule::Cubic,
            "matrix" => Rule::Matrix,
            "zero_diagonal" => Rule::ZeroDiagonal,
            _ => Rule::Quartic,
        };
        return Ok(ClassifierReport::decided(rule, out.verdict, out.witness));
    }
    // float: the quartic criterion decides copositivity up to tolerance, the
    // oracle supplies strictness and witnesses
    if q.t1111.signum() > 0 && q.t2222.signum() > 0 {
        let tri = quartic2_copositive(&q)?;
        if tri != Tri::Unknown {
            let ov = oracle_verdict(t, cfg)?;
            let verdict = match (tri, ov.verdict) {
                (Tri::False, _) => Verdict::NotCopositive,
                (_, Verdict::StrictlyCopositive) => Verdict::StrictlyCopositive,
                _ => Verdict::CopositiveNotStrict,
            };
            let evidence = ov.witness.clone().filter(|w| match verdict {
                Verdict::NotCopositive => w.kind == WitnessKind::Negative,
                _ => w.kind == WitnessKind::Zero,
            });
            return Ok(ClassifierReport {
                verdict: Some(verdict),
                rule: Some(Rule::Quartic),
                applicable: true,
                evidence,
                decisive: verdict == Verdict::NotCopositive || ov.decisive,
                oracle: Some(ov),
            });
        }
    }
    oracle_report(t, cfg)
}

fn dispatch3(t: &SymTensor, cfg: &OracleConfig) -> Result<ClassifierReport> {
    if let Ok(s) = SignTensor4x3::try_from(t) {
        for rule in [thm32_decide, thm33_decide, thm36_decide] {
            let r = rule(&s)?;
            if r.verdict.is_some() {
                return Ok(r);
            }
        }
    }
    if let Some(v) = cor35_sufficient(t)? {
        return Ok(ClassifierReport::decided(Rule::Cor35, v, None));
    }
    if let Ok(s) = SignTensor4x3::try_from(t) {
        let r = cor34_sufficient(&s);
        if r.verdict.is_some() {
            return Ok(r);
        }
    }
    if let Some(w) = screen_subtensors(t)? {
        return Ok(ClassifierReport::decided(Rule::Subtensor, Verdict::NotCopositive, Some(w)));
    }
    oracle_report(t, cfg)
}

/// A negative point of some 2-dimensional principal subtensor, lifted to the
/// full space. Float subtensors are only screened when the quartic criterion
/// rejects them outright.
fn screen_subtensors(t: &SymTensor) -> Result<Option<Witness>> {
    for i in 1..=t.dim() {
        for j in i + 1..=t.dim() {
            let sub = t.principal_subtensor(&[i, j])?;
            let lift = |w: &Witness| {
                let mut x = vec![Scalar::zero().to_mode(t.mode()); t.dim()];
                x[i - 1] = w.x[0].clone();
                x[j - 1] = w.x[1].clone();
                Witness::at(t, x)
            };
            if sub.is_exact() {
                let out = quartic2_strict(&Quartic2Coeffs::from_tensor(&sub)?)?;
                if let (Verdict::NotCopositive, Some(w)) = (out.verdict, &out.witness) {
                    return Ok(Some(lift(w)?));
                }
                continue;
            }
            for (k, e) in [(0, [1, 0]), (1, [0, 1])] {
                if sub.diagonal(k + 1).signum() < 0 {
                    return Ok(Some(lift(&Witness::at_ints(&sub, &e)?)?));
                }
            }
            let q = Quartic2Coeffs::from_tensor(&sub)?;
            if q.t1111.signum() > 0 && q.t2222.signum() > 0 && quartic2_copositive(&q)? == Tri::False {
                if let Some(w) = find_negative(&sub, &OracleConfig::for_dim(2))? {
                    return Ok(Some(lift(&w)?));
                }
            }
        }
    }
    Ok(None)
}

fn oracle_report(t: &SymTensor, cfg: &OracleConfig) -> Result<ClassifierReport> {
    let ov = oracle_verdict(t, cfg)?;
    Ok(ClassifierReport {
        verdict: Some(ov.verdict),
        rule: Some(Rule::Oracle),
        applicable: true,
        evidence: ov.witness.clone(),
        decisive: ov.decisive,
        oracle: Some(ov),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2(t: [i8; 5]) -> SignTensor4x2 {
        SignTensor4x2::new(t).unwrap()
    }

    /// Builds a ternary sign tensor from its structural groups.
    pub(crate) fn s3(diag: i8, near: [[i8; 2]; 3], pairs: [i8; 3], mixed: [i8; 3]) -> SignTensor4x3 {
        let mut t = SymTensor::zeros(4, 3);
        for i in 1..=3 {
            t = t.with(&[i, i, i, i], diag as i64).unwrap();
            let (j, k) = others(i);
            t = t.with(&[i, i, i, j], near[i - 1][0] as i64).unwrap();
            t = t.with(&[i, i, i, k], near[i - 1][1] as i64).unwrap();
            t = t.with(&[i, i, j, k], mixed[i - 1] as i64).unwrap();
        }
        for (l, v) in [[1, 1, 2, 2], [1, 1, 3, 3], [2, 2, 3, 3]].iter().zip(pairs) {
            t = t.with(l, v as i64).unwrap();
        }
        SignTensor4x3::try_from(&t).unwrap()
    }

    #[test]
    fn binary_sign_examples() {
        let v = |t| classify_sign_2d(s2(t)).unwrap().verdict.unwrap();
        assert_eq!(v([1, -1, 1, -1, 1]), Verdict::CopositiveNotStrict);
        assert_eq!(v([0, 1, -1, 1, 1]), Verdict::CopositiveNotStrict);
        assert_eq!(v([1, 1, 1, 1, 1]), Verdict::StrictlyCopositive);
        assert_eq!(v([0, -1, 1, 1, 0]), Verdict::NotCopositive);
        let r = classify_sign_2d(s2([1, -1, 1, -1, 1])).unwrap();
        assert_eq!(r.evidence.unwrap().x, vec![Scalar::one(), Scalar::one()]);
    }

    #[test]
    fn allones_strictness() {
        assert!(strict_sign_2d_allones(s2([1, 1, -1, 1, 1])).unwrap());
        assert!(strict_sign_2d_allones(s2([1, -1, 1, 1, 1])).unwrap());
        assert!(!strict_sign_2d_allones(s2([1, -1, -1, 1, 1])).unwrap());
        assert!(strict_sign_2d_allones(s2([1, 0, 1, 1, 1])).is_err());
    }

    #[test]
    fn thm32_examples() {
        let gated = |m| s3(1, [[-1, -1], [1, 1], [1, -1]], [1, 1, 1], m);
        let r = thm32_decide(&gated([-1, -1, -1])).unwrap();
        assert_eq!(r.verdict, Some(Verdict::NotCopositive));
        assert_eq!(r.evidence.unwrap().value, Scalar::from_int(-15));

        let r = thm32_decide(&gated([-1, 1, 1])).unwrap();
        assert_eq!(r.verdict, Some(Verdict::NotCopositive));
        let w = r.evidence.unwrap();
        assert_eq!(w.x, vec![Scalar::from_int(3), Scalar::one(), Scalar::one()]);
        assert_eq!(w.value, Scalar::from_int(-31));

        let r = thm32_decide(&gated([1, 1, 1])).unwrap();
        assert_eq!(r.verdict, Some(Verdict::StrictlyCopositive));
        assert!(!thm32_decide(&s3(1, [[1, 1]; 3], [1, 1, 1], [1, 1, 1])).unwrap().applicable);
    }

    #[test]
    fn thm33_and_cor34() {
        let t = |m| s3(1, [[1, 1]; 3], [-1, -1, -1], m);
        assert_eq!(thm33_decide(&t([-1, 1, 0])).unwrap().verdict, Some(Verdict::StrictlyCopositive));
        assert_eq!(thm33_decide(&t([0, 0, 0])).unwrap().verdict, Some(Verdict::StrictlyCopositive));
        let r = thm33_decide(&t([-1, 0, 0])).unwrap();
        assert_eq!(r.verdict, Some(Verdict::NotCopositive));
        assert_eq!(r.evidence.unwrap().value, Scalar::from_int(-3));

        let c = |p, m| cor34_sufficient(&s3(1, [[1, 1]; 3], p, m));
        assert_eq!(c([-1, 0, 1], [1, 0, 0]).verdict, Some(Verdict::StrictlyCopositive));
        let silent = c([-1, 0, 1], [-1, 0, 0]);
        assert!(silent.applicable && silent.verdict.is_none());
        assert_eq!(c([-1, -1, -1], [0, 0, 0]).verdict, Some(Verdict::StrictlyCopositive));
    }

    #[test]
    fn cor35_examples() {
        let ones = s3(1, [[1, 1]; 3], [1, 1, 1], [1, 1, 1]).to_tensor();
        assert_eq!(cor35_sufficient(&ones).unwrap(), Some(Verdict::StrictlyCopositive));
        let bounds = s3(1, [[1, 1]; 3], [-1, -1, -1], [0, 0, 0])
            .to_tensor()
            .with(&[1, 1, 1, 1], 2)
            .unwrap()
            .with(&[2, 2, 2, 2], 2)
            .unwrap()
            .with(&[3, 3, 3, 3], 2)
            .unwrap();
        assert_eq!(cor35_sufficient(&bounds).unwrap(), Some(Verdict::StrictlyCopositive));
        let below = bounds.with(&[1, 1, 2, 3], -0.5).unwrap();
        assert_eq!(cor35_sufficient(&below).unwrap(), None);
    }

    #[test]
    fn thm36_examples() {
        let t = |p| s3(1, [[1, 1]; 3], p, [-1, -1, -1]);
        assert_eq!(thm36_decide(&t([1, 1, 0])).unwrap().verdict, Some(Verdict::StrictlyCopositive));
        assert_eq!(thm36_decide(&t([1, 1, -1])).unwrap().verdict, Some(Verdict::NotCopositive));
        let r = thm36_decide(&t([1, 0, 0])).unwrap();
        assert_eq!(r.verdict, Some(Verdict::NotCopositive));
        assert_eq!(r.evidence.unwrap().value, Scalar::from_int(-3));
    }

    #[test]
    fn dispatch_rules() {
        let rule = |t: &SymTensor| dispatch(t).unwrap().rule.unwrap();
        assert_eq!(rule(&s3(1, [[1, 1]; 3], [-1, -1, -1], [1, -1, -1]).to_tensor()), Rule::Thm33);
        assert_eq!(rule(&s3(1, [[1, 1]; 3], [1, 1, 1], [1, 1, 1]).to_tensor()), Rule::Cor35);
        let float = SymTensor::zeros(4, 3)
            .with(&[1, 1, 1, 1], 1.5)
            .unwrap()
            .with(&[2, 2, 2, 2], 1.0)
            .unwrap()
            .with(&[3, 3, 3, 3], 1.0)
            .unwrap()
            .with(&[1, 1, 2, 3], -0.25)
            .unwrap();
        assert_eq!(rule(&float), Rule::Oracle);
        let filtered = SymTensor::zeros(4, 3).with(&[1, 1, 1, 2], -1).unwrap();
        let r = dispatch(&filtered).unwrap();
        assert_eq!(r.rule, Some(Rule::ZeroDiagonal));
        assert_eq!(r.evidence.unwrap().kind, WitnessKind::Negative);
        assert!(matches!(dispatch(&SymTensor::zeros(3, 3)), Err(Error::UnsupportedShape { .. })));
    }
}
