//! Built-in sign-tensor families and the harness that checks each family's
//! classifier against the oracle, member by member.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{oracle_verdict, OracleConfig, OracleVerdict};
use crate::sign::{
    classify_sign_2d, cor34_sufficient, strict_sign_2d_allones, thm32_decide, thm33_decide, thm36_decide,
    SignTensor4x2, SignTensor4x3,
};
use crate::tensor::{canonical_indices, SymTensor};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All binary sign quartics, `3^5`.
    L25,
    /// Binary quartics with entries `+-1`, `2^5`.
    L26,
    /// Ternary `+-1` tensors with unit `t_iiii`, `t_iijj` and
    /// `t_iiij t_ijjj = -1`, `2^3 * 2^3`.
    T32,
    /// Unit `t_iiii`, `t_iiij`, `t_iijj = -1`, free `t_iijk`, `3^3`.
    T33,
    /// Unit `t_iiii`, `t_iiij`, `t_iijk = -1`, free `t_iijj`, `3^3`.
    T36,
    /// Unit `t_iiii`, `t_iiij`, free `t_iijj` and `t_iijk`, `3^6`.
    C34,
}

/// How a family's classifier is compared with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Full three-way verdict.
    Full,
    /// Only the strictness bit.
    StrictOnly,
    /// Only "classifier says strict implies oracle says strict".
    SufficientOnly,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::L25, Family::L26, Family::T32, Family::T33, Family::T36, Family::C34];

    pub fn name(self) -> &'static str {
        match self {
            Family::L25 => "L25",
            Family::L26 => "L26",
            Family::T32 => "T32",
            Family::T33 => "T33",
            Family::T36 => "T36",
            Family::C34 => "C34",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Family::L25 | Family::L26 => 2,
            _ => 3,
        }
    }

    pub fn expected_count(self) -> usize {
        match self {
            Family::L25 => 243,
            Family::L26 => 32,
            Family::T32 => 64,
            Family::T33 | Family::T36 => 27,
            Family::C34 => 729,
        }
    }

    pub fn check(self) -> Check {
        match self {
            Family::L26 => Check::StrictOnly,
            Family::C34 => Check::SufficientOnly,
            _ => Check::Full,
        }
    }

    /// Default oracle resolution for cross-validation.
    pub fn default_resolution(self) -> u32 {
        if self.dim() == 2 {
            240
        } else {
            60
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Cartesian power of `values`, first coordinate slowest.
fn product(values: &[i8], len: usize) -> Vec<Vec<i8>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

const PAIRS: [[usize; 4]; 3] = [[1, 1, 2, 2], [1, 1, 3, 3], [2, 2, 3, 3]];
const MIXED: [[usize; 4]; 3] = [[1, 1, 2, 3], [1, 2, 2, 3], [1, 2, 3, 3]];

/// Ternary tensor with unit `t_iiii`; `near(i, j)` gives `t_iiij`.
fn ternary(near: impl Fn(usize, usize) -> i8, pairs: &[i8], mixed: &[i8]) -> SymTensor {
    let mut t = SymTensor::zeros(4, 3);
    for i in 1..=3 {
        t = t.with(&[i; 4], 1).unwrap();
        for j in (1..=3).filter(|&j| j != i) {
            t = t.with(&[i, i, i, j], near(i, j) as i64).unwrap();
        }
    }
    for (l, &v) in PAIRS.iter().zip(pairs) {
        t = t.with(l, v as i64).unwrap();
    }
    for (l, &v) in MIXED.iter().zip(mixed) {
        t = t.with(l, v as i64).unwrap();
    }
    t
}

/// Every member exactly once, in a fixed order.
pub fn enumerate_family(family: Family) -> Vec<SymTensor> {
    const TERNARY: [i8; 3] = [-1, 0, 1];
    const SIGNS: [i8; 2] = [-1, 1];
    match family {
        Family::L25 | Family::L26 => {
            let values: &[i8] = if family == Family::L25 { &TERNARY } else { &SIGNS };
            product(values, 5)
                .into_iter()
                .map(|v| SignTensor4x2([v[0], v[1], v[2], v[3], v[4]]).to_tensor())
                .collect()
        }
        Family::T32 => {
            // (t1112, t1113, t2223) pick the signs; their partners t1222,
            // t1333, t2333 are the negatives
            let mut out = Vec::with_capacity(64);
            for signs in product(&SIGNS, 3) {
                let near = |i: usize, j: usize| {
                    let (lo, hi) = (i.min(j), i.max(j));
                    let slot = match (lo, hi) {
                        (1, 2) => 0,
                        (1, 3) => 1,
                        _ => 2,
                    };
                    if i == lo {
                        signs[slot]
                    } else {
                        -signs[slot]
                    }
                };
                for mixed in product(&SIGNS, 3) {
                    out.push(ternary(near, &[1, 1, 1], &mixed));
                }
            }
            out
        }
        Family::T33 => product(&TERNARY, 3)
            .into_iter()
            .map(|m| ternary(|_, _| 1, &[-1, -1, -1], &m))
            .collect(),
        Family::T36 => product(&TERNARY, 3)
            .into_iter()
            .map(|p| ternary(|_, _| 1, &p, &[-1, -1, -1]))
            .collect(),
        Family::C34 => product(&TERNARY, 6)
            .into_iter()
            .map(|v| ternary(|_, _| 1, &v[..3], &v[3..]))
            .collect(),
    }
}

/// The family classifier's verdict; `None` when it draws no conclusion.
pub fn classify_member(family: Family, t: &SymTensor) -> Result<Option<Verdict>> {
    match family {
        Family::L25 => Ok(classify_sign_2d(SignTensor4x2::try_from(t)?)?.verdict),
        Family::L26 => {
            // strictness bit only; the copositivity half is reported as not strict
            let strict = strict_sign_2d_allones(SignTensor4x2::try_from(t)?)?;
            Ok(Some(if strict {
                Verdict::StrictlyCopositive
            } else {
                Verdict::CopositiveNotStrict
            }))
        }
        _ => {
            let s = SignTensor4x3::try_from(t)?;
            let report = match family {
                Family::T32 => thm32_decide(&s)?,
                Family::T33 => thm33_decide(&s)?,
                Family::T36 => thm36_decide(&s)?,
                _ => cor34_sufficient(&s),
            };
            if !report.applicable {
                return Err(Error::Precondition(format!("{family} member fails its gate: {t:?}")));
            }
            Ok(report.verdict)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// Conflict with a decisive oracle verdict.
    Mismatch,
    /// Conflict, but the oracle verdict is heuristic.
    Indecisive,
}

#[derive(Debug, Clone)]
pub struct MemberResult {
    pub tensor: SymTensor,
    pub classifier: Option<Verdict>,
    pub oracle: OracleVerdict,
    pub agreement: Agreement,
}

#[derive(Debug, Clone)]
pub struct MismatchRecord {
    pub tensor: SymTensor,
    pub classifier: Option<Verdict>,
    pub oracle: OracleVerdict,
}

fn agrees(check: Check, classifier: Option<Verdict>, oracle: Verdict) -> bool {
    match (check, classifier) {
        (Check::Full, Some(c)) => c == oracle,
        (Check::Full, None) => false,
        (Check::StrictOnly, Some(c)) => c.is_strict() == oracle.is_strict(),
        (Check::StrictOnly, None) => false,
        (Check::SufficientOnly, Some(c)) => !c.is_strict() || oracle.is_strict(),
        (Check::SufficientOnly, None) => true,
    }
}

/// Classifier and oracle verdicts for every member, in enumeration order.
pub fn evaluate_family(family: Family, cfg: &OracleConfig) -> Result<Vec<MemberResult>> {
    enumerate_family(family)
        .into_par_iter()
        .map(|tensor| {
            let classifier = classify_member(family, &tensor)?;
            let oracle = oracle_verdict(&tensor, cfg)?;
            let agreement = if agrees(family.check(), classifier, oracle.verdict) {
                Agreement::Agree
            } else if oracle.decisive {
                Agreement::Mismatch
            } else {
                Agreement::Indecisive
            };
            Ok(MemberResult {
                tensor,
                classifier,
                oracle,
                agreement,
            })
        })
        .collect()
}

/// Members where the classifier contradicts a decisive oracle verdict.
pub fn cross_validate(family: Family, cfg: &OracleConfig) -> Result<Vec<MismatchRecord>> {
    Ok(evaluate_family(family, cfg)?
        .into_iter()
        .filter(|m| m.agreement == Agreement::Mismatch)
        .map(|m| MismatchRecord {
            tensor: m.tensor,
            classifier: m.classifier,
            oracle: m.oracle,
        })
        .collect())
}

/// Compact label for a member: the slot values in canonical order.
pub fn member_label(t: &SymTensor) -> String {
    canonical_indices(t.order(), t.dim())
        .iter()
        .map(|idx| match t.get(idx.labels()).as_small_int() {
            Some(-1) => '-',
            Some(0) => '0',
            Some(1) => '+',
            _ => '?',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_uniqueness() {
        for f in Family::ALL {
            let members = enumerate_family(f);
            assert_eq!(members.len(), f.expected_count(), "{f}");
            let labels: std::collections::BTreeSet<_> = members.iter().map(member_label).collect();
            assert_eq!(labels.len(), members.len(), "{f} has duplicates");
        }
    }

    #[test]
    fn every_member_passes_its_gate() {
        for f in Family::ALL {
            for t in enumerate_family(f) {
                classify_member(f, &t).unwrap();
            }
        }
    }

    #[test]
    fn family_names() {
        assert_eq!("t33".parse::<Family>().unwrap(), Family::T33);
        assert!(matches!("T99".parse::<Family>(), Err(Error::UnknownFamily(_))));
    }
}
