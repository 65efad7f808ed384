use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensor::SymTensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NotCopositive,
    CopositiveNotStrict,
    StrictlyCopositive,
}

impl Verdict {
    pub fn is_copositive(self) -> bool {
        self != Verdict::NotCopositive
    }

    pub fn is_strict(self) -> bool {
        self == Verdict::StrictlyCopositive
    }

    pub fn from_bits(copositive: bool, strict: bool) -> Self {
        match (copositive, strict) {
            (_, true) => Verdict::StrictlyCopositive,
            (true, false) => Verdict::CopositiveNotStrict,
            (false, false) => Verdict::NotCopositive,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotCopositive => "not_copositive",
            Verdict::CopositiveNotStrict => "copositive_not_strict",
            Verdict::StrictlyCopositive => "strictly_copositive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Negative,
    Zero,
    Positive,
}

/// A nonnegative nonzero point with the form's value there.
///
/// `approximate` marks a rational approximation of an irrational zero; the
/// stored value is then the (tiny) exact value at the approximation and
/// `kind` is `Zero` regardless of its sign.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub x: Vec<Scalar>,
    pub value: Scalar,
    pub kind: WitnessKind,
    pub approximate: bool,
}

impl Witness {
    /// Evaluates `t` at `x` and classifies by the sign of the value.
    pub fn at(t: &SymTensor, x: Vec<Scalar>) -> Result<Self> {
        let value = t.evaluate(&x)?;
        let kind = match value.signum() {
            s if s < 0 => WitnessKind::Negative,
            0 => WitnessKind::Zero,
            _ => WitnessKind::Positive,
        };
        Ok(Witness {
            x,
            value,
            kind,
            approximate: false,
        })
    }

    pub fn at_ints(t: &SymTensor, x: &[i64]) -> Result<Self> {
        Witness::at(t, x.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn approximate_zero(t: &SymTensor, x: Vec<Scalar>) -> Result<Self> {
        let value = t.evaluate(&x)?;
        Ok(Witness {
            x,
            value,
            kind: WitnessKind::Zero,
            approximate: true,
        })
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Witness", 4)?;
        st.serialize_field("x", &self.x.iter().map(Scalar::to_string).collect::<Vec<_>>())?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("approximate", &self.approximate)?;
        st.end()
    }
}
