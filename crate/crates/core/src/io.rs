//! JSON tensor documents.
//!
//! ```text
//! {"order":4,"dim":2,"entries":{"1111":1,"1122":"-1/2","2222":0.5}}
//! ```
//!
//! Keys are canonical index strings. Integers and `"p/q"` strings are exact,
//! decimals are float; one float entry makes the whole tensor float.

use std::fmt;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{MultiIndex, SymTensor};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    order: usize,
    dim: usize,
    entries: RawEntries,
}

/// Keeps duplicate keys so they can be reported.
struct RawEntries(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for RawEntries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawEntries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of index keys to numbers")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<RawEntries, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Value>()? {
                    out.push((k, v));
                }
                Ok(RawEntries(out))
            }
        }
        d.deserialize_map(V)
    }
}

pub fn parse_tensor(text: &str) -> Result<SymTensor> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    if doc.order == 0 || doc.dim == 0 {
        return Err(Error::parse("order/dim", "order and dim must be positive"));
    }
    if doc.dim > 9 {
        return Err(Error::parse("dim", "index keys use single digits, so dim must be at most 9"));
    }
    let mut entries = Vec::with_capacity(doc.entries.0.len());
    let mut seen = std::collections::BTreeSet::new();
    for (key, value) in doc.entries.0 {
        let loc = format!("entries.\"{key}\"");
        let labels: Vec<usize> = key
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::parse(&loc, "key must be a string of digits"))?;
        if labels.len() != doc.order {
            return Err(Error::parse(&loc, format!("key has {} labels, order is {}", labels.len(), doc.order)));
        }
        if let Some(&l) = labels.iter().find(|&&l| l == 0 || l > doc.dim) {
            return Err(Error::parse(&loc, format!("label {l} out of range 1..={}", doc.dim)));
        }
        let idx = MultiIndex::from_canonical(labels)
            .ok_or_else(|| Error::parse(&loc, "key is not canonical (labels must be non-decreasing)"))?;
        if !seen.insert(idx.clone()) {
            return Err(Error::parse(&loc, "duplicate key"));
        }
        let scalar = scalar_from_json(&value).map_err(|m| Error::parse(&loc, m))?;
        entries.push((idx.labels().to_vec(), scalar));
    }
    SymTensor::from_entries(doc.order, doc.dim, entries)
}

fn scalar_from_json(v: &Value) -> std::result::Result<Scalar, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(i))
            } else if n.is_u64() {
                n.to_string().parse().map_err(|e: Error| e.to_string())
            } else {
                n.as_f64()
                    .filter(|f| f.is_finite())
                    .map(Scalar::Float)
                    .ok_or_else(|| "number out of range".to_string())
            }
        }
        Value::String(s) => match s.parse::<Scalar>() {
            Ok(Scalar::Exact(r)) => Ok(Scalar::Exact(r)),
            Ok(Scalar::Float(_)) => Err("string values must be integers or fractions p/q".into()),
            Err(_) => Err(format!("`{s}` is not a fraction p/q")),
        },
        _ => Err("value must be a number or a fraction string".into()),
    }
}

fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(r) if r.is_integer() => match i64::try_from(r.numer()) {
            Ok(i) => Value::Number(i.into()),
            Err(_) => Value::String(s.to_string()),
        },
        Scalar::Exact(_) => Value::String(s.to_string()),
        Scalar::Float(f) => Number::from_f64(*f).map(Value::Number).unwrap_or(Value::Null),
    }
}

/// Compact JSON with entries in canonical order.
pub fn serialize_tensor(t: &SymTensor) -> String {
    let mut entries = Map::new();
    for (idx, v) in t.entries() {
        entries.insert(idx.key(), scalar_to_json(v));
    }
    let mut doc = Map::new();
    doc.insert("order".into(), t.order().into());
    doc.insert("dim".into(), t.dim().into());
    doc.insert("entries".into(), Value::Object(entries));
    Value::Object(doc).to_string()
}

impl std::str::FromStr for SymTensor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tensor(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, NumericMode};

    #[test]
    fn parses_basic_document() {
        let t = parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":1,"2222":1,"1122":1}}"#).unwrap();
        assert_eq!(t.nonzero_entries().count(), 3);
        assert_eq!(t.mode(), NumericMode::Exact);
        assert_eq!(t.get(&[2, 1, 2, 1]), Scalar::from_int(1));
    }

    #[test]
    fn fractions_and_decimals() {
        let t = parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":"3/6"}}"#).unwrap();
        assert_eq!(t.get(&[1, 1, 1, 1]), Scalar::Exact(rat(1, 2)));
        let f = parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":1,"2222":0.5}}"#).unwrap();
        assert_eq!(f.mode(), NumericMode::Float);
    }

    #[test]
    fn rejects_bad_keys() {
        let err = parse_tensor(r#"{"order":4,"dim":2,"entries":{"2111":1}}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse { location, message } if location.contains("2111") && message.contains("canonical")));
        let dup = parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":1,"1111":2}}"#).unwrap_err();
        assert!(dup.to_string().contains("duplicate"));
        assert!(parse_tensor(r#"{"order":4,"dim":2,"entries":{"1113":1}}"#).is_err());
        assert!(parse_tensor(r#"{"order":4,"dim":2,"entries":{"111":1}}"#).is_err());
        assert!(parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":"x"}}"#).is_err());
        assert!(parse_tensor(r#"{"order":4,"dim":2,"entries":{"1111":true}}"#).is_err());
        assert!(parse_tensor(r#"{"order":4,"dim":2}"#).is_err());
        let syntax = parse_tensor("{\"order\":4,\n\"dim\":").unwrap_err();
        assert!(syntax.to_string().contains("line 2"));
    }

    #[test]
    fn round_trip_canonical_document() {
        for d in [
            r#"{"order":4,"dim":2,"entries":{"1111":1,"1122":1,"2222":1}}"#,
            r#"{"order":4,"dim":3,"entries":{"1111":1,"1123":"-1/2","3333":0}}"#,
            r#"{"order":4,"dim":3,"entries":{"1111":0.25,"2333":-1.0}}"#,
        ] {
            assert_eq!(serialize_tensor(&parse_tensor(d).unwrap()), d);
        }
    }
}
