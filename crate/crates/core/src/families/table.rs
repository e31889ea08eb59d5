//! Computed tables and their wire form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::families::{CurveSpec, Family};
use crate::mpoly::MPoly;
use crate::Rat;

/// A single table entry: rational for the numeric families, polynomial
/// for the universal one.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rational(Rat),
    Polynomial(MPoly),
}

impl Value {
    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Value::Rational(r) => Some(r),
            Value::Polynomial(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => r.fmt(f),
            Value::Polynomial(p) => p.fmt(f),
        }
    }
}

/// An in-memory table of family values, tagged with everything needed to
/// reproduce it.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberTable {
    pub family: Family,
    pub curve: Option<CurveSpec>,
    pub normalization: String,
    pub route: String,
    pub engine_version: String,
    pub values: BTreeMap<u64, Value>,
}

impl NumberTable {
    pub fn to_exported(&self) -> ExportedTable {
        ExportedTable {
            family: self.family.name().to_string(),
            curve: self.curve.map(|c| c.pair()),
            normalization: self.normalization.clone(),
            route: self.route.clone(),
            engine_version: self.engine_version.clone(),
            values: self
                .values
                .iter()
                .map(|(n, v)| (*n, v.to_string()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_exported().to_json()
    }
}

/// The exact JSON shape of an exported table.  Field order is part of the
/// format: exports must be byte-identical across runs, and cached tables
/// are sliced and re-serialized through this type.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExportedTable {
    pub family: String,
    pub curve: Option<(u32, u32)>,
    pub normalization: String,
    pub route: String,
    pub engine_version: String,
    pub values: BTreeMap<u64, String>,
}

impl ExportedTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn max_index(&self) -> Option<u64> {
        self.values.keys().next_back().copied()
    }

    /// The prefix with indices <= max_n, used for cache reuse.
    pub fn truncated(&self, max_n: u64) -> ExportedTable {
        let mut out = self.clone();
        out.values.retain(|n, _| *n <= max_n);
        out
    }

    /// CSV with a header row; values contain no commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in &self.values {
            out.push_str(&format!("{},{}\n", n, v));
        }
        out
    }

    /// One "n: value" line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, v) in &self.values {
            out.push_str(&format!("{}: {}\n", n, v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> NumberTable {
        let mut values = BTreeMap::new();
        values.insert(4, Value::Rational(Rat::new(1, 10)));
        values.insert(8, Value::Rational(Rat::new(3, 10)));
        NumberTable {
            family: Family::Hurwitz,
            curve: None,
            normalization: "classical".into(),
            route: "weierstrass-tail".into(),
            engine_version: "0.1.0".into(),
            values,
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let json = sample().to_json();
        assert_eq!(
            json,
            "{\"family\":\"hurwitz\",\"curve\":null,\"normalization\":\"classical\",\
             \"route\":\"weierstrass-tail\",\"engine_version\":\"0.1.0\",\
             \"values\":{\"4\":\"1/10\",\"8\":\"3/10\"}}"
        );
        let parsed = ExportedTable::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn curve_serializes_as_a_pair() {
        let mut t = sample();
        t.family = Family::Gbh;
        t.curve = Some(CurveSpec::lemniscatic());
        assert!(t.to_json().contains("\"curve\":[2,4]"));
    }

    #[test]
    fn truncation_and_derived_formats() {
        let exported = sample().to_exported();
        assert_eq!(exported.max_index(), Some(8));
        let cut = exported.truncated(4);
        assert_eq!(cut.values.len(), 1);
        assert_eq!(exported.to_csv(), "n,value\n4,1/10\n8,3/10\n");
        assert_eq!(exported.to_text(), "4: 1/10\n8: 3/10\n");
    }
}
