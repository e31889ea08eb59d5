//! The four number families and the table builder behind the CLI.

pub mod bernoulli;
pub mod curves;
pub mod gbh;
pub mod hurwitz;
pub mod table;
pub mod universal;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use bernoulli::{bernoulli, bernoulli_table, bernoulli_table_series, bernoulli_table_universal};
pub use curves::CurveSpec;
pub use gbh::{
    c_sequence, cyclotomic_logarithm, gbh, gbh_table, gbh_table_from_universal,
    gbh_table_universal, inverse_series, pe_analogue,
};
pub use hurwitz::{hurwitz, hurwitz_table, hurwitz_table_lemniscatic};
pub use table::{ExportedTable, NumberTable, Value};
pub use universal::{universal_bernoulli, universal_bernoulli_table};

use crate::rational::factorial;
use crate::{Error, Rat, Result, ENGINE_VERSION};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Bernoulli,
    Hurwitz,
    Gbh,
    Universal,
}

impl Family {
    pub fn all() -> [Family; 4] {
        [Family::Bernoulli, Family::Hurwitz, Family::Gbh, Family::Universal]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Hurwitz => "hurwitz",
            Family::Gbh => "gbh",
            Family::Universal => "universal",
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
        Family::all()
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidRequest(format!("unknown family {:?}", s)))
    }
}

/// Recognized normalization tags per family; the first is the default.
pub fn normalization_tags(family: Family) -> &'static [&'static str] {
    match family {
        Family::Bernoulli => &["classical"],
        // "laurent-tail" exposes the raw u^(m-2) coefficient
        // 2^m H_m / (m (m-2)!) instead of H_m itself.
        Family::Hurwitz => &["classical", "laurent-tail"],
        // "pe-laurent" tabulates the unit-part coefficients of 1/x(u)^a;
        // entry n is the coefficient of u^(n-a).
        Family::Gbh => &["canonical", "pe-laurent"],
        Family::Universal => &["canonical"],
    }
}

pub fn default_normalization(family: Family) -> &'static str {
    normalization_tags(family)[0]
}

/// Builds a table for the CLI: validates the request, dispatches to the
/// family's canonical route, applies the requested normalization.
pub fn build_table(
    family: Family,
    curve: Option<CurveSpec>,
    normalization: Option<&str>,
    max_n: u64,
) -> Result<NumberTable> {
    let tag = normalization.unwrap_or_else(|| default_normalization(family));
    if !normalization_tags(family).contains(&tag) {
        return Err(Error::InvalidRequest(format!(
            "family {} has no normalization {:?} (expected one of {:?})",
            family,
            tag,
            normalization_tags(family)
        )));
    }
    if family == Family::Gbh && curve.is_none() {
        return Err(Error::InvalidRequest(
            "family gbh requires --curve a,b".into(),
        ));
    }
    if family != Family::Gbh && curve.is_some() {
        return Err(Error::InvalidRequest(format!(
            "family {} does not take a curve",
            family
        )));
    }

    let mut values = BTreeMap::new();
    let route;
    match family {
        Family::Bernoulli => {
            route = "recurrence";
            for (n, v) in bernoulli_table(max_n).into_iter().enumerate() {
                values.insert(n as u64, Value::Rational(v));
            }
        }
        Family::Hurwitz => {
            route = "weierstrass-tail";
            match tag {
                "classical" => {
                    for (m, v) in hurwitz_table(max_n) {
                        values.insert(m, Value::Rational(v));
                    }
                }
                _ => {
                    for (m, v) in hurwitz_table(max_n) {
                        let scale = Rat::from(2i64).pow(m as i32)
                            / Rat::from(factorial(m - 2) * num_bigint::BigInt::from(m));
                        values.insert(m, Value::Rational(v * scale));
                    }
                }
            }
        }
        Family::Gbh => {
            route = "reversion";
            let curve = curve.unwrap();
            match tag {
                "canonical" => {
                    for (n, v) in gbh_table(&curve, max_n).into_iter().enumerate() {
                        values.insert(n as u64, Value::Rational(v));
                    }
                }
                _ => {
                    let p = pe_analogue(&curve, max_n as usize + 1);
                    for n in 0..=max_n {
                        let v = p.unit_part().coeff(n as usize).unwrap().clone();
                        values.insert(n, Value::Rational(v));
                    }
                }
            }
        }
        Family::Universal => {
            route = "polynomial-reversion";
            for (n, v) in universal_bernoulli_table(max_n).into_iter().enumerate() {
                values.insert(n as u64, Value::Polynomial(v));
            }
        }
    }

    Ok(NumberTable {
        family,
        curve,
        normalization: tag.to_string(),
        route: route.to_string(),
        engine_version: ENGINE_VERSION.to_string(),
        values,
    })
}
