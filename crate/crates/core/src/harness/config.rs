//! JSON sweep configuration.
//!
//! ```json
//! {
//!   "maxGroupOrder": 600,
//!   "oracle": "both",
//!   "cases": [
//!     {"family": "dihedral", "params": {"m": 3}, "result": "Cor2.6"},
//!     {"family": "dihedral", "params": {"m": [6, 12]}},
//!     {"family": "suzuki", "z": 2, "result": "Thm2.1"}
//!   ]
//! }
//! ```
//!
//! Parameters take a single integer or an inclusive `[lo, hi]` range;
//! ranged cases expand to their cartesian product. An optional `z` factor
//! tensors the group with a cyclic center Z_z.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::catalog::family_spec;
use super::{OracleMode, SweepCase, SweepConfig};
use crate::error::Error;
use crate::formulas::ResultId;
use crate::group::GroupSpec;
use crate::Result;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(rename = "maxGroupOrder")]
    max_group_order: Option<usize>,
    oracle: Option<String>,
    cases: Vec<RawCase>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    family: String,
    #[serde(default)]
    params: BTreeMap<String, ParamValue>,
    z: Option<ParamValue>,
    result: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ParamValue {
    Int(i64),
    Range([i64; 2]),
}

impl ParamValue {
    fn expand(&self) -> Result<Vec<i64>> {
        match self {
            ParamValue::Int(v) => Ok(vec![*v]),
            ParamValue::Range([lo, hi]) => {
                if lo > hi {
                    return Err(Error::Config(format!("empty range [{lo}, {hi}]")));
                }
                Ok((*lo..=*hi).collect())
            }
        }
    }
}

/// Parse a JSON sweep config.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let raw: RawConfig =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad config: {e}")))?;
    let oracle = match raw.oracle.as_deref() {
        Some(s) => OracleMode::parse(s)?,
        None => OracleMode::Both,
    };
    let mut cases = Vec::new();
    for raw_case in &raw.cases {
        let result = raw_case
            .result
            .as_deref()
            .map(str::parse::<ResultId>)
            .transpose()?;
        for assignment in expand_params(&raw_case.params)? {
            let spec = family_spec(&raw_case.family, &assignment)?;
            if let Some(zv) = &raw_case.z {
                for z in zv.expand()? {
                    if z < 2 {
                        return Err(Error::Config(format!(
                            "central factor z = {z} must be >= 2"
                        )));
                    }
                    let wrapped = GroupSpec::DirectProduct(
                        Box::new(spec.clone()),
                        Box::new(GroupSpec::Cyclic { k: z as u32 }),
                    );
                    cases.push(SweepCase {
                        group: wrapped,
                        result,
                    });
                }
            } else {
                cases.push(SweepCase {
                    group: spec,
                    result,
                });
            }
        }
    }
    let cfg = SweepConfig {
        max_group_order: raw.max_group_order.unwrap_or(600),
        oracle,
        cases,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn expand_params(
    params: &BTreeMap<String, ParamValue>,
) -> Result<Vec<BTreeMap<String, i64>>> {
    let mut assignments: Vec<BTreeMap<String, i64>> = vec![BTreeMap::new()];
    for (key, value) in params {
        let values = value.expand()?;
        let mut grown = Vec::with_capacity(assignments.len() * values.len());
        for base in &assignments {
            for v in &values {
                let mut next = base.clone();
                next.insert(key.clone(), *v);
                grown.push(next);
            }
        }
        assignments = grown;
    }
    Ok(assignments)
}

/// Parse an expected-errata file: one case id per line, `#` comments allowed.
pub fn parse_expected_errata(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_string())
        .collect()
}
