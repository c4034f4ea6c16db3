//! JSON input formats.
//!
//! Fan file:
//! ```json
//! { "dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]], "divisor": [1,0,0] }
//! ```
//! Model file:
//! ```json
//! { "root_type": "A1", "levi_set": [], "fan": { "dim": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]] },
//!   "divisor": { "colors": { "1": -3 }, "boundary": [-2, 0] } }
//! ```
//! Integers are parsed exactly; floating-point literals are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fan_toric::{Fan, ToricDivisor};
use crate::horospherical::HoroDivisor;
use crate::root_system::{parse_type_label, CartanType, ParabolicSpec, RootDatum, RootSystemError};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    RootSystem(#[from] RootSystemError),
    #[error("fan file has no `divisor`")]
    MissingDivisor,
    #[error("divisor has {got} coefficients, fan has {rays} rays")]
    DivisorLength { got: usize, rays: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<Vec<i64>>,
}

impl FanFile {
    pub fn fan(&self) -> Fan {
        Fan::new(self.dim, self.rays.clone(), self.max_cones.clone())
    }

    pub fn divisor(&self) -> Result<ToricDivisor, SchemaError> {
        let coeffs = self.divisor.clone().ok_or(SchemaError::MissingDivisor)?;
        if coeffs.len() != self.rays.len() {
            return Err(SchemaError::DivisorLength {
                got: coeffs.len(),
                rays: self.rays.len(),
            });
        }
        Ok(ToricDivisor(coeffs))
    }

    pub fn from_fan(fan: &Fan, divisor: Option<&ToricDivisor>) -> Self {
        FanFile {
            dim: fan.dim,
            rays: fan.rays.clone(),
            max_cones: fan.max_cones.clone(),
            divisor: divisor.map(|d| d.0.clone()),
        }
    }
}

/// `"A2"`, `"A1xA1"` or `["A1", "A1"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootType {
    Label(String),
    Factors(Vec<String>),
}

impl RootType {
    pub fn factors(&self) -> Result<Vec<CartanType>, RootSystemError> {
        match self {
            RootType::Label(label) => parse_type_label(label),
            RootType::Factors(labels) => labels.iter().map(|l| l.parse()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorSpec {
    #[serde(default)]
    pub colors: BTreeMap<usize, i64>,
    #[serde(default)]
    pub boundary: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub root_type: RootType,
    /// 1-based simple-root indices.
    #[serde(default)]
    pub levi_set: Vec<usize>,
    /// Fiber fan; absent means a point (`X = G/P`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanFile>,
    #[serde(default = "empty_divisor")]
    pub divisor: DivisorSpec,
}

fn empty_divisor() -> DivisorSpec {
    DivisorSpec {
        colors: BTreeMap::new(),
        boundary: Vec::new(),
    }
}

impl ModelFile {
    pub fn datum(&self) -> Result<RootDatum, SchemaError> {
        Ok(RootDatum::from_factors(self.root_type.factors()?))
    }

    pub fn spec(&self, datum: &RootDatum) -> Result<ParabolicSpec, SchemaError> {
        Ok(ParabolicSpec::new(
            datum.rank(),
            self.levi_set.iter().copied(),
        )?)
    }

    pub fn fan(&self) -> Fan {
        self.fan
            .as_ref()
            .map_or_else(crate::fan_toric::corpus::point, FanFile::fan)
    }

    pub fn divisor(&self) -> HoroDivisor {
        HoroDivisor {
            colors: self.divisor.colors.clone(),
            boundary: self.divisor.boundary.clone(),
        }
    }
}

/// Either kind of input file, told apart by the `root_type` key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputFile {
    Fan(FanFile),
    Model(ModelFile),
}

pub fn parse_input(text: &str) -> Result<InputFile, SchemaError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("root_type").is_some() {
        Ok(InputFile::Model(serde_json::from_value(value)?))
    } else {
        Ok(InputFile::Fan(serde_json::from_value(value)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fan_file() {
        let text = r#"{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"divisor":[2,0]}"#;
        let InputFile::Fan(file) = parse_input(text).unwrap() else {
            panic!()
        };
        assert_eq!(file.divisor().unwrap(), ToricDivisor(vec![2, 0]));
        assert_eq!(file.fan().rays, vec![vec![1], vec![-1]]);
    }

    #[test]
    fn rejects_floats() {
        let text = r#"{"dim":1,"rays":[[1.0],[-1]],"max_cones":[[0],[1]]}"#;
        assert!(matches!(parse_input(text), Err(SchemaError::Json(_))));
        let text = r#"{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]],"divisor":[0.5,0]}"#;
        assert!(matches!(parse_input(text), Err(SchemaError::Json(_))));
    }

    #[test]
    fn parses_model_file() {
        let text = r#"{"root_type":["A1","A1"],"levi_set":[2],
            "fan":{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]},
            "divisor":{"colors":{"1":-3},"boundary":[-2,0]}}"#;
        let InputFile::Model(model) = parse_input(text).unwrap() else {
            panic!()
        };
        let datum = model.datum().unwrap();
        assert_eq!(datum.rank(), 2);
        assert_eq!(
            model
                .spec(&datum)
                .unwrap()
                .color_set()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![1]
        );
        assert_eq!(model.divisor().colors.get(&1), Some(&-3));
    }

    #[test]
    fn model_without_fan_is_a_flag_variety() {
        let text = r#"{"root_type":"A2","levi_set":[2],"divisor":{"colors":{"1":1}}}"#;
        let InputFile::Model(model) = parse_input(text).unwrap() else {
            panic!()
        };
        assert_eq!(model.fan().dim, 0);
    }

    #[test]
    fn unknown_root_type() {
        let text = r#"{"root_type":"Z3","levi_set":[]}"#;
        let InputFile::Model(model) = parse_input(text).unwrap() else {
            panic!()
        };
        assert!(matches!(model.datum(), Err(SchemaError::RootSystem(_))));
    }
}
