//! Model specifications and point-interaction system files.
//!
//! A system file is JSON such as
//!
//! ```json
//! {"base": {"model": "landau3d", "xi": 1.0},
//!  "points": [[0, 0, 0], [1, 0, 0]],
//!  "alphas": [-0.2, -0.2]}
//! ```

use std::collections::BTreeMap;

use greenkern_core::krein::KreinSystem;
use greenkern_core::models::{GreenModel, Point};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A model tag with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

impl ModelSpec {
    /// Builds the model. Unknown tags and missing or superfluous parameters
    /// are usage errors; inadmissible parameter values are domain errors.
    pub fn build(&self) -> Result<GreenModel, CliError> {
        let need = |name: &str, v: Option<f64>| {
            v.ok_or_else(|| CliError::Usage(format!("model {} needs --{name}", self.model)))
        };
        let model = match self.model.as_str() {
            "free1d" => GreenModel::free(1),
            "free2d" => GreenModel::free(2),
            "free3d" => GreenModel::free(3),
            "free4d" => GreenModel::free(4),
            "coulomb3d" => GreenModel::coulomb(need("q", self.q)?),
            "landau3d" => GreenModel::landau(need("xi", self.xi)?),
            "invosc1d" => GreenModel::invosc(need("omega", self.omega)?),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown model {other:?} (expected free1d..free4d, coulomb3d, landau3d or invosc1d)"
                )))
            }
        };
        let extra = [("q", self.q, "coulomb3d"), ("xi", self.xi, "landau3d"), ("omega", self.omega, "invosc1d")]
            .into_iter()
            .find(|(_, v, owner)| v.is_some() && *owner != self.model);
        if let Some((name, _, _)) = extra {
            return Err(CliError::Usage(format!("--{name} does not apply to model {}", self.model)));
        }
        Ok(model?)
    }

    /// Parameters as they appear in output records.
    pub fn params(&self) -> BTreeMap<String, f64> {
        [("q", self.q), ("xi", self.xi), ("omega", self.omega)]
            .into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub base: ModelSpec,
    pub points: Vec<Vec<f64>>,
    pub alphas: Vec<f64>,
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid system file: {e}")))
    }

    pub fn build(&self) -> Result<KreinSystem, CliError> {
        let base = self.base.build()?;
        let points = self.points.iter().map(|p| Point::new(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(KreinSystem::new(base, points, self.alphas.clone())?)
    }
}
