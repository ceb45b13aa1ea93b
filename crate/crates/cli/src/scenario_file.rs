//! JSON scenario files.
//!
//! ```json
//! {
//!   "seed": 42,
//!   "doi": 0.006,
//!   "weibull": { "a": 1.5, "b": 1 },
//!   "pathloss": { "frequency_hz": 2.4e9, "alpha": 2, "system_loss_db": 0 },
//!   "nodes": [
//!     { "id": 1, "x": 0, "y": 0, "tx_power_dbm": 0, "tx_gain_db": 0,
//!       "rx_gain_db": 0, "rx_sensitivity_dbm": -85 }
//!   ]
//! }
//! ```
//!
//! Unknown keys are rejected. `doi`, `weibull` (and each of `a`, `b`),
//! `alpha`, `system_loss_db` and the two gains are optional.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

use rim_core::irregularity::DEFAULT_DOI;
use rim_core::{Node, PathLossParams, Position, RadioParams, Scenario, Weibull};

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub seed: u64,
    #[serde(default = "default_doi")]
    pub doi: f64,
    #[serde(default)]
    pub weibull: WeibullSection,
    pub pathloss: PathLossSection,
    pub nodes: Vec<NodeEntry>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeibullSection {
    #[serde(default = "default_a")]
    pub a: f64,
    #[serde(default = "default_b")]
    pub b: f64,
}

impl Default for WeibullSection {
    fn default() -> Self {
        WeibullSection {
            a: default_a(),
            b: default_b(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathLossSection {
    pub frequency_hz: f64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default)]
    pub system_loss_db: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeEntry {
    pub id: u64,
    pub x: f64,
    pub y: f64,
    pub tx_power_dbm: f64,
    #[serde(default)]
    pub tx_gain_db: f64,
    #[serde(default)]
    pub rx_gain_db: f64,
    pub rx_sensitivity_dbm: f64,
}

fn default_doi() -> f64 {
    DEFAULT_DOI
}
fn default_a() -> f64 {
    Weibull::DEFAULT_SCALE
}
fn default_b() -> f64 {
    Weibull::DEFAULT_SHAPE
}
fn default_alpha() -> f64 {
    PathLossParams::DEFAULT_ALPHA
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("invalid scenario {}", path.display()))
    }

    pub fn to_scenario(&self) -> Result<Scenario> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let node = Node {
                    id: n.id,
                    position: Position::new(n.x, n.y)?,
                    radio: RadioParams::new(
                        n.tx_power_dbm,
                        n.tx_gain_db,
                        n.rx_gain_db,
                        n.rx_sensitivity_dbm,
                    )?,
                };
                Ok(node)
            })
            .collect::<rim_core::Result<Vec<_>>>()
            .context("invalid node")?;
        let scenario = Scenario {
            nodes,
            pathloss: PathLossParams::new(
                self.pathloss.frequency_hz,
                self.pathloss.alpha,
                self.pathloss.system_loss_db,
            )
            .context("invalid pathloss")?,
            doi: self.doi,
            weibull: Weibull::new(self.weibull.a, self.weibull.b).context("invalid weibull")?,
            master_seed: self.seed,
        };
        scenario.validate()?;
        Ok(scenario)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "seed": 3,
        "pathloss": { "frequency_hz": 2.4e9 },
        "nodes": [
            { "id": 1, "x": 0, "y": 0, "tx_power_dbm": 0, "rx_sensitivity_dbm": -85 },
            { "id": 2, "x": 50, "y": 0, "tx_power_dbm": 0, "rx_sensitivity_dbm": -85 }
        ]
    }"#;

    #[test]
    fn defaults_fill_in() {
        let f = ScenarioFile::parse(MINIMAL).unwrap();
        assert_eq!(f.doi, 0.006);
        assert_eq!(f.weibull, WeibullSection { a: 1.5, b: 1.0 });
        assert_eq!(f.pathloss.alpha, 2.0);
        assert_eq!(f.pathloss.system_loss_db, 0.0);
        assert_eq!(f.nodes[0].tx_gain_db, 0.0);
        let s = f.to_scenario().unwrap();
        assert_eq!(s.master_seed, 3);
        assert_eq!(s.nodes.len(), 2);
    }

    #[test]
    fn unknown_key_is_named() {
        let text = MINIMAL.replace("\"seed\": 3,", "\"seed\": 3, \"dio\": 0.1,");
        let err = format!("{:#}", ScenarioFile::parse(&text).unwrap_err());
        assert!(err.contains("unknown field `dio`"), "{err}");

        let text = MINIMAL.replace("\"x\": 50", "\"x\": 50, \"z\": 1");
        let err = format!("{:#}", ScenarioFile::parse(&text).unwrap_err());
        assert!(err.contains("unknown field `z`"), "{err}");
    }

    #[test]
    fn missing_required_key_is_named() {
        let text = MINIMAL.replace("\"seed\": 3,", "");
        let err = format!("{:#}", ScenarioFile::parse(&text).unwrap_err());
        assert!(err.contains("missing field `seed`"), "{err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = format!(
            "{:#}",
            ScenarioFile::parse("{\n  \"seed\": 1,,\n}").unwrap_err()
        );
        assert!(err.contains("line 2 column"), "{err}");
    }

    #[test]
    fn semantic_errors() {
        let text = MINIMAL.replace("\"x\": 50", "\"x\": 0");
        assert!(ScenarioFile::parse(&text).unwrap().to_scenario().is_err());
        let text = MINIMAL.replace("2.4e9", "-1");
        assert!(ScenarioFile::parse(&text).unwrap().to_scenario().is_err());
    }
}
