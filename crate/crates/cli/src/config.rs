use std::path::Path;

use polylog_core::literal::{parse_mobius, parse_point};
use polylog_core::numeric::Acceleration;
use polylog_core::{MobiusMap, PrecisionContext, SigmaConfig};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const PRECISION_ENV: &str = "POLYLOG_PRECISION_BITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum AccelerationName {
    None,
    EulerTransform,
}

impl From<AccelerationName> for Acceleration {
    fn from(a: AccelerationName) -> Self {
        match a {
            AccelerationName::None => Acceleration::None,
            AccelerationName::EulerTransform => Acceleration::EulerTransform,
        }
    }
}

/// Everything a run needs. Read from JSON; every field is optional there.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub sigma: Vec<String>,
    pub a: String,
    pub b: String,
    pub precision_bits: u32,
    #[serde(rename = "truncation_M")]
    pub truncation_m: u64,
    pub target_tol: f64,
    pub acceleration: AccelerationName,
    pub max_weight: usize,
    /// `[p, q, r, s]` for `z ↦ (pz + q)/(rz + s)`.
    pub sigma_map: Option<[String; 4]>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            sigma: vec!["0".into(), "1".into()],
            a: "1".into(),
            b: "0".into(),
            precision_bits: 128,
            truncation_m: 1_000_000,
            target_tol: 1e-10,
            acceleration: AccelerationName::EulerTransform,
            max_weight: 3,
            sigma_map: None,
        }
    }
}

impl RunConfig {
    /// Defaults, then the precision environment variable, then `file`.
    pub fn load(file: Option<&Path>, env_bits: Option<&str>) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(bits) = env_bits {
            cfg.precision_bits = bits
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{PRECISION_ENV}={bits:?} is not a bit count")))?;
        }
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let from_file: FileConfig = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            from_file.apply(&mut cfg);
        }
        Ok(cfg)
    }

    pub fn sigma_config(&self) -> Result<SigmaConfig, CliError> {
        let points = self
            .sigma
            .iter()
            .map(|s| parse_point(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SigmaConfig::new(points, parse_point(&self.a)?, parse_point(&self.b)?)?)
    }

    pub fn context(&self) -> Result<PrecisionContext, CliError> {
        Ok(PrecisionContext::new(
            self.precision_bits,
            self.truncation_m,
            self.target_tol,
            self.acceleration.into(),
        )?)
    }

    pub fn mobius(&self) -> Result<Option<MobiusMap>, CliError> {
        match &self.sigma_map {
            None => Ok(None),
            Some(entries) => Ok(Some(parse_mobius(&entries.join(","))?)),
        }
    }
}

/// The JSON document: like [`RunConfig`] but only overriding what it names.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    sigma: Option<Vec<String>>,
    a: Option<String>,
    b: Option<String>,
    precision_bits: Option<u32>,
    #[serde(rename = "truncation_M")]
    truncation_m: Option<u64>,
    target_tol: Option<f64>,
    acceleration: Option<AccelerationName>,
    max_weight: Option<usize>,
    sigma_map: Option<[String; 4]>,
}

impl FileConfig {
    fn apply(self, cfg: &mut RunConfig) {
        macro_rules! take {
            ($($f:ident),*) => {$(
                if let Some(v) = self.$f {
                    cfg.$f = v;
                }
            )*};
        }
        take!(sigma, a, b, precision_bits, truncation_m, target_tol, acceleration, max_weight);
        if self.sigma_map.is_some() {
            cfg.sigma_map = self.sigma_map;
        }
    }
}

/// Parses a JSON configuration document without touching the filesystem.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let from_file: FileConfig = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    let mut cfg = RunConfig::default();
    from_file.apply(&mut cfg);
    cfg.sigma_config()?;
    cfg.context()?;
    cfg.mobius()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_the_mzv_configuration() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.sigma_config().unwrap(), SigmaConfig::mzv());
        assert_eq!(cfg.context().unwrap(), PrecisionContext::default());
    }

    #[test]
    fn file_values_override_defaults() {
        let cfg = parse_config(r#"{"sigma": ["0", "1", "-1"], "truncation_M": 5000, "sigma_map": ["-1", "1", "0", "1"]}"#)
            .unwrap();
        assert_eq!(cfg.sigma.len(), 3);
        assert_eq!(cfg.truncation_m, 5000);
        assert_eq!(cfg.precision_bits, 128);
        assert_eq!(cfg.mobius().unwrap(), Some(MobiusMap::reflection_one()));
    }

    #[test]
    fn duplicate_points_are_rejected() {
        assert!(parse_config(r#"{"sigma": ["0", "1", "1"]}"#).is_err());
        assert!(parse_config(r#"{"sigma": ["0", "1", "2/2"]}"#).is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(parse_config(r#"{"precision": 64}"#).is_err());
    }

    #[test]
    fn environment_sets_the_default_precision() {
        let cfg = RunConfig::load(None, Some("256")).unwrap();
        assert_eq!(cfg.precision_bits, 256);
        assert!(RunConfig::load(None, Some("lots")).is_err());
    }
}
