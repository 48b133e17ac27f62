//! Run configuration: defaults, a TOML config file, and an environment
//! override for the output directory.
//!
//! A fixed configuration and seed make verification runs bit-identical;
//! report wall times are therefore zeroed unless timing is explicitly
//! requested.

use crate::tpcheck::Budget;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Environment variable that overrides the configured output directory.
pub const OUTPUT_DIR_ENV: &str = "SYLVA_OUTPUT_DIR";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse config file: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("configuration limit '{0}' must be positive")]
    InvalidLimit(&'static str),
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    /// Default truncation size for family matrices (rows `0..truncation`).
    pub truncation: usize,
    /// Default cap on minor order in total-positivity sweeps.
    pub order_cap: usize,
    /// Largest Hankel window a conjecture run may request.
    pub max_hankel: usize,
    /// Most variables a conjecture run may shift.
    pub max_vars: usize,
    /// Directory reports are written to.
    pub output_dir: PathBuf,
    /// Worker threads for parallel sweeps; 0 means one per core.
    pub parallelism: usize,
    /// Seed for randomized property checks.
    pub seed: u64,
    /// When true, reports carry real wall times; when false (the default)
    /// they carry 0 so identical runs are byte-identical.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            truncation: 8,
            order_cap: 4,
            max_hankel: 7,
            max_vars: 8,
            output_dir: PathBuf::from("reports"),
            parallelism: 0,
            seed: 17,
            timing: false,
        }
    }
}

impl RunConfig {
    /// Loads from a TOML file, falling back to defaults when `path` is
    /// `None`, then applies the environment override and validates.
    pub fn load(path: Option<&Path>) -> Result<RunConfig, ConfigError> {
        let mut config = match path {
            Some(p) => toml::from_str(&std::fs::read_to_string(p)?)?,
            None => RunConfig::default(),
        };
        if let Ok(dir) = std::env::var(OUTPUT_DIR_ENV) {
            config.output_dir = PathBuf::from(dir);
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.truncation == 0 {
            return Err(ConfigError::InvalidLimit("truncation"));
        }
        if self.order_cap == 0 {
            return Err(ConfigError::InvalidLimit("order-cap"));
        }
        if self.max_hankel == 0 {
            return Err(ConfigError::InvalidLimit("max-hankel"));
        }
        if self.max_vars == 0 {
            return Err(ConfigError::InvalidLimit("max-vars"));
        }
        Ok(())
    }

    /// The conjecture-suite budget implied by this configuration.
    pub fn budget(&self) -> Budget {
        Budget {
            max_hankel: self.max_hankel,
            max_order: self.max_hankel,
            max_truncation: (2 * self.max_hankel - 1).max(self.truncation),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(RunConfig::default().validate().is_ok());
    }

    #[test]
    fn toml_round_trip_and_partial_files() {
        let parsed: RunConfig =
            toml::from_str("truncation = 10\nseed = 5\noutput-dir = \"out\"").unwrap();
        assert_eq!(parsed.truncation, 10);
        assert_eq!(parsed.seed, 5);
        assert_eq!(parsed.output_dir, PathBuf::from("out"));
        assert_eq!(parsed.order_cap, RunConfig::default().order_cap);
        let rendered = toml::to_string(&parsed).unwrap();
        let back: RunConfig = toml::from_str(&rendered).unwrap();
        assert_eq!(back.truncation, 10);
    }

    #[test]
    fn unknown_keys_and_zero_limits_are_rejected() {
        assert!(toml::from_str::<RunConfig>("no-such-key = 1").is_err());
        let zero: RunConfig = toml::from_str("max-hankel = 0").unwrap();
        assert!(matches!(
            zero.validate(),
            Err(ConfigError::InvalidLimit("max-hankel"))
        ));
    }

    #[test]
    fn budget_tracks_the_configured_window()  {
        let config = RunConfig { max_hankel: 5, ..RunConfig::default() };
        let budget = config.budget();
        assert_eq!(budget.max_hankel, 5);
        assert_eq!(budget.max_order, 5);
        assert!(budget.max_truncation >= 9);
    }
}
