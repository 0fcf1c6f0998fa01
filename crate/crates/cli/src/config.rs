//! Optional TOML configuration; every key may also be given as a flag, and
//! flags win.

use serde::{Deserialize, Serialize};

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub rank: Option<usize>,
    #[serde(rename = "char")]
    pub characteristic: Option<u64>,
    pub weight: Option<String>,
    pub sub: Option<String>,
    pub exp: Option<u32>,
    pub strategy: Option<String>,
    pub cap_monomials: Option<usize>,
    pub cap_tensor_rank: Option<usize>,
    pub threads: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
#[error("invalid config: {0}")]
pub struct ConfigError(String);

impl FileConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        let cfg: FileConfig = toml::from_str(text).map_err(|e| ConfigError(e.message().to_string()))?;
        if cfg.threads == Some(0) {
            return Err(ConfigError("threads must be positive".into()));
        }
        Ok(cfg)
    }

    /// `self` with every field present in `over` replaced.
    pub fn overridden_by(self, over: FileConfig) -> FileConfig {
        FileConfig {
            rank: over.rank.or(self.rank),
            characteristic: over.characteristic.or(self.characteristic),
            weight: over.weight.or(self.weight),
            sub: over.sub.or(self.sub),
            exp: over.exp.or(self.exp),
            strategy: over.strategy.or(self.strategy),
            cap_monomials: over.cap_monomials.or(self.cap_monomials),
            cap_tensor_rank: over.cap_tensor_rank.or(self.cap_tensor_rank),
            threads: over.threads.or(self.threads),
        }
    }
}
