use std::path::PathBuf;

use bargmann::verify::{RunConfig, Suite};
use clap::Args;

/// Run configuration flags. Values given on the command line override the
/// `--config` file, which overrides the defaults.
#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// JSON file mirroring the run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub truncation: Option<usize>,
    #[arg(long)]
    pub quad_nodes: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma separated suite names, or `all`.
    #[arg(long, value_delimiter = ',')]
    pub suites: Option<Vec<Suite>>,
    /// Run on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

impl ConfigArgs {
    pub fn resolve(&self) -> bargmann::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => serde_json::from_str(&std::fs::read_to_string(p)?)?,
            None => RunConfig::default(),
        };
        if let Some(v) = self.nu {
            cfg.nu = v;
        }
        if let Some(v) = self.truncation {
            cfg.truncation = v;
        }
        if let Some(v) = self.quad_nodes {
            cfg.quad_nodes = v;
        }
        if let Some(v) = self.tolerance {
            cfg.tolerance = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = &self.suites {
            cfg.suites = v.clone();
        }
        if self.sequential {
            cfg.parallel = false;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}
