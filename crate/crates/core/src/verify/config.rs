use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exec::Parallelism;
use crate::numerics::quadrature::MAX_NODES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Factorization,
    Isometry,
    Image,
    LeftInverse,
    Quaternionic,
    Bridge,
    Kernels,
    Fourier,
    AppendixConstant,
    Reproducing,
    /// Expands to every other suite.
    All,
}

impl Suite {
    pub const EVERY: [Suite; 10] = [
        Suite::Isometry,
        Suite::Factorization,
        Suite::Image,
        Suite::LeftInverse,
        Suite::Quaternionic,
        Suite::Bridge,
        Suite::Kernels,
        Suite::Fourier,
        Suite::AppendixConstant,
        Suite::Reproducing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Factorization => "factorization",
            Suite::Isometry => "isometry",
            Suite::Image => "image",
            Suite::LeftInverse => "left-inverse",
            Suite::Quaternionic => "quaternionic",
            Suite::Bridge => "bridge",
            Suite::Kernels => "kernels",
            Suite::Fourier => "fourier",
            Suite::AppendixConstant => "appendix-constant",
            Suite::Reproducing => "reproducing",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EVERY
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::EVERY.iter().map(|x| x.name()).collect();
                invalid(format!(
                    "unknown suite `{s}`; expected one of {}, all",
                    names.join(", ")
                ))
            })
    }
}

fn default_nu() -> f64 {
    1.0
}
fn default_truncation() -> usize {
    32
}
fn default_quad_nodes() -> usize {
    96
}
fn default_tolerance() -> f64 {
    1e-8
}
fn default_suites() -> Vec<Suite> {
    vec![Suite::All]
}
fn default_parallel() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_nu")]
    pub nu: f64,
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    #[serde(default = "default_quad_nodes")]
    pub quad_nodes: usize,
    /// Tolerance of the quadrature identities; coefficient identities use
    /// their own fixed bounds.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_suites")]
    pub suites: Vec<Suite>,
    #[serde(default = "default_parallel")]
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            nu: default_nu(),
            truncation: default_truncation(),
            quad_nodes: default_quad_nodes(),
            tolerance: default_tolerance(),
            seed: 0,
            suites: default_suites(),
            parallel: default_parallel(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        crate::error::check_nu(self.nu)?;
        if self.truncation == 0 {
            return Err(invalid("truncation must be positive"));
        }
        if self.quad_nodes == 0 || self.quad_nodes > MAX_NODES {
            return Err(invalid(format!(
                "quad_nodes must lie in 1..={MAX_NODES}, got {}",
                self.quad_nodes
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(invalid(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.suites.is_empty() {
            return Err(invalid("at least one suite must be requested"));
        }
        Ok(())
    }

    /// Requested suites with `all` expanded, deduplicated, in canonical order.
    pub fn resolved_suites(&self) -> Vec<Suite> {
        let all = self.suites.contains(&Suite::All);
        Suite::EVERY
            .into_iter()
            .filter(|s| all || self.suites.contains(s))
            .collect()
    }

    pub fn mode(&self) -> Parallelism {
        if self.parallel {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(s)?;
        c.validate()?;
        Ok(c)
    }
}
