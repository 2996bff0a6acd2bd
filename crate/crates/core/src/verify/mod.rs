//! Verification suites. Each suite checks a family of operator identities,
//! usually by running a coefficient path against an independent quadrature
//! path, and yields one [`TransformReport`] per identity.

pub mod config;
pub mod inputs;
pub mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use config::{RunConfig, Suite};

use crate::error::{invalid, Result};
use crate::exec::map_slice;
use crate::transforms::TransformReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: RunConfig,
    pub pass: bool,
    pub reports: Vec<TransformReport>,
    /// Fitted constants, always present.
    pub constants: BTreeMap<String, f64>,
    pub flags: Vec<String>,
    pub wall_time_seconds: f64,
}

impl SuiteReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs one suite. Internal errors become a failing report.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Vec<TransformReport>> {
    let out = match suite {
        Suite::Isometry => suites::isometry(cfg),
        Suite::Factorization => suites::factorization(cfg),
        Suite::Image => suites::image(cfg),
        Suite::LeftInverse => suites::left_inverse(cfg),
        Suite::Quaternionic => suites::quaternionic(cfg),
        Suite::Bridge => suites::bridge(cfg),
        Suite::Kernels => suites::kernels(cfg),
        Suite::Fourier => suites::fourier(cfg),
        Suite::AppendixConstant => suites::appendix_constant(cfg),
        Suite::Reproducing => suites::reproducing(cfg),
        Suite::All => return Err(invalid("`all` is expanded by the runner, not run directly")),
    };
    Ok(out.unwrap_or_else(|e| {
        vec![
            TransformReport::new(format!("{suite}: evaluation"), f64::NAN, 0.0)
                .force_fail(e.to_string()),
        ]
    }))
}

/// The inverse-formula prefactor, the two kernel constants and `kappa_k`,
/// with flags for every printed constant the fits contradict.
pub fn fitted_constants(cfg: &RunConfig) -> Result<(BTreeMap<String, f64>, Vec<String>)> {
    let mut c = BTreeMap::new();
    let (kappa, _) = suites::inverse_prefactor(cfg)?;
    c.insert("inverse_prefactor".to_string(), kappa);
    let (ifit, cfit) = suites::kernel_fits(cfg, cfg.nu)?;
    c.insert("ikernel_kappa".to_string(), ifit.kappa);
    c.insert("ckernel_kappa".to_string(), cfit.kappa);
    for k in 1..=crate::fourier::MAX_LEVEL {
        c.insert(
            format!("kappa_{k}"),
            crate::fourier::gk_constant(k, cfg.nu)?,
        );
    }
    let mut flags = Vec::new();
    let printed = (std::f64::consts::PI / cfg.nu).powf(0.25);
    if ((kappa - printed) / printed).abs() > suites::COEFF_TOL {
        flags.push(format!("printed inverse prefactor (pi/nu)^(1/4) = {printed:.12} disagrees with fitted {kappa:.12}"));
    }
    flags.extend(suites::appendix_flags(cfg.nu)?);
    Ok((c, flags))
}

pub fn run(cfg: &RunConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let list = cfg.resolved_suites();
    let results = map_slice(&list, cfg.mode(), |&s| run_suite(s, cfg));
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let (constants, flags) = fitted_constants(cfg)?;
    Ok(SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: cfg.clone(),
        pass: reports.iter().all(|r| r.pass),
        reports,
        constants,
        flags,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Which configuration field a convergence sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParameter {
    Nodes,
    Truncation,
}

impl Suite {
    pub fn sweep_parameter(self) -> SweepParameter {
        match self {
            Suite::Kernels | Suite::Fourier | Suite::AppendixConstant => SweepParameter::Truncation,
            _ => SweepParameter::Nodes,
        }
    }

    /// Index of the report whose residual a sweep follows.
    fn headline(self) -> usize {
        match self {
            Suite::Isometry => 2,
            Suite::Image | Suite::LeftInverse | Suite::Quaternionic => 1,
            Suite::Fourier => 4,
            Suite::AppendixConstant => 1,
            _ => 0,
        }
    }
}

/// `(parameter, residual)` rows for a strictly increasing sweep.
pub fn convergence(suite: Suite, sweep: &[usize], cfg: &RunConfig) -> Result<Vec<(usize, f64)>> {
    cfg.validate()?;
    if suite == Suite::All {
        return Err(invalid("convergence runs a single suite"));
    }
    if sweep.is_empty() {
        return Err(invalid("sweep must not be empty"));
    }
    if sweep.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("sweep must be strictly increasing"));
    }
    let param = suite.sweep_parameter();
    sweep
        .iter()
        .map(|&p| {
            let mut c = cfg.clone();
            match param {
                SweepParameter::Nodes => c.quad_nodes = p,
                SweepParameter::Truncation => c.truncation = p,
            }
            c.validate()?;
            let reports = run_suite(suite, &c)?;
            let r = reports
                .get(suite.headline())
                .or(reports.first())
                .map_or(f64::NAN, |r| r.residual);
            Ok((p, r))
        })
        .collect()
}
