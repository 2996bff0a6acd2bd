//! Segal-Bargmann transforms `B1`, `B2`, the composed transform
//! `G = (nu/pi)^{1/2} C_{psi1} ∘ B1` into `A^{2,nu}(C^2)`, and its left
//! inverse `R = (pi/nu)^{1/2} B1^{-1} ∘ C_{psi2}`.
//!
//! Coefficient paths act diagonally (or by index shifts) on truncated bases
//! and are exact up to rounding. Quadrature paths evaluate the integral
//! representations with Gauss-Hermite rules and serve as oracles.

pub mod composed;
pub mod segal;

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::numerics::I;

pub use composed::{
    c_psi2, fit_r_prefactor, g_eval, g_factorization_residual, g_transform, r_transform,
    r_transform_quad, r_transform_unscaled_quad,
};
pub use segal::{
    b1_forward, b1_forward_quad, b1_forward_quad_batch, b1_inverse, b1_inverse_quad, b1_scale,
    b2_forward, b2_forward_fock1, b2_forward_quad, b2_inverse, b2_inverse_quad, inverse_rule,
    B1Quadrature, B2Quadrature,
};

/// `c_d = (nu/pi)^{3d/4}`.
pub fn c_d(d: u32, nu: f64) -> f64 {
    (nu / PI).powf(0.75 * d as f64)
}

/// Points `{-1, -1/2, 0, 1/2, 1}` along each real axis.
pub const DEFAULT_AXIS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

/// The 25-point grid `DEFAULT_AXIS + i DEFAULT_AXIS` in `C`.
pub fn default_grid_c() -> Vec<Complex64> {
    DEFAULT_AXIS
        .iter()
        .flat_map(|&a| DEFAULT_AXIS.iter().map(move |&b| Complex64::new(a, b)))
        .collect()
}

/// The 625-point product grid in `C^2`.
pub fn default_grid_c2() -> Vec<(Complex64, Complex64)> {
    let g = default_grid_c();
    g.iter()
        .flat_map(|&z| g.iter().map(move |&w| (z, w)))
        .collect()
}

/// Holomorphic symbols used by composition operators `C_psi F = F ∘ psi`.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolMap {
    /// `(z, w) -> (z + i w)/√2`.
    Psi1,
    /// `xi -> (xi/√2, -i xi/√2)`.
    Psi2,
    /// `Z -> 2^{-k/2} Σ_m i^m (z_{2m+1} + i z_{2m+2})` on `C^{2^k}`.
    PsiK(u32),
    /// Multiplies the argument by `theta` before applying `inner`.
    Scaled {
        theta: Complex64,
        inner: Box<SymbolMap>,
    },
}

impl SymbolMap {
    pub fn scaled(theta: Complex64, inner: SymbolMap) -> Self {
        SymbolMap::Scaled {
            theta,
            inner: Box::new(inner),
        }
    }

    pub fn input_dim(&self) -> usize {
        match self {
            SymbolMap::Psi1 => 2,
            SymbolMap::Psi2 => 1,
            SymbolMap::PsiK(k) => 1usize << k,
            SymbolMap::Scaled { inner, .. } => inner.input_dim(),
        }
    }

    pub fn apply(&self, input: &[Complex64]) -> Result<Vec<Complex64>> {
        if input.len() != self.input_dim() {
            return Err(invalid(format!(
                "symbol expects {} arguments, got {}",
                self.input_dim(),
                input.len()
            )));
        }
        Ok(match self {
            SymbolMap::Psi1 => vec![(input[0] + I * input[1]) * FRAC_1_SQRT_2],
            SymbolMap::Psi2 => vec![input[0] * FRAC_1_SQRT_2, -I * input[0] * FRAC_1_SQRT_2],
            SymbolMap::PsiK(k) => vec![crate::fourier::psi_k_eval(input, *k)?],
            SymbolMap::Scaled { theta, inner } => {
                let scaled: Vec<Complex64> = input.iter().map(|z| z * theta).collect();
                inner.apply(&scaled)?
            }
        })
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformReport {
    pub identity: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default)]
    pub constants: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TransformReport {
    /// `pass` is derived; a NaN residual fails.
    pub fn new(identity: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            identity: identity.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            constants: BTreeMap::new(),
            nodes: None,
            truncation: None,
            notes: Vec::new(),
        }
    }

    pub fn with_constant(mut self, name: impl Into<String>, value: f64) -> Self {
        self.constants.insert(name.into(), value);
        self
    }

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.nodes = Some(nodes);
        self
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation = Some(n);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Marks the report failed regardless of the residual.
    pub fn force_fail(mut self, note: impl Into<String>) -> Self {
        self.pass = false;
        self.notes.push(note.into());
        self
    }
}

/// `max_k |a_k - b_k|`.
pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let n = a.len().max(b.len());
    let zero = Complex64::new(0.0, 0.0);
    (0..n)
        .map(|k| (a.get(k).copied().unwrap_or(zero) - b.get(k).copied().unwrap_or(zero)).norm())
        .fold(0.0, f64::max)
}
