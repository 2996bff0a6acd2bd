//! `B^{d,nu} f(z) = c_d ∫ f(x) e^{-nu (x - z/√2)^2} dx` for `d = 1, 2`.
//!
//! On the Hermite basis `B1 H_m = (nu/pi)^{1/4} (√2 nu)^m xi^m`; the
//! two-dimensional transform acts as the tensor square.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use super::c_d;
use crate::error::{check_nu, Result};
use crate::exec::{map_range, map_slice, Parallelism};
use crate::numerics::sum::ComplexSum;
use crate::numerics::{PlanarRule, QuadratureRule};
use crate::spaces::hermite::ensure_rate;
use crate::spaces::{
    ASubspaceCoeffs, FockCoeffs1, FockCoeffs2, Grid, HermiteCoeffs, HermiteTensor,
};

/// `(nu/pi)^{1/4} (√2 nu)^m`, the eigenvalue-like factor of `B1` on `H_m`.
pub fn b1_scale(m: usize, nu: f64) -> f64 {
    (nu / PI).powf(0.25) * (SQRT_2 * nu).powi(m as i32)
}

pub fn b1_forward(f: &HermiteCoeffs) -> FockCoeffs1 {
    let nu = f.nu();
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &c)| c * b1_scale(m, nu))
        .collect();
    FockCoeffs1::new(nu, c).expect("validated on construction")
}

pub fn b1_inverse(f: &FockCoeffs1) -> HermiteCoeffs {
    let nu = f.nu();
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &a)| a / b1_scale(m, nu))
        .collect();
    HermiteCoeffs::new(nu, c).expect("validated on construction")
}

/// `B1 f` from samples of `f` at the nodes of a one-dimensional rule.
#[derive(Debug, Clone)]
pub struct B1Quadrature {
    nu: f64,
    samples: Vec<(f64, Complex64)>,
}

impl B1Quadrature {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let nu = self.nu;
        let shift = -nu * z * z * 0.5;
        let mut acc = ComplexSum::new();
        for &(x, s) in &self.samples {
            acc.add(s * (z * (SQRT_2 * nu * x) + shift).exp());
        }
        acc.value() * c_d(1, nu)
    }
}

/// Samples `f` on `rule` and returns an evaluator of
/// `z -> c_1 ∫ f(x) e^{-nu (x - z/√2)^2} dx`.
pub fn b1_forward_quad(
    f: impl Fn(f64) -> Complex64,
    nu: f64,
    rule: &QuadratureRule,
) -> Result<B1Quadrature> {
    check_nu(nu)?;
    let shift = rule.weight_exponent() - nu;
    let samples = rule
        .points()
        .map(|(x, w)| (x, f(x) * (w * (shift * x * x).exp())))
        .collect();
    Ok(B1Quadrature { nu, samples })
}

/// Quadrature `B1 f_j(z)` for a family of Hermite series at many points,
/// sharing the kernel values across the family. Indexed `[point][j]`.
pub fn b1_forward_quad_batch(
    fs: &[HermiteCoeffs],
    rule: &QuadratureRule,
    points: &[Complex64],
    mode: Parallelism,
) -> Result<Vec<Vec<Complex64>>> {
    let Some(first) = fs.first() else {
        return Ok(vec![Vec::new(); points.len()]);
    };
    let nu = first.nu();
    for f in fs {
        if f.nu() != nu {
            return Err(crate::Error::NuMismatch(nu, f.nu()));
        }
    }
    let quads: Vec<B1Quadrature> = fs
        .iter()
        .map(|f| b1_forward_quad(|x| f.eval(x), nu, rule))
        .collect::<Result<_>>()?;
    let xs: Vec<f64> = rule.nodes().to_vec();
    let c1 = c_d(1, nu);
    Ok(map_slice(points, mode, |&z| {
        let shift = -nu * z * z * 0.5;
        let k: Vec<Complex64> = xs
            .iter()
            .map(|&x| (z * (SQRT_2 * nu * x) + shift).exp())
            .collect();
        quads
            .iter()
            .map(|q| {
                let mut acc = ComplexSum::new();
                for (&(_, s), &kx) in q.samples.iter().zip(&k) {
                    acc.add(s * kx);
                }
                acc.value() * c1
            })
            .collect()
    }))
}

/// Planar rule matched to integrands carrying `e^{-nu conj(xi)^2 / 2}`
/// against `e^{-nu |xi|^2}`: rates `3nu/2` along the real axis and `nu/2`
/// along the imaginary axis.
pub fn inverse_rule(n: usize, nu: f64) -> Result<PlanarRule> {
    PlanarRule::anisotropic(n, 1.5 * nu, 0.5 * nu)
}

fn inverse_kernel(x: f64, zb: Complex64, nu: f64) -> Complex64 {
    (zb * zb * (-0.5 * nu) + zb * (SQRT_2 * nu * x)).exp()
}

/// `B1^{-1} F(x) = c_1 ∫_C F(xi) e^{-nu conj(xi)^2/2 + √2 nu x conj(xi)} e^{-nu|xi|^2} dλ`.
pub fn b1_inverse_quad(
    f: impl Fn(Complex64) -> Complex64,
    nu: f64,
    rule: &PlanarRule,
    x: f64,
) -> Complex64 {
    rule.integrate_against(nu, |xi| f(xi) * inverse_kernel(x, xi.conj(), nu)) * c_d(1, nu)
}

/// Tensor action `H_m ⊗ H_n -> (nu/pi)^{1/2} (√2 nu)^{m+n} z^m w^n`.
pub fn b2_forward(g: &HermiteTensor) -> FockCoeffs2 {
    let nu = g.nu();
    let c = g.coeffs();
    let out = Grid::from_fn(c.rows(), c.cols(), |m, n| {
        c.get(m, n) * (b1_scale(m, nu) * b1_scale(n, nu))
    });
    FockCoeffs2::new(nu, out).expect("validated on construction")
}

/// `B2` applied to a holomorphic function of `x + i y`:
/// `xi^m -> (nu/pi)^{1/2} 2^{-m/2} (z + i w)^m`.
pub fn b2_forward_fock1(f: &FockCoeffs1) -> ASubspaceCoeffs {
    let nu = f.nu();
    let k = (nu / PI).sqrt();
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &a)| a * (k * SQRT_2.powi(-(m as i32))))
        .collect();
    ASubspaceCoeffs::new(nu, c).expect("validated on construction")
}

pub fn b2_inverse(f: &FockCoeffs2) -> HermiteTensor {
    let nu = f.nu();
    let c = f.coeffs();
    let out = Grid::from_fn(c.rows(), c.cols(), |m, n| {
        c.get(m, n) / (b1_scale(m, nu) * b1_scale(n, nu))
    });
    HermiteTensor::new(nu, out).expect("validated on construction")
}

/// `B2 g` from samples of `g` on the product nodes of a planar rule. The
/// kernel factorizes over the two axes, so each evaluation costs one
/// exponential per axis node.
#[derive(Debug, Clone)]
pub struct B2Quadrature {
    nu: f64,
    xs: Vec<f64>,
    ys: Vec<f64>,
    samples: Grid,
}

impl B2Quadrature {
    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let nu = self.nu;
        let ex: Vec<Complex64> = self
            .xs
            .iter()
            .map(|&x| (z * (SQRT_2 * nu * x) - z * z * (0.5 * nu)).exp())
            .collect();
        let ey: Vec<Complex64> = self
            .ys
            .iter()
            .map(|&y| (w * (SQRT_2 * nu * y) - w * w * (0.5 * nu)).exp())
            .collect();
        let mut outer = ComplexSum::new();
        for (i, exi) in ex.iter().enumerate() {
            let mut inner = ComplexSum::new();
            for (j, eyj) in ey.iter().enumerate() {
                inner.add(self.samples.get(i, j) * eyj);
            }
            outer.add(inner.value() * exi);
        }
        outer.value() * c_d(2, nu)
    }

    pub fn eval_many(
        &self,
        points: &[(Complex64, Complex64)],
        mode: Parallelism,
    ) -> Vec<Complex64> {
        map_slice(points, mode, |&(z, w)| self.eval(z, w))
    }
}

/// Samples `g(x, y)` on the nodes of `rule` (real axis for `x`, imaginary
/// axis for `y`), rows in parallel when `mode` allows.
pub fn b2_forward_quad(
    g: impl Fn(f64, f64) -> Complex64 + Sync + Send,
    nu: f64,
    rule: &PlanarRule,
    mode: Parallelism,
) -> Result<B2Quadrature> {
    check_nu(nu)?;
    let (rx, ry) = (rule.re_axis(), rule.im_axis());
    let (sx, sy) = (rx.weight_exponent() - nu, ry.weight_exponent() - nu);
    let xs: Vec<f64> = rx.nodes().to_vec();
    let ys: Vec<f64> = ry.nodes().to_vec();
    let rows = map_range(xs.len(), mode, |i| {
        let x = xs[i];
        let wx = rx.weights()[i] * (sx * x * x).exp();
        ry.points()
            .map(|(y, wy)| g(x, y) * (wx * wy * (sy * y * y).exp()))
            .collect::<Vec<_>>()
    });
    let samples = Grid::from_rows(rows).expect("rectangular");
    Ok(B2Quadrature {
        nu,
        xs,
        ys,
        samples,
    })
}

/// `(B2)^{-1} F(x, y) = c_2 ∫_{C^2} F(z, w) k(x, conj z) k(y, conj w) e^{-nu(|z|^2+|w|^2)} dλ`,
/// `k(x, u) = e^{-nu u^2/2 + √2 nu x u}`. Cost grows as the fourth power of
/// the per-axis node count; intended for low-degree oracles.
pub fn b2_inverse_quad(
    f: impl Fn(Complex64, Complex64) -> Complex64,
    nu: f64,
    rule: &PlanarRule,
    x: f64,
    y: f64,
) -> Result<Complex64> {
    check_nu(nu)?;
    let pts = rule.points_against(nu);
    let kx: Vec<Complex64> = pts
        .iter()
        .map(|&(z, wt)| inverse_kernel(x, z.conj(), nu) * wt)
        .collect();
    let ky: Vec<Complex64> = pts
        .iter()
        .map(|&(w, wt)| inverse_kernel(y, w.conj(), nu) * wt)
        .collect();
    let mut outer = ComplexSum::new();
    for (&(z, _), kz) in pts.iter().zip(&kx) {
        let mut inner = ComplexSum::new();
        for (&(w, _), kw) in pts.iter().zip(&ky) {
            inner.add(f(z, w) * kw);
        }
        outer.add(inner.value() * kz);
    }
    Ok(outer.value() * c_d(2, nu))
}

/// Convenience for callers holding coefficients: checks the rule rate.
pub(crate) fn line_rule_for(nu: f64, rule: &QuadratureRule) -> Result<()> {
    ensure_rate(rule.weight_exponent(), nu)
}
