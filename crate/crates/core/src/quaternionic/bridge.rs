//! The quaternionic Segal-Bargmann transform `B_H` and the bridges
//! `I = B_H ∘ R : F^{2,nu}(C^2) -> F_slice` and
//! `J = G ∘ B_H^{-1} : F_slice,i -> A^{2,nu}(C^2)`.
//!
//! On coefficients `I = (pi/nu)^{1/2} Ext ∘ C_{psi2}`, so that `J ∘ I` is
//! the identity on `A^{2,nu}(C^2)` for every `nu`. The bare `Ext ∘ C_{psi2}`
//! is available as [`ext_c_psi2`].

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::series::{ext_from_slice, SliceRegularSeries};
use crate::error::{check_nu, invalid, Result};
use crate::numerics::sum::QuaternionSum;
use crate::numerics::{ImaginaryUnit, PlanarRule, QuadratureRule, Quaternion, I};
use crate::spaces::hermite::{ensure_rate, hermite_values};
use crate::spaces::{
    a_subspace_embed, hermite_norm_sq, kernel_k2, ASubspaceCoeffs, FockCoeffs2, Grid, HermiteCoeffs,
};
use crate::transforms::{b1_forward, b1_scale, c_d, c_psi2};

/// Off-slice magnitude below which a coefficient counts as lying in `C_i`.
pub const SLICE_TOL: f64 = 1e-12;

pub fn bh_forward(f: &HermiteCoeffs<Quaternion>) -> SliceRegularSeries {
    let nu = f.nu();
    SliceRegularSeries::new(
        nu,
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(m, &c)| c * b1_scale(m, nu))
            .collect(),
    )
    .expect("validated on construction")
}

/// `Ext ∘ B1` on complex inputs.
pub fn bh_forward_complex(f: &HermiteCoeffs) -> SliceRegularSeries {
    SliceRegularSeries::from_fock1(&b1_forward(f))
}

pub fn bh_inverse(f: &SliceRegularSeries) -> HermiteCoeffs<Quaternion> {
    let nu = f.nu();
    HermiteCoeffs::new(
        nu,
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(m, &c)| c / b1_scale(m, nu))
            .collect(),
    )
    .expect("validated on construction")
}

/// `c_1 ∫_{C_I} k(conj q) F_I(q) e^{-nu|q|^2} dλ_I(q)` with
/// `k(u) = e^{-nu u^2/2 + √2 nu x u}` placed to the LEFT of `F_I(q)`, which
/// keeps the right coefficients of `F` on the right.
pub fn bh_inverse_quad(
    f: &SliceRegularSeries,
    unit: ImaginaryUnit,
    rule: &PlanarRule,
    x: f64,
) -> Quaternion {
    let nu = f.nu();
    rule.integrate_quaternion_against(nu, |xi| {
        let u = xi.conj();
        let k = (u * u * (-0.5 * nu) + u * (SQRT_2 * nu * x)).exp();
        unit.embed(k) * f.eval(unit.embed(xi))
    }) * c_d(1, nu)
}

/// Hermite coefficients of [`bh_inverse_quad`], sampled at the nodes of
/// `line` and projected component-wise.
pub fn bh_inverse_quad_coeffs(
    f: &SliceRegularSeries,
    unit: ImaginaryUnit,
    rule: &PlanarRule,
    line: &QuadratureRule,
    truncation: usize,
) -> Result<HermiteCoeffs<Quaternion>> {
    let nu = f.nu();
    ensure_rate(line.weight_exponent(), nu)?;
    let samples: Vec<(f64, Quaternion, Vec<f64>)> = line
        .points()
        .map(|(x, w)| {
            (
                w,
                bh_inverse_quad(f, unit, rule, x),
                hermite_values(truncation, nu, x),
            )
        })
        .collect();
    let coeffs = (0..=truncation)
        .map(|m| {
            let mut acc = QuaternionSum::new();
            for (w, v, hs) in &samples {
                acc.add(*v * (w * hs[m]));
            }
            acc.value() / hermite_norm_sq(m, nu)
        })
        .collect();
    HermiteCoeffs::new(nu, coeffs)
}

/// `(pi/nu)^{1/2}`, the factor between `B_H ∘ R` and `Ext ∘ C_{psi2}`.
pub fn i_prefactor(nu: f64) -> f64 {
    (PI / nu).sqrt()
}

/// `Ext ∘ C_{psi2}`: `b_j = Σ_k (-i)^k 2^{-j/2} a_{j-k,k}` in the slice `C_i`.
pub fn ext_c_psi2(f: &FockCoeffs2) -> SliceRegularSeries {
    SliceRegularSeries::from_fock1(&c_psi2(f))
}

/// `I F = B_H(R F) = (pi/nu)^{1/2} Ext(C_{psi2} F)`.
pub fn i_transform(f: &FockCoeffs2) -> SliceRegularSeries {
    let k = i_prefactor(f.nu());
    ext_c_psi2(f).map(|_, c| c * k)
}

/// `prefactor ∫_C K_H(q, xi) F(xi/√2, -i xi/√2) e^{-nu|xi|^2} dλ(xi)`, the
/// kernel on the left. `K_H(q, xi)` with `xi ∈ C_i` is evaluated in closed
/// form by extending `(nu/pi) e^{nu z conj(xi)}` off the slice.
pub fn i_transform_quad(
    f: impl Fn(Complex64, Complex64) -> Complex64,
    nu: f64,
    rule: &PlanarRule,
    q: Quaternion,
    prefactor: f64,
) -> Quaternion {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    rule.integrate_quaternion_against(nu, |xi| {
        let k = ext_from_slice(
            |p| Quaternion::from_complex((p.slice_i_part() * xi.conj() * nu).exp() * (nu / PI)),
            ImaginaryUnit::I,
            q,
        );
        k * Quaternion::from_complex(f(xi * s, -I * xi * s))
    }) * prefactor
}

/// Preimage under `I` of a slice-i series: `a_{j,0} = (nu/pi)^{1/2} 2^{j/2} b_j`.
pub fn i_preimage(f: &SliceRegularSeries) -> Result<FockCoeffs2> {
    let g = f.to_fock1(SLICE_TOL * max_norm(f).max(1.0))?;
    let nu = f.nu();
    let k = (nu / PI).sqrt();
    let grid = Grid::from_fn(g.truncation() + 1, 1, |j, _| {
        g.coeff(j) * (k * SQRT_2.powi(j as i32))
    });
    FockCoeffs2::new(nu, grid)
}

/// `J F(z, w) = (nu/pi)^{1/2} F((z + i w)/√2)`:
/// `c_m -> (nu/pi)^{1/2} 2^{-m/2} c_m` on `(z + i w)^m`.
pub fn j_transform(f: &SliceRegularSeries) -> Result<ASubspaceCoeffs> {
    let g = f.to_fock1(SLICE_TOL * max_norm(f).max(1.0))?;
    let nu = f.nu();
    let k = (nu / PI).sqrt();
    ASubspaceCoeffs::new(
        nu,
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(m, &c)| c * (k * SQRT_2.powi(-(m as i32))))
            .collect(),
    )
}

fn max_norm(f: &SliceRegularSeries) -> f64 {
    f.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// `max_m |(J ∘ I ∘ embed)(F)_m - F_m|`.
pub fn ji_roundtrip_residual(f: &ASubspaceCoeffs) -> Result<f64> {
    let back = j_transform(&i_transform(&a_subspace_embed(f)))?;
    Ok(back.max_abs_diff(f))
}

/// Result of fitting `LHS ≈ kappa RHS` by real least squares.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelFit {
    pub kappa: f64,
    /// `max |LHS - kappa RHS|` over the samples.
    pub residual: f64,
    /// Which reading of the second kernel slot was selected, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

pub(crate) fn fit_real(lhs: &[Quaternion], rhs: &[Quaternion]) -> Result<KernelFit> {
    let dot = |a: Quaternion, b: Quaternion| a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
    let num: f64 = lhs.iter().zip(rhs).map(|(&l, &r)| dot(l, r)).sum();
    let den: f64 = rhs.iter().map(|r| r.norm_sqr()).sum();
    if den == 0.0 {
        return Err(invalid(
            "kernel fit is degenerate: right-hand side vanishes",
        ));
    }
    let kappa = num / den;
    let residual = lhs
        .iter()
        .zip(rhs)
        .map(|(&l, &r)| (l - r * kappa).norm())
        .fold(0.0, f64::max);
    Ok(KernelFit {
        kappa,
        residual,
        convention: None,
    })
}

/// Fits `I(K_2(·, (z, w)))(q) = kappa K_H(q, (z + i w)/√2)` over `qs`, the
/// two-variable kernel truncated at total degree `degree`.
pub fn ikernel_residual(
    z: Complex64,
    w: Complex64,
    qs: &[Quaternion],
    nu: f64,
    degree: usize,
) -> Result<KernelFit> {
    check_nu(nu)?;
    let lhs_series = i_transform(&FockCoeffs2::kernel_at((z, w), nu, degree)?);
    let p = Quaternion::from_complex((z + I * w) / SQRT_2);
    let lhs: Vec<Quaternion> = qs.iter().map(|&q| lhs_series.eval(q)).collect();
    let rhs: Vec<Quaternion> = qs
        .iter()
        .map(|&q| super::series::kernel_kh(q, p, nu, 1e-16))
        .collect::<Result<_>>()?;
    fit_real(&lhs, &rhs)
}

/// Fits `J(K_H(·, xi))(z, w) = kappa K_2(psi2(xi), (z, w))` over `grid`,
/// trying `K_2` with its second slot conjugated (the reproducing-kernel
/// reading) and with the first slot conjugated instead (holomorphic in
/// `(z, w)`); the better fit is returned and named.
pub fn ckernel_residual(
    xi: Complex64,
    grid: &[(Complex64, Complex64)],
    nu: f64,
    degree: usize,
) -> Result<KernelFit> {
    check_nu(nu)?;
    let series = SliceRegularSeries::kernel_at(Quaternion::from_complex(xi), nu, degree)?;
    let j = j_transform(&series)?;
    let (u, v) = (xi / SQRT_2, -I * xi / SQRT_2);
    let lhs: Vec<Quaternion> = grid
        .iter()
        .map(|&(z, w)| Quaternion::from_complex(j.eval(z, w)))
        .collect();
    let anti: Vec<Quaternion> = grid
        .iter()
        .map(|&(z, w)| Quaternion::from_complex(kernel_k2((u, v), (z, w), nu)))
        .collect();
    let holo: Vec<Quaternion> = grid
        .iter()
        .map(|&(z, w)| Quaternion::from_complex(kernel_k2((z, w), (u, v), nu)))
        .collect();
    let mut a = fit_real(&lhs, &anti)?;
    a.convention = Some("K2(psi2(xi), (z,w))".into());
    let mut h = fit_real(&lhs, &holo)?;
    h.convention = Some("K2((z,w), psi2(xi))".into());
    Ok(if h.residual <= a.residual { h } else { a })
}
