//! Rescaled Fourier transform on `L^{2,nu}(R)`, the dilations `Gamma_theta`
//! and the transforms `T1`, `T2` built from them.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::numerics::{complex_gauss_rule, i_pow, neg_i_pow, QuadratureRule, ZERO};
use crate::spaces::hermite::ensure_rate;
use crate::spaces::{
    proj_fock1_samples, ASubspaceCoeffs, FockCoeffs1, FockCoeffs2, Grid, HermiteCoeffs,
};
use crate::transforms::{b1_forward, b1_inverse, b2_inverse, g_transform};

/// The `∓` branch: `Minus` uses `e^{-i nu x u}`, `Plus` uses `e^{+i nu x u}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignChoice {
    Minus,
    Plus,
}

impl SignChoice {
    /// `∓1`.
    pub fn signum(self) -> f64 {
        match self {
            SignChoice::Minus => -1.0,
            SignChoice::Plus => 1.0,
        }
    }

    /// `∓i`.
    pub fn theta(self) -> Complex64 {
        Complex64::new(0.0, self.signum())
    }

    /// `(∓i)^m`, exact.
    pub fn theta_pow(self, m: usize) -> Complex64 {
        match self {
            SignChoice::Minus => neg_i_pow(m),
            SignChoice::Plus => i_pow(m),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            SignChoice::Minus => SignChoice::Plus,
            SignChoice::Plus => SignChoice::Minus,
        }
    }
}

impl fmt::Display for SignChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignChoice::Minus => "-",
            SignChoice::Plus => "+",
        })
    }
}

/// `H_m -> (∓i)^m H_m`.
pub fn fourier_rescaled(f: &HermiteCoeffs, sign: SignChoice) -> HermiteCoeffs {
    f.map(|m, c| c * sign.theta_pow(m))
}

/// `(nu/2pi)^{1/2} ∫ phi(u) e^{nu (x ∓ i u)^2 / 2} du`, with `u_rule` carrying
/// the weight `e^{-nu u^2/2}`.
pub fn fourier_rescaled_quad(
    phi: impl Fn(f64) -> Complex64,
    nu: f64,
    sign: SignChoice,
    u_rule: &QuadratureRule,
    x: f64,
) -> Result<Complex64> {
    ensure_rate(u_rule.weight_exponent(), 0.5 * nu)?;
    Ok(fourier_quad_at(phi, nu, sign, u_rule, x))
}

fn fourier_quad_at(
    phi: impl Fn(f64) -> Complex64,
    nu: f64,
    sign: SignChoice,
    u_rule: &QuadratureRule,
    x: f64,
) -> Complex64 {
    let s = sign.signum();
    let v = u_rule
        .integrate_complex(|u| phi(u) * Complex64::new(0.5 * nu * x * x, s * nu * x * u).exp());
    v * (nu / (2.0 * PI)).sqrt()
}

/// Hermite coefficients of [`fourier_rescaled_quad`] by Gauss-Hermite
/// projection on `x_rule` (weight `e^{-nu x^2}`).
pub fn fourier_rescaled_quad_coeffs(
    f: &HermiteCoeffs,
    sign: SignChoice,
    u_rule: &QuadratureRule,
    x_rule: &QuadratureRule,
) -> Result<HermiteCoeffs> {
    let nu = f.nu();
    ensure_rate(u_rule.weight_exponent(), 0.5 * nu)?;
    HermiteCoeffs::project(
        |x| fourier_quad_at(|u| f.eval(u), nu, sign, u_rule, x),
        nu,
        f.truncation(),
        x_rule,
    )
}

/// `Gamma_theta phi(xi) = phi(theta xi)` on Fock coefficients.
pub trait Dilate: Sized {
    fn dilate(&self, theta: Complex64) -> Self;
}

impl Dilate for FockCoeffs1 {
    fn dilate(&self, theta: Complex64) -> Self {
        let mut p = Complex64::new(1.0, 0.0);
        let mut pows = Vec::with_capacity(self.coeffs().len());
        for _ in self.coeffs() {
            pows.push(p);
            p *= theta;
        }
        self.map(|m, a| a * pows[m])
    }
}

impl Dilate for FockCoeffs2 {
    fn dilate(&self, theta: Complex64) -> Self {
        let g = self.coeffs();
        let out = Grid::from_fn(g.rows(), g.cols(), |m, n| {
            g.get(m, n) * theta.powu((m + n) as u32)
        });
        FockCoeffs2::new(self.nu(), out).expect("validated on construction")
    }
}

pub fn gamma_dilation<F: Dilate>(theta: Complex64, f: &F) -> Result<F> {
    if !theta.is_finite() || (theta.norm() - 1.0).abs() > 1e-12 {
        return Err(invalid(format!(
            "dilation needs |theta| = 1, got |theta| = {}",
            theta.norm()
        )));
    }
    Ok(f.dilate(theta))
}

/// `T1 = (nu/pi)^{1/2} C_{∓i psi1}`: `e_m -> (nu/pi)^{1/2} (∓i)^m 2^{-m/2} (z + i w)^m`.
pub fn t1_transform(f: &FockCoeffs1, sign: SignChoice) -> ASubspaceCoeffs {
    let k = (f.nu() / PI).sqrt();
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &a)| a * sign.theta_pow(m) * (k * FRAC_1_SQRT_2.powi(m as i32)))
        .collect();
    ASubspaceCoeffs::new(f.nu(), c).expect("validated on construction")
}

/// `G ∘ F~ ∘ B1^{-1}` with the Fourier step done by quadrature.
pub fn t1_definition(
    f: &FockCoeffs1,
    sign: SignChoice,
    u_rule: &QuadratureRule,
    x_rule: &QuadratureRule,
) -> Result<ASubspaceCoeffs> {
    let h = fourier_rescaled_quad_coeffs(&b1_inverse(f), sign, u_rule, x_rule)?;
    Ok(g_transform(&h))
}

/// `T2 = (pi/nu)^{1/2} C_{∓i psi2}`:
/// `e_{m,n} -> (pi/nu)^{1/2} (∓i)^{m+n} (-i)^n 2^{-(m+n)/2} e_{m+n}`.
pub fn t2_transform(f: &FockCoeffs2, sign: SignChoice) -> FockCoeffs1 {
    let (mm, nn) = f.truncation();
    let k = (PI / f.nu()).sqrt();
    let mut out = vec![ZERO; mm + nn + 1];
    for (m, n, a) in f.coeffs().entries() {
        out[m + n] +=
            a * sign.theta_pow(m + n) * neg_i_pow(n) * (k * FRAC_1_SQRT_2.powi((m + n) as i32));
    }
    FockCoeffs1::new(f.nu(), out).expect("validated on construction")
}

/// `Gamma_{∓i} ∘ Proj ∘ B2^{-1}`, the projection done by planar quadrature
/// with `nodes` points per axis.
pub fn t2_definition(f: &FockCoeffs2, sign: SignChoice, nodes: usize) -> Result<FockCoeffs1> {
    let nu = f.nu();
    let (mm, nn) = f.truncation();
    let h = b2_inverse(f);
    let rule = complex_gauss_rule(nodes, nu)?;
    let p = proj_fock1_samples(|xi| h.eval(xi.re, xi.im), nu, mm + nn, &rule)?;
    gamma_dilation(sign.theta(), &p)
}

/// `max |B1(F~(B1^{-1} f)) - Gamma_{∓i} f|` on coefficients, i.e. the
/// intertwining `F~ ∘ B1^{-1} = B1^{-1} ∘ Gamma_{∓i}`.
pub fn intertwining_residual(f: &FockCoeffs1, sign: SignChoice) -> f64 {
    let lhs = b1_forward(&fourier_rescaled(&b1_inverse(f), sign));
    lhs.max_abs_diff(&f.dilate(sign.theta()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::factorial;
    use crate::numerics::{c64, gauss_hermite_rule, I, ONE};
    use crate::spaces::hermite_eval;

    fn fock1(nu: f64, n: usize) -> FockCoeffs1 {
        FockCoeffs1::new(
            nu,
            (0..=n)
                .map(|m| c64((0.7 * m as f64).cos(), 0.3 - 0.05 * m as f64) / factorial(m).sqrt())
                .collect(),
        )
        .unwrap()
    }

    fn fock2(nu: f64, n: usize) -> FockCoeffs2 {
        let g = Grid::from_fn(n + 1, n + 1, |m, k| {
            if m + k <= n {
                c64(0.2 + 0.1 * m as f64, -0.3 * k as f64) / factorial(m + k).sqrt()
            } else {
                ZERO
            }
        });
        FockCoeffs2::new(nu, g).unwrap()
    }

    #[test]
    fn fourier_eigenvalues() {
        let nu = 1.3;
        let h1 = HermiteCoeffs::basis(nu, 1, 1).unwrap();
        assert_eq!(fourier_rescaled(&h1, SignChoice::Minus).coeff(1), -I);
        let h0 = HermiteCoeffs::basis(nu, 0, 3).unwrap();
        assert_eq!(fourier_rescaled(&h0, SignChoice::Plus).coeff(0), ONE);
        let f = HermiteCoeffs::new(nu, (0..9).map(|m| c64(m as f64, 1.0)).collect()).unwrap();
        let mut g = f.clone();
        for _ in 0..4 {
            g = fourier_rescaled(&g, SignChoice::Minus);
        }
        assert_eq!(g, f);
        let sq = fourier_rescaled(&fourier_rescaled(&f, SignChoice::Plus), SignChoice::Plus);
        for m in 0..9 {
            assert_eq!(
                sq.coeff(m),
                f.coeff(m) * if m % 2 == 0 { 1.0 } else { -1.0 }
            );
        }
        assert_eq!(
            fourier_rescaled(&f, SignChoice::Minus).norm_sq(),
            f.norm_sq()
        );
    }

    #[test]
    fn fourier_quadrature_matches_eigenvalues() {
        for &nu in &[0.5, 1.0, 2.0] {
            let u = gauss_hermite_rule(96, 0.5 * nu).unwrap();
            let x = gauss_hermite_rule(32, nu).unwrap();
            for sign in [SignChoice::Minus, SignChoice::Plus] {
                let f = b1_inverse(&fock1(nu, 12));
                let q = fourier_rescaled_quad_coeffs(&f, sign, &u, &x).unwrap();
                let e = fourier_rescaled(&f, sign);
                let scale = e.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
                assert!(
                    q.max_abs_diff(&e) < 1e-10 * scale,
                    "nu={nu} {sign}: {}",
                    q.max_abs_diff(&e)
                );
            }
        }
        let nu = 1.0;
        let u = gauss_hermite_rule(96, 0.5 * nu).unwrap();
        assert!(fourier_rescaled_quad(
            |_| ONE,
            nu,
            SignChoice::Minus,
            &gauss_hermite_rule(8, nu).unwrap(),
            0.0
        )
        .is_err());
        let h1 = fourier_rescaled_quad(
            |x| c64(hermite_eval(1, nu, x), 0.0),
            nu,
            SignChoice::Minus,
            &u,
            0.4,
        )
        .unwrap();
        assert!((h1 + I * hermite_eval(1, nu, 0.4)).norm() < 1e-13);
    }

    #[test]
    fn dilation_examples() {
        let f = fock1(1.0, 5);
        assert_eq!(gamma_dilation(ONE, &f).unwrap(), f);
        let g = gamma_dilation(-ONE, &gamma_dilation(-ONE, &f).unwrap()).unwrap();
        assert_eq!(g, f);
        let e2 = FockCoeffs1::basis(1.0, 2, 2).unwrap();
        assert!((gamma_dilation(I, &e2).unwrap().coeff(2) + ONE).norm() < 1e-15);
        assert!(gamma_dilation(c64(1.1, 0.0), &f).is_err());
        let f2 = fock2(1.0, 3);
        let d = gamma_dilation(I, &f2).unwrap();
        assert!((d.coeff(1, 2) - f2.coeff(1, 2) * -I).norm() < 1e-15);
    }

    #[test]
    fn t1_examples() {
        let nu = 2.0;
        let k = (nu / PI).sqrt();
        let e0 = FockCoeffs1::basis(nu, 0, 0).unwrap();
        assert!((t1_transform(&e0, SignChoice::Plus).coeff(0) - c64(k, 0.0)).norm() < 1e-15);
        let e1 = FockCoeffs1::basis(nu, 1, 1).unwrap();
        assert!(
            (t1_transform(&e1, SignChoice::Minus).coeff(1) - c64(0.0, -k * FRAC_1_SQRT_2)).norm()
                < 1e-15
        );
    }

    #[test]
    fn closed_forms_match_definitions() {
        for &nu in &[0.5, 1.0, 2.0] {
            let u = gauss_hermite_rule(96, 0.5 * nu).unwrap();
            let x = gauss_hermite_rule(32, nu).unwrap();
            for sign in [SignChoice::Minus, SignChoice::Plus] {
                let f = fock1(nu, 12);
                let d = t1_definition(&f, sign, &u, &x).unwrap();
                assert!(
                    d.max_abs_diff(&t1_transform(&f, sign)) < 1e-10,
                    "t1 nu={nu} {sign}"
                );
                let f2 = fock2(nu, 12);
                let d = t2_definition(&f2, sign, 32).unwrap();
                assert!(
                    d.max_abs_diff(&t2_transform(&f2, sign)) < 1e-10,
                    "t2 nu={nu} {sign}"
                );
                assert!(intertwining_residual(&f, sign) < 1e-13);
            }
        }
    }

    #[test]
    fn composition_identities() {
        let e00 = FockCoeffs2::basis(0.5, 0, 0, 0, 0).unwrap();
        assert!(
            (t2_transform(&e00, SignChoice::Minus).coeff(0) - c64((PI / 0.5).sqrt(), 0.0)).norm()
                < 1e-15
        );
        for &nu in &[0.5, 1.0, 2.0] {
            let f = fock1(nu, 12);
            let parity = f.dilate(-ONE);
            for sign in [SignChoice::Minus, SignChoice::Plus] {
                let a = crate::spaces::a_subspace_embed(&t1_transform(&f, sign.flip()));
                assert!(t2_transform(&a, sign).max_abs_diff(&f) < 1e-12);
                let b = crate::spaces::a_subspace_embed(&t1_transform(&f, sign));
                assert!(t2_transform(&b, sign).max_abs_diff(&parity) < 1e-12);
            }
        }
    }
}
