//! `G = (nu/pi)^{1/2} C_{psi1} ∘ B1` and its left inverse
//! `R = (pi/nu)^{1/2} B1^{-1} ∘ C_{psi2}`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::c_d;
use super::segal::{b1_forward, b1_forward_quad, b1_inverse, b2_forward_quad, line_rule_for};
use crate::error::{check_nu, invalid, Result};
use crate::exec::{map_slice, Parallelism};
use crate::numerics::sum::ComplexSum;
use crate::numerics::{neg_i_pow, PlanarRule, QuadratureRule, I, ZERO};
use crate::spaces::{ASubspaceCoeffs, FockCoeffs1, FockCoeffs2, HermiteCoeffs};

/// `c_m -> c_1 nu^m c_m` on the basis `(z + i w)^m`.
pub fn g_transform(f: &HermiteCoeffs) -> ASubspaceCoeffs {
    let nu = f.nu();
    let c1 = c_d(1, nu);
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, &c)| c * (c1 * nu.powi(m as i32)))
        .collect();
    ASubspaceCoeffs::new(nu, c).expect("validated on construction")
}

/// `(nu/pi)^{1/2} (B1 f)((z + i w)/√2)`, evaluated through the `B1`
/// coefficients.
pub fn g_eval(f: &HermiteCoeffs, z: Complex64, w: Complex64) -> Complex64 {
    b1_forward(f).eval((z + I * w) * FRAC_1_SQRT_2) * (f.nu() / PI).sqrt()
}

/// `max |B2(B1 f)(z, w) - G f(z, w)|` over `grid`. The left side is pure
/// quadrature: `B1 f` is sampled by a one-dimensional rule at every node of
/// an isotropic planar rule, and `B2` integrates those samples. The right
/// side is the coefficient path.
pub fn g_factorization_residual(
    f: &HermiteCoeffs,
    grid: &[(Complex64, Complex64)],
    nodes: usize,
    mode: Parallelism,
) -> Result<f64> {
    let nu = f.nu();
    let line = crate::numerics::gauss_hermite_rule(nodes, nu)?;
    let plane = crate::numerics::complex_gauss_rule(nodes, nu)?;
    let b1 = b1_forward_quad(|x| f.eval(x), nu, &line)?;
    let b2 = b2_forward_quad(|x, y| b1.eval(Complex64::new(x, y)), nu, &plane, mode)?;
    let g = g_transform(f);
    let lhs = b2.eval_many(grid, mode);
    let rhs = map_slice(grid, mode, |&(z, w)| g.eval(z, w));
    Ok(lhs
        .iter()
        .zip(&rhs)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

/// `(C_{psi2} e_{m,n})(xi) = (-i)^n 2^{-(m+n)/2} xi^{m+n}`; output truncation `M + N`.
pub fn c_psi2(f: &FockCoeffs2) -> FockCoeffs1 {
    let (mm, nn) = f.truncation();
    let mut out = vec![ZERO; mm + nn + 1];
    for (m, n, a) in f.coeffs().entries() {
        out[m + n] += a * neg_i_pow(n) * FRAC_1_SQRT_2.powi((m + n) as i32);
    }
    FockCoeffs1::new(f.nu(), out).expect("validated on construction")
}

pub fn r_transform(f: &FockCoeffs2) -> HermiteCoeffs {
    let k = (PI / f.nu()).sqrt();
    b1_inverse(&c_psi2(f)).map(|_, c| c * k)
}

/// `∫_C F(xi/√2, -i xi/√2) e^{-nu conj(xi)^2/2 + √2 nu x conj(xi)} e^{-nu|xi|^2} dλ(xi)`
/// without prefactor.
pub fn r_transform_unscaled_quad(
    f: impl Fn(Complex64, Complex64) -> Complex64,
    nu: f64,
    rule: &PlanarRule,
    x: f64,
) -> Complex64 {
    let s = std::f64::consts::SQRT_2;
    rule.integrate_against(nu, |xi| {
        let xb = xi.conj();
        f(xi * FRAC_1_SQRT_2, -I * xi * FRAC_1_SQRT_2)
            * (xb * xb * (-0.5 * nu) + xb * (s * nu * x)).exp()
    })
}

/// Integral path of `R` with prefactor `(nu/pi)^{1/4}`.
pub fn r_transform_quad(
    f: impl Fn(Complex64, Complex64) -> Complex64,
    nu: f64,
    rule: &PlanarRule,
    x: f64,
) -> Complex64 {
    r_transform_unscaled_quad(f, nu, rule, x) * (nu / PI).powf(0.25)
}

/// Least-squares real prefactor `kappa` with `kappa U(x) ≈ f(x)` where `U`
/// is the unscaled integral of `G f`, over the sample points `xs`. Returns
/// `(kappa, max |kappa U - f|)`.
pub fn fit_r_prefactor(
    f: &HermiteCoeffs,
    rule: &PlanarRule,
    xs: &[f64],
    line: &QuadratureRule,
) -> Result<(f64, f64)> {
    let nu = f.nu();
    check_nu(nu)?;
    line_rule_for(nu, line)?;
    if xs.is_empty() {
        return Err(invalid("prefactor fit needs at least one sample point"));
    }
    let g = g_transform(f);
    let u: Vec<Complex64> = xs
        .iter()
        .map(|&x| r_transform_unscaled_quad(|z, w| g.eval(z, w), nu, rule, x))
        .collect();
    let t: Vec<Complex64> = xs.iter().map(|&x| f.eval(x)).collect();
    let mut num = ComplexSum::new();
    let mut den = 0.0;
    for (ui, ti) in u.iter().zip(&t) {
        num.add(ui.conj() * ti);
        den += ui.norm_sqr();
    }
    if den == 0.0 {
        return Err(invalid(
            "prefactor fit is degenerate: the integral vanishes at every sample",
        ));
    }
    let kappa = num.value().re / den;
    let resid = u
        .iter()
        .zip(&t)
        .map(|(ui, ti)| (ui * kappa - ti).norm())
        .fold(0.0, f64::max);
    Ok((kappa, resid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c64, gauss_hermite_rule, ONE};
    use crate::spaces::{a_subspace_embed, dzw_apply, Grid};
    use crate::transforms::segal::inverse_rule;

    fn sample(nu: f64, n: usize) -> HermiteCoeffs {
        let c = (0..=n)
            .map(|m| {
                c64((m as f64 * 0.7).cos(), (m as f64 * 1.3).sin())
                    / crate::numerics::special::factorial(m).sqrt()
            })
            .collect();
        HermiteCoeffs::new(nu, c).unwrap()
    }

    #[test]
    fn g_examples() {
        for &nu in &[0.5, 1.0, 2.0] {
            let g0 = g_transform(&HermiteCoeffs::basis(nu, 0, 4).unwrap());
            assert!((g0.coeff(0).re - (nu / PI).powf(0.75)).abs() < 1e-15);
            let f = sample(nu, 10);
            let (z, w) = (ONE, ONE);
            assert!((g_transform(&f).eval(z, w) - g_eval(&f, z, w)).norm() < 1e-12);
        }
        let g2 = g_transform(&HermiteCoeffs::basis(1.0, 2, 4).unwrap());
        assert!((g2.coeff(2).re - (1.0 / PI).powf(0.75)).abs() < 1e-15);
    }

    #[test]
    fn image_is_annihilated() {
        let f = sample(1.0, 16);
        let d = dzw_apply(&a_subspace_embed(&g_transform(&f)));
        assert!(d.coeffs().max_abs() < 1e-13);
    }

    #[test]
    fn left_inverse_on_coefficients() {
        for &nu in &[0.5, 1.0, 2.0] {
            let f = sample(nu, 16);
            let back = r_transform(&a_subspace_embed(&g_transform(&f)));
            assert!(back.max_abs_diff(&f) < 1e-10, "nu={nu}");
        }
    }

    #[test]
    fn c_psi2_is_linear_on_coordinates() {
        let z = FockCoeffs2::basis(1.0, 1, 0, 1, 1).unwrap();
        let w = FockCoeffs2::basis(1.0, 0, 1, 1, 1).unwrap();
        assert!((c_psi2(&z).coeff(1) - c64(FRAC_1_SQRT_2, 0.0)).norm() < 1e-16);
        assert!((c_psi2(&w).coeff(1) - c64(0.0, -FRAC_1_SQRT_2)).norm() < 1e-16);
        // z - i w -> (1/√2 - 1/√2) xi = 0; z + i w -> √2 xi
        let g = Grid::from_fn(2, 2, |m, n| match (m, n) {
            (1, 0) => ONE,
            (0, 1) => c64(0.0, -1.0),
            _ => ZERO,
        });
        assert!(c_psi2(&FockCoeffs2::new(1.0, g).unwrap()).coeff(1).norm() < 1e-16);
        let r = r_transform(&FockCoeffs2::basis(1.0, 0, 0, 0, 0).unwrap());
        assert!((r.coeff(0).re - PI.powf(0.75)).abs() < 1e-14);
    }

    #[test]
    fn r_quadrature_matches_coefficients() {
        for &nu in &[0.5, 1.0, 2.0] {
            let f = sample(nu, 8);
            let g = g_transform(&f);
            let rule = inverse_rule(96, nu).unwrap();
            for &x in &[-1.0, -0.3, 0.0, 0.8] {
                let q = r_transform_quad(|z, w| g.eval(z, w), nu, &rule, x);
                assert!(
                    (q - f.eval(x)).norm() < 1e-8 * f.eval(x).norm().max(1.0),
                    "nu={nu} x={x}"
                );
            }
        }
    }

    #[test]
    fn fitted_prefactor() {
        for &nu in &[0.5, 1.0, 2.0] {
            let f = sample(nu, 12);
            let rule = inverse_rule(96, nu).unwrap();
            let line = gauss_hermite_rule(8, nu).unwrap();
            let (kappa, resid) =
                fit_r_prefactor(&f, &rule, &[-1.0, -0.5, 0.0, 0.5, 1.0], &line).unwrap();
            let expect = (nu / PI).powf(0.25);
            assert!(
                ((kappa - expect) / expect).abs() < 1e-10,
                "nu={nu}: {kappa} vs {expect}"
            );
            assert!(resid < 1e-9);
        }
    }

    #[test]
    fn factorization_on_basis() {
        let grid = crate::transforms::default_grid_c2();
        for m in [0usize, 3, 8] {
            let f = HermiteCoeffs::basis(1.0, m, m).unwrap();
            let r = g_factorization_residual(&f, &grid, 96, Parallelism::Parallel).unwrap();
            assert!(r < 1e-8, "m={m}: {r}");
        }
        let zero = HermiteCoeffs::zeros(1.0, 4).unwrap();
        assert_eq!(
            g_factorization_residual(&zero, &grid, 32, Parallelism::Sequential).unwrap(),
            0.0
        );
    }
}
