//! Holomorphic Fock spaces `F^{2,nu}(C)` and `F^{2,nu}(C^2)` over the
//! monomial bases `xi^m` and `z^m w^n`, with `‖xi^m‖^2 = pi m! / nu^{m+1}`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::grid::Grid;
use super::hermite::ensure_rate;
use crate::error::{check_nu, invalid, Error, Result};
use crate::numerics::special::factorial_over_power;
use crate::numerics::sum::{sum_complex, sum_f64, CompensatedSum, ComplexSum};
use crate::numerics::{PlanarRule, ZERO};

/// `‖e_m‖^2 = pi m! / nu^{m+1}` for `e_m(xi) = xi^m`.
pub fn fock1_norm_sq(m: usize, nu: f64) -> f64 {
    PI / nu * factorial_over_power(m, nu)
}

/// `K_1(xi, zeta) = (nu/pi) e^{nu xi conj(zeta)}`.
pub fn kernel_k1(xi: Complex64, zeta: Complex64, nu: f64) -> Complex64 {
    (xi * zeta.conj() * nu).exp() * (nu / PI)
}

/// `K_2((u, v), (z, w)) = (nu/pi)^2 e^{nu (u conj(z) + v conj(w))}`.
pub fn kernel_k2(uv: (Complex64, Complex64), zw: (Complex64, Complex64), nu: f64) -> Complex64 {
    ((uv.0 * zw.0.conj() + uv.1 * zw.1.conj()) * nu).exp() * (nu / PI).powi(2)
}

/// Horner evaluation of `Σ_m a_m xi^m`.
pub(crate) fn horner(coeffs: &[Complex64], xi: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(ZERO, |acc, &c| acc * xi + c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockCoeffs1 {
    nu: f64,
    coeffs: Vec<Complex64>,
}

impl FockCoeffs1 {
    pub fn new(nu: f64, coeffs: Vec<Complex64>) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.is_empty() {
            return Err(invalid("coefficient vector must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    pub fn basis(nu: f64, m: usize, truncation: usize) -> Result<Self> {
        let mut c = vec![ZERO; truncation.max(m) + 1];
        c[m] = Complex64::new(1.0, 0.0);
        Self::new(nu, c)
    }

    /// Truncation of the kernel `K_1(·, zeta)`: coefficients `(nu/pi) nu^m conj(zeta)^m / m!`.
    pub fn kernel_at(zeta: Complex64, nu: f64, truncation: usize) -> Result<Self> {
        let mut c = Vec::with_capacity(truncation + 1);
        let mut term = Complex64::new(nu / PI, 0.0);
        for m in 0..=truncation {
            c.push(term);
            term = term * zeta.conj() * (nu / (m as f64 + 1.0));
        }
        Self::new(nu, c)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> Complex64 {
        self.coeffs.get(m).copied().unwrap_or(ZERO)
    }

    pub fn eval(&self, xi: Complex64) -> Complex64 {
        horner(&self.coeffs, xi)
    }

    pub fn weighted_sq(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(m, a)| a.norm_sqr() * fock1_norm_sq(m, self.nu))
            .collect()
    }

    pub fn norm_sq(&self) -> f64 {
        sum_f64(self.weighted_sq())
    }

    /// `<self, other> = Σ a_m conj(b_m) ‖e_m‖^2`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        same_nu(self.nu, other.nu)?;
        Ok(sum_complex(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .enumerate()
                .map(|(m, (a, b))| a * b.conj() * fock1_norm_sq(m, self.nu)),
        ))
    }

    pub fn quadrature_norm_sq(&self, rule: &PlanarRule) -> Result<f64> {
        Ok(rule
            .integrate_against(self.nu, |xi| Complex64::new(self.eval(xi).norm_sqr(), 0.0))
            .re)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|m| (self.coeff(m) - other.coeff(m)).norm())
            .fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Self {
        Self {
            nu: self.nu,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &a)| f(m, a))
                .collect(),
        }
    }
}

/// `(nu/pi) ∫ f(zeta) e^{nu xi conj(zeta)} e^{-nu |zeta|^2} dλ(zeta)`, the
/// orthogonal projection onto `F^{2,nu}(C)` evaluated at `xi`.
pub fn proj_fock1_eval(
    f: impl Fn(Complex64) -> Complex64,
    xi: Complex64,
    nu: f64,
    rule: &PlanarRule,
) -> Complex64 {
    rule.integrate_against(nu, |zeta| f(zeta) * (xi * zeta.conj() * nu).exp()) * (nu / PI)
}

/// Projection of planar samples onto `F^{2,nu}(C)` in coefficient form,
/// `a_m = <f, e_m> / ‖e_m‖^2` by planar quadrature.
pub fn proj_fock1_samples(
    f: impl Fn(Complex64) -> Complex64,
    nu: f64,
    truncation: usize,
    rule: &PlanarRule,
) -> Result<FockCoeffs1> {
    check_nu(nu)?;
    let pts = rule.points_against(nu);
    let vals: Vec<Complex64> = pts.iter().map(|&(z, w)| f(z) * w).collect();
    let coeffs = (0..=truncation)
        .map(|m| {
            let s = sum_complex(
                pts.iter()
                    .zip(&vals)
                    .map(|(&(z, _), &v)| v * z.conj().powi(m as i32)),
            );
            s / fock1_norm_sq(m, nu)
        })
        .collect();
    FockCoeffs1::new(nu, coeffs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockCoeffs2 {
    nu: f64,
    coeffs: Grid,
}

impl FockCoeffs2 {
    pub fn new(nu: f64, coeffs: Grid) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.rows() == 0 || coeffs.cols() == 0 {
            return Err(invalid("coefficient grid must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    pub fn zeros(nu: f64, max_m: usize, max_n: usize) -> Result<Self> {
        Self::new(nu, Grid::zeros(max_m + 1, max_n + 1))
    }

    /// `z^m w^n` in a grid with max indices `(max_m, max_n)`.
    pub fn basis(nu: f64, m: usize, n: usize, max_m: usize, max_n: usize) -> Result<Self> {
        let mut g = Grid::zeros(max_m.max(m) + 1, max_n.max(n) + 1);
        g.set(m, n, Complex64::new(1.0, 0.0));
        Self::new(nu, g)
    }

    /// `K_2(·, (z, w))` truncated at total degree `degree`:
    /// coefficients `(nu/pi)^2 nu^{m+n} conj(z)^m conj(w)^n / (m! n!)`.
    pub fn kernel_at(zw: (Complex64, Complex64), nu: f64, degree: usize) -> Result<Self> {
        let k1z = FockCoeffs1::kernel_at(zw.0, nu, degree)?;
        let k1w = FockCoeffs1::kernel_at(zw.1, nu, degree)?;
        let g = Grid::from_fn(degree + 1, degree + 1, |m, n| {
            if m + n <= degree {
                k1z.coeff(m) * k1w.coeff(n)
            } else {
                ZERO
            }
        });
        Self::new(nu, g)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &Grid {
        &self.coeffs
    }

    /// Max indices `(M, N)`.
    pub fn truncation(&self) -> (usize, usize) {
        (self.coeffs.rows() - 1, self.coeffs.cols() - 1)
    }

    pub fn coeff(&self, m: usize, n: usize) -> Complex64 {
        self.coeffs.get(m, n)
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let rows: Vec<Complex64> = (0..self.coeffs.rows())
            .map(|m| horner(&row_of(&self.coeffs, m), w))
            .collect();
        horner(&rows, z)
    }

    pub fn norm_sq(&self) -> f64 {
        let nu = self.nu;
        sum_f64(
            self.coeffs
                .entries()
                .map(|(m, n, a)| a.norm_sqr() * fock1_norm_sq(m, nu) * fock1_norm_sq(n, nu)),
        )
    }

    /// `∫_{C^2} F conj(G) e^{-nu(|z|^2+|w|^2)}` by the tensor product of
    /// `rule` with itself. The inner `w`-integral of each monomial pair is
    /// gathered into a Gram matrix once, so the cost is linear in the
    /// number of planar nodes rather than quadratic.
    pub fn quadrature_inner(&self, other: &Self, rule: &PlanarRule) -> Result<Complex64> {
        same_nu(self.nu, other.nu)?;
        let pts = rule.points_against(self.nu);
        let nf = self.coeffs.cols();
        let ng = other.coeffs.cols();
        // gram[n][n'] = Σ_w ω w^n conj(w)^{n'}
        let mut gram = vec![vec![ComplexSum::new(); ng]; nf];
        for &(w, omega) in &pts {
            let wp: Vec<Complex64> = powers(w, nf.max(ng));
            for n in 0..nf {
                for n2 in 0..ng {
                    gram[n][n2].add(wp[n] * wp[n2].conj() * omega);
                }
            }
        }
        let gram: Vec<Vec<Complex64>> = gram
            .iter()
            .map(|r| r.iter().map(|s| s.value()).collect())
            .collect();
        let mut acc = ComplexSum::new();
        for &(z, omega) in &pts {
            let fz: Vec<Complex64> = (0..nf).map(|n| column_at(&self.coeffs, n, z)).collect();
            let gz: Vec<Complex64> = (0..ng).map(|n| column_at(&other.coeffs, n, z)).collect();
            let mut s = ZERO;
            for n in 0..nf {
                for n2 in 0..ng {
                    s += fz[n] * gz[n2].conj() * gram[n][n2];
                }
            }
            acc.add(s * omega);
        }
        Ok(acc.value())
    }

    pub fn quadrature_norm_sq(&self, rule: &PlanarRule) -> Result<f64> {
        Ok(self.quadrature_inner(self, rule)?.re)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let r = self.coeffs.rows().max(other.coeffs.rows());
        let c = self.coeffs.cols().max(other.coeffs.cols());
        let mut worst: f64 = 0.0;
        for m in 0..r {
            for n in 0..c {
                worst = worst.max((self.coeff(m, n) - other.coeff(m, n)).norm());
            }
        }
        worst
    }
}

fn w_gram(pts: &[(Complex64, f64)], nc: usize) -> Vec<Vec<Complex64>> {
    let mut wg = vec![vec![ComplexSum::new(); nc]; nc];
    for &(w, omega) in pts {
        let wp = powers(w, nc);
        for n in 0..nc {
            for n2 in 0..nc {
                wg[n][n2].add(wp[n] * wp[n2].conj() * omega);
            }
        }
    }
    wg.iter()
        .map(|r| r.iter().map(|s| s.value()).collect())
        .collect()
}

/// `[‖F_j‖^2]` by the tensor rule, sharing the `w`-Gram across the family.
pub fn quadrature_norms_sq(fs: &[FockCoeffs2], rule: &PlanarRule) -> Result<Vec<f64>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let nu = first.nu;
    for f in fs {
        same_nu(nu, f.nu)?;
    }
    let nc = fs.iter().map(|f| f.coeffs.cols()).max().unwrap_or(1);
    let pts = rule.points_against(nu);
    let wg = w_gram(&pts, nc);
    Ok(fs
        .iter()
        .map(|f| {
            let mut acc = CompensatedSum::new();
            for &(z, omega) in &pts {
                let fz: Vec<Complex64> = (0..nc)
                    .map(|n| {
                        if n < f.coeffs.cols() {
                            column_at(&f.coeffs, n, z)
                        } else {
                            ZERO
                        }
                    })
                    .collect();
                let mut s = ZERO;
                for n2 in 0..nc {
                    let h: Complex64 = (0..nc).map(|n| fz[n] * wg[n][n2]).sum();
                    s += h * fz[n2].conj();
                }
                acc.add(s.re * omega);
            }
            acc.value()
        })
        .collect())
}

/// Gram matrix `[<F_j, F_k>]` of a family by the same tensor rule as
/// [`FockCoeffs2::quadrature_inner`], sharing one `w`-Gram and one pass
/// over the `z` nodes.
pub fn quadrature_gram(fs: &[FockCoeffs2], rule: &PlanarRule) -> Result<Vec<Vec<Complex64>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let nu = first.nu;
    for f in fs {
        same_nu(nu, f.nu)?;
    }
    let nc = fs.iter().map(|f| f.coeffs.cols()).max().unwrap_or(1);
    let pts = rule.points_against(nu);
    let wg = w_gram(&pts, nc);
    let k = fs.len();
    let mut acc = vec![vec![ComplexSum::new(); k]; k];
    for &(z, omega) in &pts {
        let fz: Vec<Vec<Complex64>> = fs
            .iter()
            .map(|f| {
                (0..nc)
                    .map(|n| {
                        if n < f.coeffs.cols() {
                            column_at(&f.coeffs, n, z)
                        } else {
                            ZERO
                        }
                    })
                    .collect()
            })
            .collect();
        // h[j][n2] = Σ_n F_j,n(z) wg[n][n2]
        let h: Vec<Vec<Complex64>> = fz
            .iter()
            .map(|row| {
                (0..nc)
                    .map(|n2| (0..nc).map(|n| row[n] * wg[n][n2]).sum())
                    .collect()
            })
            .collect();
        for j in 0..k {
            for m in 0..k {
                let s: Complex64 = (0..nc).map(|n2| h[j][n2] * fz[m][n2].conj()).sum();
                acc[j][m].add(s * omega);
            }
        }
    }
    Ok(acc
        .iter()
        .map(|r| r.iter().map(|s| s.value()).collect())
        .collect())
}

/// `<F, G> = Σ a_{m,n} conj(b_{m,n}) ‖e_m‖^2 ‖e_n‖^2`.
pub fn fock2_inner(f: &FockCoeffs2, g: &FockCoeffs2) -> Result<Complex64> {
    same_nu(f.nu, g.nu)?;
    let nu = f.nu;
    Ok(sum_complex(f.coeffs.entries().map(|(m, n, a)| {
        a * g.coeff(m, n).conj() * fock1_norm_sq(m, nu) * fock1_norm_sq(n, nu)
    })))
}

fn row_of(g: &Grid, m: usize) -> Vec<Complex64> {
    (0..g.cols()).map(|n| g.get(m, n)).collect()
}

/// `Σ_m a_{m,n} z^m` for fixed `n`.
fn column_at(g: &Grid, n: usize, z: Complex64) -> Complex64 {
    let col: Vec<Complex64> = (0..g.rows()).map(|m| g.get(m, n)).collect();
    horner(&col, z)
}

pub(crate) fn powers(z: Complex64, count: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(count);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..count {
        out.push(p);
        p *= z;
    }
    out
}

pub(crate) fn same_nu(a: f64, b: f64) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::NuMismatch(a, b))
    }
}

#[allow(dead_code)]
pub(crate) fn ensure_planar_rate(rule: &PlanarRule, nu: f64) -> Result<()> {
    ensure_rate(rule.re_axis().weight_exponent(), nu)?;
    ensure_rate(rule.im_axis().weight_exponent(), nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c64, complex_gauss_rule};

    #[test]
    fn basis_norms() {
        assert!((fock1_norm_sq(0, 2.0) - PI / 2.0).abs() < 1e-15);
        let rule = complex_gauss_rule(16, 1.0).unwrap();
        let e2 = FockCoeffs1::basis(1.0, 2, 2).unwrap();
        let q = e2.quadrature_norm_sq(&rule).unwrap();
        assert!((q - 2.0 * PI).abs() < 1e-12);
        assert!((e2.inner(&e2).unwrap().re - 2.0 * PI).abs() < 1e-13);
        let e3 = FockCoeffs1::basis(1.0, 3, 3).unwrap();
        assert_eq!(e2.inner(&e3).unwrap(), ZERO);
    }

    #[test]
    fn quadrature_norms_match_coefficient_norms() {
        for &nu in &[0.5, 1.0, 2.0] {
            let rule = complex_gauss_rule(40, nu).unwrap();
            for m in 0..=16 {
                let e = FockCoeffs1::basis(nu, m, m).unwrap();
                let q = e.quadrature_norm_sq(&rule).unwrap();
                let c = fock1_norm_sq(m, nu);
                assert!(((q - c) / c).abs() < 1e-9, "m={m} nu={nu}");
            }
        }
    }

    #[test]
    fn inner_product_conventions() {
        let f = FockCoeffs1::new(1.0, vec![c64(0.0, 1.0)]).unwrap();
        let g = FockCoeffs1::new(1.0, vec![c64(1.0, 0.0)]).unwrap();
        // antilinear in the second slot: <i, 1> = i pi, <1, i> = -i pi
        assert!((f.inner(&g).unwrap() - c64(0.0, PI)).norm() < 1e-15);
        assert!((g.inner(&f).unwrap() - c64(0.0, -PI)).norm() < 1e-15);
        let h = FockCoeffs2::zeros(2.0, 1, 1).unwrap();
        let k = FockCoeffs2::zeros(1.0, 1, 1).unwrap();
        assert!(matches!(fock2_inner(&h, &k), Err(Error::NuMismatch(_, _))));
    }

    #[test]
    fn kernels_at_origin() {
        let nu = 1.7;
        assert!((kernel_k1(c64(0.3, -2.0), ZERO, nu) - c64(nu / PI, 0.0)).norm() < 1e-15);
        let k2 = kernel_k2((ZERO, ZERO), (c64(1.0, 2.0), c64(-0.5, 0.1)), nu);
        assert!((k2 - c64((nu / PI).powi(2), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn kernel_reproduces_e2() {
        let nu = 1.0;
        let rule = complex_gauss_rule(64, nu).unwrap();
        let xi = c64(0.6, -0.4);
        // f(xi) = ∫ f(zeta) conj(K_1(zeta, xi)) dμ
        let v = rule.integrate_against(nu, |zeta| zeta * zeta * kernel_k1(zeta, xi, nu).conj());
        assert!(((v - xi * xi).norm() / (xi * xi).norm()) < 1e-8);
    }

    #[test]
    fn projection_examples() {
        let nu = 1.3;
        let rule = complex_gauss_rule(48, nu).unwrap();
        let xi = c64(0.4, 0.9);
        let p_conj = proj_fock1_eval(|z| z.conj(), xi, nu, &rule);
        assert!(p_conj.norm() < 1e-12);
        let p_abs = proj_fock1_eval(|z| c64(z.norm_sqr(), 0.0), xi, nu, &rule);
        assert!((p_abs - c64(1.0 / nu, 0.0)).norm() < 1e-12);
        let p_e3 = proj_fock1_eval(|z| z.powi(3), xi, nu, &rule);
        assert!((p_e3 - xi.powi(3)).norm() < 1e-12);
        let coeffs = proj_fock1_samples(|z| c64(z.norm_sqr(), 0.0) + z * z, nu, 6, &rule).unwrap();
        assert!((coeffs.coeff(0) - c64(1.0 / nu, 0.0)).norm() < 1e-12);
        assert!((coeffs.coeff(2) - c64(1.0, 0.0)).norm() < 1e-12);
        assert!(coeffs.coeff(1).norm() < 1e-12);
    }

    #[test]
    fn fock2_quadrature_matches_coefficients() {
        let nu = 0.8;
        let g = Grid::from_fn(5, 4, |m, n| c64(1.0 / (1.0 + m as f64), n as f64 - 1.5));
        let f = FockCoeffs2::new(nu, g).unwrap();
        let rule = complex_gauss_rule(12, nu).unwrap();
        let q = f.quadrature_norm_sq(&rule).unwrap();
        assert!(((q - f.norm_sq()) / f.norm_sq()).abs() < 1e-12);
        let h = FockCoeffs2::basis(nu, 1, 2, 4, 3).unwrap();
        let qi = f.quadrature_inner(&h, &rule).unwrap();
        let ci = fock2_inner(&f, &h).unwrap();
        assert!((qi - ci).norm() < 1e-12 * ci.norm());
    }

    #[test]
    fn two_variable_evaluation() {
        let f = FockCoeffs2::basis(1.0, 2, 1, 3, 3).unwrap();
        let (z, w) = (c64(0.5, 1.0), c64(-1.0, 0.25));
        assert!((f.eval(z, w) - z * z * w).norm() < 1e-15);
    }

    #[test]
    fn batched_gram_matches_pairwise() {
        let nu = 0.8;
        let rule = complex_gauss_rule(12, nu).unwrap();
        let fs: Vec<FockCoeffs2> = (0..3)
            .map(|k| {
                let g = Grid::from_fn(3, 2 + k % 2, |m, n| {
                    c64(1.0 + (m * n + k) as f64, 0.3 * m as f64 - 0.1 * k as f64)
                });
                FockCoeffs2::new(nu, g).unwrap()
            })
            .collect();
        let gram = quadrature_gram(&fs, &rule).unwrap();
        for j in 0..3 {
            for m in 0..3 {
                let want = fs[j].quadrature_inner(&fs[m], &rule).unwrap();
                assert!((gram[j][m] - want).norm() < 1e-10 * want.norm().max(1.0));
            }
        }
    }

    #[test]
    fn batched_norms_match() {
        let nu = 1.7;
        let rule = complex_gauss_rule(10, nu).unwrap();
        let fs: Vec<FockCoeffs2> = (0..2)
            .map(|k| {
                FockCoeffs2::new(
                    nu,
                    Grid::from_fn(2 + k, 3, |m, n| c64(m as f64 - 0.5, (n + k) as f64)),
                )
                .unwrap()
            })
            .collect();
        let norms = quadrature_norms_sq(&fs, &rule).unwrap();
        for (f, n) in fs.iter().zip(&norms) {
            let want = f.quadrature_norm_sq(&rule).unwrap();
            assert!((n - want).abs() < 1e-12 * want);
        }
    }
}
