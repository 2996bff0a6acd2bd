//! `A^{2,nu}(C^2)`: the kernel of `D = ∂_z + i ∂_w` inside `F^{2,nu}(C^2)`,
//! with orthogonal basis `(z + i w)^m`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::fock::{horner, same_nu, FockCoeffs2};
use super::grid::Grid;
use crate::error::{check_nu, invalid, Error, Result};
use crate::numerics::special::{binomial, factorial_over_power};
use crate::numerics::sum::{sum_complex, sum_f64};
use crate::numerics::{i_pow, I, ZERO};

/// `‖(z + i w)^k‖^2 = 2^k k! pi^2 / nu^{k+2}`.
pub fn a_basis_norm_sq(k: usize, nu: f64) -> f64 {
    (PI / nu).powi(2) * 2f64.powi(k as i32) * factorial_over_power(k, nu)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ASubspaceCoeffs {
    nu: f64,
    coeffs: Vec<Complex64>,
}

impl ASubspaceCoeffs {
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

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        horner(&self.coeffs, z + I * w)
    }

    pub fn weighted_sq(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(m, b)| b.norm_sqr() * a_basis_norm_sq(m, self.nu))
            .collect()
    }

    pub fn norm_sq(&self) -> f64 {
        sum_f64(self.weighted_sq())
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        same_nu(self.nu, other.nu)?;
        Ok(sum_complex(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .enumerate()
                .map(|(m, (a, b))| a * b.conj() * a_basis_norm_sq(m, self.nu)),
        ))
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

/// Expands `Σ b_m (z + i w)^m` into monomials:
/// `a_{m-j, j} = b_m binom(m, j) i^j`.
pub fn a_subspace_embed(b: &ASubspaceCoeffs) -> FockCoeffs2 {
    let n = b.truncation();
    let mut g = Grid::zeros(n + 1, n + 1);
    for (m, &bm) in b.coeffs.iter().enumerate() {
        for j in 0..=m {
            g.set(m - j, j, bm * i_pow(j) * binomial(m, j));
        }
    }
    FockCoeffs2::new(b.nu, g).expect("validated on construction")
}

/// `(DF)_{m,n} = (m+1) a_{m+1,n} + i (n+1) a_{m,n+1}`, output truncation
/// `(M-1, N-1)` (clamped at zero).
pub fn dzw_apply(f: &FockCoeffs2) -> FockCoeffs2 {
    let (mm, nn) = f.truncation();
    let a = f.coeffs();
    let g = Grid::from_fn(mm.max(1), nn.max(1), |m, n| {
        a.get(m + 1, n) * (m as f64 + 1.0) + I * a.get(m, n + 1) * (n as f64 + 1.0)
    });
    FockCoeffs2::new(f.nu(), g).expect("non-empty grid")
}

/// Recovers `b` from an element of `ker D`. Each `b_k` is read off the
/// first row (`b_k = a_{k,0}`) while `k ≤ M`, and from the last row
/// otherwise. The result is re-embedded and compared against the input.
pub fn a_subspace_extract(f: &FockCoeffs2, tol: f64) -> Result<ASubspaceCoeffs> {
    let (mm, nn) = f.truncation();
    let a = f.coeffs();
    let mut b: Vec<Complex64> = (0..=mm + nn)
        .map(|k| {
            if k <= mm {
                a.get(k, 0)
            } else {
                let j = k - mm;
                a.get(mm, j) / (i_pow(j) * binomial(k, j))
            }
        })
        .collect();
    let keep = mm.max(nn) + 1;
    while b.len() > keep && b.last() == Some(&ZERO) {
        b.pop();
    }
    let out = ASubspaceCoeffs::new(f.nu(), b)?;
    let residual = dzw_apply(f)
        .coeffs()
        .max_abs()
        .max(a_subspace_embed(&out).max_abs_diff(f));
    if residual > tol {
        return Err(Error::NotInSubspace { residual });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c64, complex_gauss_rule, ONE};

    #[test]
    fn embed_first_degree() {
        let b = ASubspaceCoeffs::basis(1.0, 1, 1).unwrap();
        let f = a_subspace_embed(&b);
        assert_eq!(f.coeff(1, 0), ONE);
        assert_eq!(f.coeff(0, 1), I);
        assert_eq!(f.coeff(0, 0), ZERO);
    }

    #[test]
    fn basis_is_annihilated() {
        for m in 0..=16 {
            let f = a_subspace_embed(&ASubspaceCoeffs::basis(1.5, m, 16).unwrap());
            assert!(
                dzw_apply(&f).coeffs().max_abs() <= 1e-13 * f.coeffs().max_abs(),
                "m={m}"
            );
        }
    }

    #[test]
    fn derivative_of_coordinates() {
        let z = FockCoeffs2::basis(1.0, 1, 0, 1, 1).unwrap();
        let w = FockCoeffs2::basis(1.0, 0, 1, 1, 1).unwrap();
        let dz = dzw_apply(&z);
        let dw = dzw_apply(&w);
        assert_eq!(dz.truncation(), (0, 0));
        assert_eq!(dz.coeff(0, 0), ONE);
        assert_eq!(dw.coeff(0, 0), I);
    }

    #[test]
    fn extract_round_trip() {
        for n in [0usize, 1, 5, 12] {
            let b: Vec<Complex64> = (0..=n)
                .map(|m| c64(1.0 / (m as f64 + 1.0), (m as f64).sin()))
                .collect();
            let b = ASubspaceCoeffs::new(0.7, b).unwrap();
            let back = a_subspace_extract(&a_subspace_embed(&b), 1e-10).unwrap();
            assert_eq!(back.truncation(), n);
            assert!(back.max_abs_diff(&b) < 1e-13);
        }
    }

    #[test]
    fn extract_rejects_outside_kernel() {
        let z = FockCoeffs2::basis(1.0, 1, 0, 1, 1).unwrap();
        match a_subspace_extract(&z, 1e-10) {
            Err(Error::NotInSubspace { residual }) => assert!((residual - 1.0).abs() < 1e-15),
            other => panic!("expected NotInSubspace, got {other:?}"),
        }
    }

    #[test]
    fn basis_norms_by_quadrature() {
        for &nu in &[0.5, 1.0, 2.0] {
            let rule = complex_gauss_rule(24, nu).unwrap();
            let elems: Vec<FockCoeffs2> = (0..=8)
                .map(|m| a_subspace_embed(&ASubspaceCoeffs::basis(nu, m, 8).unwrap()))
                .collect();
            for (m, em) in elems.iter().enumerate() {
                for (n, en) in elems.iter().enumerate() {
                    let g = em.quadrature_inner(en, &rule).unwrap();
                    let d = a_basis_norm_sq(m.max(n), nu);
                    if m == n {
                        assert!(
                            ((g.re - d) / d).abs() < 1e-10 && g.im.abs() < 1e-10 * d,
                            "m={m}"
                        );
                    } else {
                        assert!(g.norm() < 1e-10 * d, "m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn coefficient_norm_matches_embedded_norm() {
        let b =
            ASubspaceCoeffs::new(1.2, vec![c64(1.0, 0.5), c64(-0.3, 0.0), c64(0.0, 0.25)]).unwrap();
        let direct = b.norm_sq();
        let embedded = a_subspace_embed(&b).norm_sq();
        assert!(((direct - embedded) / direct).abs() < 1e-13);
    }
}
