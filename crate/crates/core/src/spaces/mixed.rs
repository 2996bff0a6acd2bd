//! Polynomials in `zeta` and `conj(zeta)`, their orthogonal projection onto
//! `F^{2,nu}(C)`, and planar polynomials rewritten in the Hermite tensor
//! basis of `L^{2,nu}(R^2)`.

use num_complex::Complex64;

use super::fock::FockCoeffs1;
use super::grid::Grid;
use super::hermite::{monomial_in_hermite, HermiteTensor};
use crate::error::{check_nu, invalid, Result};
use crate::numerics::special::{binomial, factorial};
use crate::numerics::{i_pow, ZERO};

/// `Σ c_{a,b} zeta^a conj(zeta)^b`, grid indexed `[a][b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedPoly {
    nu: f64,
    coeffs: Grid,
}

impl MixedPoly {
    pub fn new(nu: f64, coeffs: Grid) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.rows() == 0 || coeffs.cols() == 0 {
            return Err(invalid("coefficient grid must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    pub fn monomial(nu: f64, a: usize, b: usize) -> Result<Self> {
        let mut g = Grid::zeros(a + 1, b + 1);
        g.set(a, b, Complex64::new(1.0, 0.0));
        Self::new(nu, g)
    }

    pub fn from_fock1(f: &FockCoeffs1) -> Self {
        let g = Grid::from_fn(f.coeffs().len(), 1, |a, _| f.coeff(a));
        Self {
            nu: f.nu(),
            coeffs: g,
        }
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &Grid {
        &self.coeffs
    }

    pub fn eval(&self, zeta: Complex64) -> Complex64 {
        self.coeffs
            .entries()
            .map(|(a, b, c)| c * zeta.powi(a as i32) * zeta.conj().powi(b as i32))
            .sum()
    }

    /// Rewrites the polynomial in `x = Re zeta`, `y = Im zeta` and then in
    /// the tensor basis `H_m^nu(x) H_n^nu(y)`.
    pub fn to_hermite_tensor(&self) -> HermiteTensor {
        let deg = self.coeffs.rows() + self.coeffs.cols() - 2;
        // zeta^a conj(zeta)^b = (x + iy)^a (x - iy)^b
        let mut xy = Grid::zeros(deg + 1, deg + 1);
        for (a, b, c) in self.coeffs.entries() {
            if c == ZERO {
                continue;
            }
            for j in 0..=a {
                for l in 0..=b {
                    let coef = c * i_pow(j) * i_pow(l).conj() * (binomial(a, j) * binomial(b, l));
                    let (px, py) = (a - j + b - l, j + l);
                    xy.set(px, py, xy.get(px, py) + coef);
                }
            }
        }
        xy_poly_to_hermite_tensor(&xy, self.nu)
    }
}

/// `Σ c_{a,b} x^a y^b` in the basis `H_m^nu(x) H_n^nu(y)`.
pub fn xy_poly_to_hermite_tensor(xy: &Grid, nu: f64) -> HermiteTensor {
    let tx: Vec<Vec<f64>> = (0..xy.rows()).map(|a| monomial_in_hermite(a, nu)).collect();
    let ty: Vec<Vec<f64>> = (0..xy.cols()).map(|b| monomial_in_hermite(b, nu)).collect();
    let mut out = Grid::zeros(xy.rows(), xy.cols());
    for (a, b, c) in xy.entries() {
        if c == ZERO {
            continue;
        }
        for (m, &u) in tx[a].iter().enumerate() {
            if u == 0.0 {
                continue;
            }
            for (n, &v) in ty[b].iter().enumerate() {
                if v != 0.0 {
                    out.set(m, n, out.get(m, n) + c * (u * v));
                }
            }
        }
    }
    HermiteTensor::new(nu, out).expect("validated on construction")
}

/// Coefficient path of the orthogonal projection onto `F^{2,nu}(C)`:
/// `Proj(zeta^a conj(zeta)^b) = a!/(a-b)! nu^{-b} zeta^{a-b}` for `a ≥ b`,
/// zero otherwise.
pub fn proj_fock1(f: &MixedPoly) -> FockCoeffs1 {
    let mut out = vec![ZERO; f.coeffs.rows()];
    for (a, b, c) in f.coeffs.entries() {
        if a >= b {
            out[a - b] += c * (factorial(a) / factorial(a - b) / f.nu.powi(b as i32));
        }
    }
    FockCoeffs1::new(f.nu, out).expect("validated on construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c64, complex_gauss_rule};
    use crate::spaces::fock::{proj_fock1_eval, proj_fock1_samples};

    fn sample_poly(nu: f64, deg: usize) -> MixedPoly {
        let g = Grid::from_fn(deg + 1, deg + 1, |a, b| {
            if a + b <= deg {
                c64((a as f64 + 1.0).recip(), 0.1 * b as f64 - 0.2) / factorial(a + b).sqrt()
            } else {
                ZERO
            }
        });
        MixedPoly::new(nu, g).unwrap()
    }

    #[test]
    fn projection_examples() {
        let nu = 2.0;
        assert!(proj_fock1(&MixedPoly::monomial(nu, 0, 1).unwrap())
            .coeffs()
            .iter()
            .all(|c| *c == ZERO));
        let p = proj_fock1(&MixedPoly::monomial(nu, 1, 1).unwrap());
        assert!((p.coeff(0) - c64(0.5, 0.0)).norm() < 1e-15);
        let p = proj_fock1(&MixedPoly::monomial(nu, 3, 0).unwrap());
        assert_eq!(p.coeff(3), c64(1.0, 0.0));
    }

    #[test]
    fn projection_is_idempotent() {
        for &nu in &[0.5, 1.0, 2.0] {
            let f = sample_poly(nu, 12);
            let once = proj_fock1(&f);
            let twice = proj_fock1(&MixedPoly::from_fock1(&once));
            assert!(
                once.max_abs_diff(&twice)
                    < 1e-14 * once.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max)
            );
        }
    }

    #[test]
    fn coefficient_projection_matches_quadrature() {
        for &nu in &[0.5, 1.0, 2.0] {
            let f = sample_poly(nu, 8);
            let rule = complex_gauss_rule(32, nu).unwrap();
            let coeff = proj_fock1(&f);
            let quad = proj_fock1_samples(|z| f.eval(z), nu, 8, &rule).unwrap();
            assert!(coeff.max_abs_diff(&quad) < 1e-10, "nu={nu}");
            let xi = c64(0.3, -0.7);
            let direct = proj_fock1_eval(|z| f.eval(z), xi, nu, &rule);
            assert!((direct - coeff.eval(xi)).norm() < 1e-10);
        }
    }

    #[test]
    fn hermite_tensor_reproduces_values() {
        let nu = 1.3;
        let f = sample_poly(nu, 6);
        let t = f.to_hermite_tensor();
        for &(x, y) in &[(0.0, 0.0), (0.5, -1.0), (-1.2, 0.7)] {
            let v = t.eval(x, y);
            let w = f.eval(c64(x, y));
            assert!((v - w).norm() < 1e-12 * (1.0 + w.norm()), "({x},{y})");
        }
    }
}
