//! Rescaled Hermite polynomials `H_m^nu(x) = (-1)^m e^{nu x^2} d^m/dx^m e^{-nu x^2}`,
//! orthogonal for `e^{-nu x^2} dx`.

use num_complex::Complex64;

use super::grid::Grid;
use super::Scalar;
use crate::error::{check_nu, invalid, Error, Result};
use crate::numerics::special::{factorial, ln_factorial};
use crate::numerics::sum::sum_f64;
use crate::numerics::QuadratureRule;

/// `H_m^nu(x)` by `H_{m+1} = 2 nu x H_m - 2 nu m H_{m-1}`, `H_0 = 1`.
pub fn hermite_eval(m: usize, nu: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..m {
        let next = 2.0 * nu * x * cur - 2.0 * nu * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `[H_0^nu(x), ..., H_max^nu(x)]`.
pub fn hermite_values(max: usize, nu: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(1.0);
    if max >= 1 {
        out.push(2.0 * nu * x);
    }
    for k in 1..max {
        out.push(2.0 * nu * x * out[k] - 2.0 * nu * k as f64 * out[k - 1]);
    }
    out
}

/// `‖H_m^nu‖^2 = 2^m m! nu^{m - 1/2} sqrt(pi)`.
pub fn hermite_norm_sq(m: usize, nu: f64) -> f64 {
    if m <= 20 {
        2f64.powi(m as i32) * factorial(m) * nu.powf(m as f64 - 0.5) * std::f64::consts::PI.sqrt()
    } else {
        (m as f64 * std::f64::consts::LN_2
            + ln_factorial(m)
            + (m as f64 - 0.5) * nu.ln()
            + 0.5 * std::f64::consts::PI.ln())
        .exp()
    }
}

/// Monomial coefficients of `H_m^nu`, lowest degree first.
pub fn hermite_monomial_coeffs(m: usize, nu: f64) -> Vec<f64> {
    let mut prev = vec![0.0; m + 1];
    let mut cur = vec![0.0; m + 1];
    cur[0] = 1.0;
    for k in 0..m {
        let mut next = vec![0.0; m + 1];
        for d in 0..m {
            next[d + 1] += 2.0 * nu * cur[d];
        }
        for d in 0..=m {
            next[d] -= 2.0 * nu * k as f64 * prev[d];
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients `t_j` with `x^a = Σ_j t_j H_j^nu(x)`:
/// `x^a = (a!/2^a) Σ_k nu^{k-a} H_{a-2k}^nu(x) / (k! (a-2k)!)`.
pub fn monomial_in_hermite(a: usize, nu: f64) -> Vec<f64> {
    let mut out = vec![0.0; a + 1];
    let lead = (ln_factorial(a) - a as f64 * std::f64::consts::LN_2).exp();
    for k in 0..=a / 2 {
        let j = a - 2 * k;
        out[j] = lead * nu.powi(k as i32 - a as i32) / (factorial(k) * factorial(j));
    }
    out
}

/// An element of `L^{2,nu}(R)` as right coefficients over `H_m^nu`,
/// `m = 0..=truncation`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteCoeffs<S: Scalar = Complex64> {
    nu: f64,
    coeffs: Vec<S>,
}

impl<S: Scalar> HermiteCoeffs<S> {
    pub fn new(nu: f64, coeffs: Vec<S>) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.is_empty() {
            return Err(invalid("coefficient vector must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    pub fn zeros(nu: f64, truncation: usize) -> Result<Self> {
        Self::new(nu, vec![S::zero(); truncation + 1])
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> S {
        self.coeffs.get(m).copied().unwrap_or_else(S::zero)
    }

    /// Pointwise value `Σ_m H_m^nu(x) c_m`.
    pub fn eval(&self, x: f64) -> S {
        let hs = hermite_values(self.truncation(), self.nu, x);
        let mut acc = S::zero();
        for (c, h) in self.coeffs.iter().zip(hs) {
            acc = acc + *c * h;
        }
        acc
    }

    /// `Σ |c_m|^2 ‖H_m‖^2`.
    pub fn norm_sq(&self) -> f64 {
        sum_f64(self.weighted_sq())
    }

    pub fn weighted_sq(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| c.norm_sqr() * hermite_norm_sq(m, self.nu))
            .collect()
    }

    /// `∫ |f(x)|^2 e^{-nu x^2} dx` with `f` synthesized pointwise.
    pub fn quadrature_norm_sq(&self, rule: &QuadratureRule) -> Result<f64> {
        ensure_rate(rule.weight_exponent(), self.nu)?;
        Ok(rule.integrate(|x| self.eval(x).norm_sqr()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|m| (self.coeff(m) - other.coeff(m)).norm_sqr().sqrt())
            .fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(usize, S) -> S) -> Self {
        Self {
            nu: self.nu,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, &c)| f(m, c))
                .collect(),
        }
    }
}

impl HermiteCoeffs<Complex64> {
    /// `H_m^nu` itself, truncated at `truncation >= m`.
    pub fn basis(nu: f64, m: usize, truncation: usize) -> Result<Self> {
        let mut c = vec![Complex64::new(0.0, 0.0); truncation.max(m) + 1];
        c[m] = Complex64::new(1.0, 0.0);
        Self::new(nu, c)
    }

    /// Coefficients of a pointwise function by Gauss-Hermite projection
    /// `c_m = <f, H_m> / ‖H_m‖^2`. Exact for polynomials of degree
    /// `<= 2 n - 1 - truncation` with an `n`-node rule.
    pub fn project(
        f: impl Fn(f64) -> Complex64,
        nu: f64,
        truncation: usize,
        rule: &QuadratureRule,
    ) -> Result<Self> {
        ensure_rate(rule.weight_exponent(), nu)?;
        let samples: Vec<(f64, f64, Complex64, Vec<f64>)> = rule
            .points()
            .map(|(x, w)| (x, w, f(x), hermite_values(truncation, nu, x)))
            .collect();
        let coeffs = (0..=truncation)
            .map(|m| {
                let s = crate::numerics::sum::sum_complex(
                    samples.iter().map(|(_, w, fx, hs)| fx * (w * hs[m])),
                );
                s / hermite_norm_sq(m, nu)
            })
            .collect();
        Self::new(nu, coeffs)
    }
}

pub(crate) fn ensure_rate(rule_rate: f64, nu: f64) -> Result<()> {
    if (rule_rate - nu).abs() <= 1e-15 * nu {
        Ok(())
    } else {
        Err(Error::NuMismatch(rule_rate, nu))
    }
}

/// Element of `L^{2,nu}(R^2)` over the tensor basis `H_m^nu(x) H_n^nu(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTensor {
    nu: f64,
    coeffs: Grid,
}

impl HermiteTensor {
    pub fn new(nu: f64, coeffs: Grid) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.rows() == 0 || coeffs.cols() == 0 {
            return Err(invalid("tensor coefficient grid must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &Grid {
        &self.coeffs
    }

    pub fn eval(&self, x: f64, y: f64) -> Complex64 {
        let hx = hermite_values(self.coeffs.rows() - 1, self.nu, x);
        let hy = hermite_values(self.coeffs.cols() - 1, self.nu, y);
        self.coeffs
            .entries()
            .map(|(m, n, c)| c * (hx[m] * hy[n]))
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        sum_f64(self.coeffs.entries().map(|(m, n, c)| {
            c.norm_sqr() * hermite_norm_sq(m, self.nu) * hermite_norm_sq(n, self.nu)
        }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let r = self.coeffs.rows().max(other.coeffs.rows());
        let c = self.coeffs.cols().max(other.coeffs.cols());
        let mut worst: f64 = 0.0;
        for m in 0..r {
            for n in 0..c {
                worst = worst.max((self.coeffs.get(m, n) - other.coeffs.get(m, n)).norm());
            }
        }
        worst
    }
}
