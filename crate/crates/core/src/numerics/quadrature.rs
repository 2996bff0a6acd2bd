//! Gauss-Hermite rules for the weights `e^{-nu x^2}` on the line and
//! `e^{-nu |xi|^2}` on the plane.
//!
//! Nodes come from the eigenvalues of the symmetric tridiagonal Jacobi matrix
//! of the Hermite polynomials (Golub-Welsch), polished by Newton steps on the
//! orthonormal three-term recurrence. Weights are Christoffel numbers
//! `1 / sum_k p_k(x)^2`, which stay accurate in the tails where eigenvector
//! components lose relative precision.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::quaternion::Quaternion;
use super::sum::{CompensatedSum, ComplexSum, QuaternionSum};
use crate::error::{check_nu, invalid, Result};

/// Upper bound on nodes per axis; beyond it the unscaled recurrence
/// overflows at the outermost nodes.
pub const MAX_NODES: usize = 256;

/// A one-dimensional rule integrating against `e^{-rate x^2}` on the line.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    weight_exponent: f64,
}

/// Orthonormal Hermite polynomials for `e^{-x^2}`: returns `(p_{n-1}, p_n, sum_{k<n} p_k^2)`.
fn orthonormal_recurrence(n: usize, x: f64) -> (f64, f64, f64) {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25);
    let mut sq = CompensatedSum::new();
    for k in 0..n {
        sq.add(cur * cur);
        let next =
            (2.0 / (k as f64 + 1.0)).sqrt() * x * cur - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (prev, cur, sq.value())
}

fn unit_rate_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let jacobi = DMatrix::from_fn(n, n, |r, c| {
        if r + 1 == c || c + 1 == r {
            (r.max(c) as f64 / 2.0).sqrt()
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    nodes.sort_by(|a, b| a.total_cmp(b));

    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (pm1, pn, _) = orthonormal_recurrence(n, *x);
            let dpn = (2.0 * n as f64).sqrt() * pm1;
            if dpn == 0.0 || !pn.is_finite() || !dpn.is_finite() {
                break;
            }
            let step = pn / dpn;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }

    // exact mirror symmetry about the origin
    for j in 0..n / 2 {
        let m = 0.5 * (nodes[n - 1 - j] - nodes[j]);
        nodes[j] = -m;
        nodes[n - 1 - j] = m;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }

    let weights = nodes
        .iter()
        .map(|&x| 1.0 / orthonormal_recurrence(n, x).2)
        .collect();
    (nodes, weights)
}

/// `n`-node Gauss-Hermite rule for `e^{-nu x^2}`: the unit-rate rule with
/// nodes scaled by `1/sqrt(nu)` and weights by `1/sqrt(nu)`.
pub fn gauss_hermite_rule(n: usize, nu: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(invalid("quadrature node count must be at least 1"));
    }
    if n > MAX_NODES {
        return Err(invalid(format!(
            "at most {MAX_NODES} nodes per axis are supported, got {n}"
        )));
    }
    check_nu(nu)?;
    let (nodes, weights) = unit_rate_rule(n);
    let s = nu.sqrt().recip();
    Ok(QuadratureRule {
        nodes: nodes.into_iter().map(|x| x * s).collect(),
        weights: weights.into_iter().map(|w| w * s).collect(),
        weight_exponent: nu,
    })
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight_exponent(&self) -> f64 {
        self.weight_exponent
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `∫ f(x) e^{-rate x^2} dx` where `rate` is this rule's weight exponent.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let mut acc = CompensatedSum::new();
        for (x, w) in self.points() {
            acc.add(w * f(x));
        }
        acc.value()
    }

    pub fn integrate_complex(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let mut acc = ComplexSum::new();
        for (x, w) in self.points() {
            acc.add(f(x) * w);
        }
        acc.value()
    }

    /// `∫ f(x) e^{-target x^2} dx`, compensating for the rule's own rate.
    /// Useful when the integrand carries extra Gaussian factors that shift
    /// its effective decay away from `target`.
    pub fn integrate_against(&self, target: f64, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let shift = self.weight_exponent - target;
        self.integrate_complex(|x| f(x) * (shift * x * x).exp())
    }
}

/// Tensor product of two Gauss-Hermite rules over `re(xi)` and `im(xi)`,
/// integrating against `e^{-rate_re re^2 - rate_im im^2}`.
///
/// Sums are taken in a fixed order: outer loop over the real-axis nodes,
/// inner loop over the imaginary-axis nodes, each inner sum compensated and
/// then multiplied by the outer weight. On separable integrands this is the
/// iterated one-dimensional rule up to the rounding of one product per term.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarRule {
    re: QuadratureRule,
    im: QuadratureRule,
}

/// Isotropic planar rule for `e^{-nu |xi|^2} dλ(xi)`.
pub fn complex_gauss_rule(n: usize, nu: f64) -> Result<PlanarRule> {
    PlanarRule::anisotropic(n, nu, nu)
}

impl PlanarRule {
    pub fn anisotropic(n: usize, rate_re: f64, rate_im: f64) -> Result<Self> {
        Ok(Self {
            re: gauss_hermite_rule(n, rate_re)?,
            im: gauss_hermite_rule(n, rate_im)?,
        })
    }

    pub fn from_axes(re: QuadratureRule, im: QuadratureRule) -> Self {
        Self { re, im }
    }

    pub fn re_axis(&self) -> &QuadratureRule {
        &self.re
    }

    pub fn im_axis(&self) -> &QuadratureRule {
        &self.im
    }

    pub fn len(&self) -> usize {
        self.re.len() * self.im.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All nodes with their product weights, in summation order.
    pub fn points(&self) -> Vec<(Complex64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for (a, wa) in self.re.points() {
            for (b, wb) in self.im.points() {
                out.push((Complex64::new(a, b), wa * wb));
            }
        }
        out
    }

    /// Points with weights rescaled so that `Σ w f(z)` approximates
    /// `∫ f(z) e^{-target |z|^2} dλ`.
    pub fn points_against(&self, target: f64) -> Vec<(Complex64, f64)> {
        let (sr, si) = (
            self.re.weight_exponent - target,
            self.im.weight_exponent - target,
        );
        self.points()
            .into_iter()
            .map(|(z, w)| (z, w * (sr * z.re * z.re + si * z.im * z.im).exp()))
            .collect()
    }

    /// `∫ f(xi) e^{-rate_re re^2 - rate_im im^2} dλ(xi)`.
    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        let mut outer = ComplexSum::new();
        for (a, wa) in self.re.points() {
            let mut inner = ComplexSum::new();
            for (b, wb) in self.im.points() {
                inner.add(f(Complex64::new(a, b)) * wb);
            }
            outer.add(inner.value() * wa);
        }
        outer.value()
    }

    /// `∫ f(xi) e^{-target |xi|^2} dλ(xi)` for a rule whose axis rates may
    /// differ from `target`.
    pub fn integrate_against(&self, target: f64, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        let (sr, si) = (
            self.re.weight_exponent - target,
            self.im.weight_exponent - target,
        );
        self.integrate(|z| f(z) * (sr * z.re * z.re + si * z.im * z.im).exp())
    }

    /// Quaternion-valued version of [`PlanarRule::integrate_against`]; the
    /// integration variable is supplied as a complex number and embedded in
    /// a slice by the caller.
    pub fn integrate_quaternion_against(
        &self,
        target: f64,
        f: impl Fn(Complex64) -> Quaternion,
    ) -> Quaternion {
        let (sr, si) = (
            self.re.weight_exponent - target,
            self.im.weight_exponent - target,
        );
        let mut outer = QuaternionSum::new();
        for (a, wa) in self.re.points() {
            let mut inner = QuaternionSum::new();
            for (b, wb) in self.im.points() {
                let g = (sr * a * a + si * b * b).exp() * wb;
                inner.add(f(Complex64::new(a, b)) * g);
            }
            outer.add(inner.value() * wa);
        }
        outer.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::{factorial, ln_factorial};
    use std::f64::consts::PI;

    /// `∫ x^j e^{-nu x^2} dx` in closed form: zero for odd `j`, otherwise
    /// `Γ((j+1)/2) / nu^{(j+1)/2}`.
    fn gaussian_moment(j: usize, nu: f64) -> f64 {
        if j % 2 == 1 {
            return 0.0;
        }
        let k = j / 2;
        // Γ(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
        let gamma =
            (ln_factorial(2 * k) - ln_factorial(k) - (k as f64) * 4f64.ln()).exp() * PI.sqrt();
        gamma / nu.powf(k as f64 + 0.5)
    }

    #[test]
    fn gaussian_integral() {
        let rule = gauss_hermite_rule(20, 1.0).unwrap();
        let v = rule.integrate(|_| 1.0);
        assert!((v - 1.772453850905516).abs() < 1e-14);
    }

    #[test]
    fn odd_and_second_moments() {
        for &nu in &[0.5, 1.0, 2.0] {
            let rule = gauss_hermite_rule(12, nu).unwrap();
            assert!(rule.integrate(|x| x).abs() < 1e-15);
        }
        let rule = gauss_hermite_rule(12, 1.0).unwrap();
        assert!((rule.integrate(|x| x * x) - PI.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn exact_through_degree_2n_minus_1() {
        for &n in &[1usize, 2, 5, 16, 48, 96] {
            for &nu in &[0.5, 1.0, 2.0] {
                let rule = gauss_hermite_rule(n, nu).unwrap();
                let max_deg = (2 * n - 1).min(60);
                for j in (0..=max_deg).step_by(2) {
                    let exact = gaussian_moment(j, nu);
                    let got = rule.integrate(|x| x.powi(j as i32));
                    assert!(
                        ((got - exact) / exact).abs() <= 1e-12,
                        "n={n} nu={nu} j={j}: {got} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn nodes_increase_and_weights_positive() {
        let rule = gauss_hermite_rule(96, 2.0).unwrap();
        assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
        assert!(rule.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn doubling_nodes_never_hurts() {
        for j in 0..=24usize {
            let exact = gaussian_moment(j, 1.0);
            let floor = 1e-12 * exact.max(1.0);
            let mut last = f64::INFINITY;
            for n in [4usize, 8, 16, 32, 64] {
                let rule = gauss_hermite_rule(n, 1.0).unwrap();
                let err = (rule.integrate(|x| x.powi(j as i32)) - exact).abs();
                if 2 * n > j {
                    assert!(err <= floor, "j={j} n={n}: {err}");
                } else {
                    assert!(err <= last, "j={j} n={n}: {err} > {last}");
                }
                last = err;
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gauss_hermite_rule(0, 1.0).is_err());
        assert!(gauss_hermite_rule(4, 0.0).is_err());
        assert!(gauss_hermite_rule(4, -1.0).is_err());
        assert!(complex_gauss_rule(0, 1.0).is_err());
        assert!(gauss_hermite_rule(MAX_NODES + 1, 1.0).is_err());
    }

    #[test]
    fn planar_gaussian_mass() {
        for &nu in &[0.5, 1.0, 2.0] {
            let rule = complex_gauss_rule(16, nu).unwrap();
            let v = rule.integrate(|_| Complex64::new(1.0, 0.0));
            assert!((v.re - PI / nu).abs() < 1e-13 && v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn planar_radial_moments() {
        let nu = 1.5;
        let rule = complex_gauss_rule(16, nu).unwrap();
        for m in 0..=10usize {
            let v = rule.integrate(|z| Complex64::new(z.norm_sqr().powi(m as i32), 0.0));
            let exact = PI * factorial(m) / nu.powi(m as i32 + 1);
            assert!(((v.re - exact) / exact).abs() < 1e-12, "m={m}");
        }
    }

    #[test]
    fn planar_rotational_symmetry() {
        let rule = complex_gauss_rule(12, 1.0).unwrap();
        for a in 0..6i32 {
            for b in 0..6i32 {
                if a == b {
                    continue;
                }
                let v = rule.integrate(|z| z.powi(a) * z.conj().powi(b));
                assert!(v.norm() < 1e-13, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn planar_equals_iterated_on_separable_integrands() {
        let rule = complex_gauss_rule(24, 1.0).unwrap();
        let h = |x: f64| (0.3 * x).cos() + x * x;
        let g = |y: f64| (0.7 * y).sin() + 1.0;
        let planar = rule
            .integrate(|z| Complex64::new(h(z.re) * g(z.im), 0.0))
            .re;
        let iterated = rule.re_axis().integrate(h) * rule.im_axis().integrate(g);
        assert!((planar - iterated).abs() <= 4.0 * f64::EPSILON * iterated.abs());
    }

    #[test]
    fn compensated_rates_agree() {
        // ∫ e^{-|z|^2} e^{-0.5 re^2 + 0.5 im^2} dλ = sqrt(pi/1.5) sqrt(pi/0.5)
        let direct = PlanarRule::anisotropic(64, 1.5, 0.5).unwrap();
        let v = direct.integrate_against(1.0, |z| {
            Complex64::new((-0.5 * z.re * z.re + 0.5 * z.im * z.im).exp(), 0.0)
        });
        let exact = (PI / 1.5).sqrt() * (PI / 0.5).sqrt();
        assert!((v.re - exact).abs() < 1e-12 * exact);
    }
}
