//! Scalar towers, compensated sums, and Gaussian quadrature.

pub mod quadrature;
pub mod quaternion;
pub mod special;
pub mod sum;

pub use num_complex::Complex64;
pub use quadrature::{complex_gauss_rule, gauss_hermite_rule, PlanarRule, QuadratureRule};
pub use quaternion::{quat_mul, ImaginaryUnit, Quaternion};

#[cfg(test)]
pub(crate) const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `i^n` without rounding.
pub fn i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

/// `(-i)^n` without rounding.
pub fn neg_i_pow(n: usize) -> Complex64 {
    i_pow(n).conj()
}
