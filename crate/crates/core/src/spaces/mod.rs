//! Truncated orthogonal bases of `L^{2,nu}(R)`, `F^{2,nu}(C)`,
//! `F^{2,nu}(C^2)` and the subspace `A^{2,nu}(C^2) = ker(∂_z + i ∂_w)`.
//!
//! Measures carry no normalizing constant: `e^{-nu x^2} dx` on the line and
//! `e^{-nu |xi|^2} dλ` on the plane. Inner products are antilinear in the
//! second argument, `<F, G> = ∫ conj(G) F`.

pub mod asub;
pub mod document;
pub mod fock;
pub mod grid;
pub mod hermite;
pub mod mixed;

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::numerics::Quaternion;

pub use asub::{a_basis_norm_sq, a_subspace_embed, a_subspace_extract, dzw_apply, ASubspaceCoeffs};
pub use document::{Basis, CoeffDocument};
pub use fock::{
    fock1_norm_sq, fock2_inner, kernel_k1, kernel_k2, proj_fock1_eval, proj_fock1_samples,
    quadrature_gram, quadrature_norms_sq, FockCoeffs1, FockCoeffs2,
};
pub use grid::Grid;
pub use hermite::{hermite_eval, hermite_norm_sq, HermiteCoeffs, HermiteTensor};
pub use mixed::{proj_fock1, MixedPoly};

/// Default truncation index for coefficient vectors.
pub const DEFAULT_TRUNCATION: usize = 32;

/// Coefficient scalars: complex numbers or quaternions (right coefficients).
pub trait Scalar:
    Copy
    + Send
    + Sync
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn norm_sqr(self) -> f64;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn norm_sqr(self) -> f64 {
        Complex64::norm_sqr(&self)
    }
}

impl Scalar for Quaternion {
    fn zero() -> Self {
        Quaternion::ZERO
    }
    fn norm_sqr(self) -> f64 {
        Quaternion::norm_sqr(self)
    }
}

/// Fraction of the squared norm carried by coefficients with index above
/// `keep`, given per-index squared norms.
pub fn tail_fraction(weighted_sq: &[f64], keep: usize) -> f64 {
    let total: f64 = weighted_sq.iter().sum();
    if total == 0.0 {
        return 0.0;
    }
    let tail: f64 = weighted_sq.iter().skip(keep + 1).sum();
    tail / total
}
