//! Segal-Bargmann transforms on the line and the plane, their composition
//! `G = B2 ∘ B1` into the two-variable Fock space, the left inverse `R`, the
//! quaternionic slice-regular transform with its bridges `I` and `J`, the
//! Fourier-composed transforms `T1`/`T2`, and the iterated transform on
//! `C^{2^k}`.
//!
//! Every operator has an exact coefficient-space implementation acting on
//! truncated orthogonal bases. Where an integral representation exists, an
//! independent Gauss-Hermite quadrature evaluation is provided as well; the
//! [`verify`] module runs the two against each other.

pub mod error;
pub mod exec;
pub mod fourier;
pub mod numerics;
pub mod quaternionic;
pub mod spaces;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::{Complex64, Quaternion};
