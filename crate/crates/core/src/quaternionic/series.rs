//! Left slice regular power series `F(q) = Σ q^m c_m` with right quaternion
//! coefficients, slice extension, and the star-exponential kernel.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_nu, invalid, Error, Result};
use crate::numerics::special::factorial_over_power;
use crate::numerics::sum::{sum_f64, QuaternionSum};
use crate::numerics::{ImaginaryUnit, Quaternion};
use crate::spaces::{Basis, CoeffDocument, FockCoeffs1};

/// Term budget of [`kernel_kh`].
pub const MAX_KERNEL_TERMS: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct SliceRegularSeries {
    nu: f64,
    coeffs: Vec<Quaternion>,
}

/// Whether every coefficient lies in the slice `C_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceInvariantFlag {
    pub is_slice_i_invariant: bool,
    /// Index with the largest `|j| + |k|` part.
    pub worst_index: usize,
    pub worst_magnitude: f64,
}

impl SliceRegularSeries {
    pub fn new(nu: f64, coeffs: Vec<Quaternion>) -> Result<Self> {
        check_nu(nu)?;
        if coeffs.is_empty() {
            return Err(invalid("coefficient vector must not be empty"));
        }
        Ok(Self { nu, coeffs })
    }

    /// Complex coefficients placed in the slice `C_i`.
    pub fn from_complex(nu: f64, coeffs: &[Complex64]) -> Result<Self> {
        Self::new(
            nu,
            coeffs
                .iter()
                .map(|&c| Quaternion::from_complex(c))
                .collect(),
        )
    }

    pub fn from_fock1(f: &FockCoeffs1) -> Self {
        Self::from_complex(f.nu(), f.coeffs()).expect("validated on construction")
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> Quaternion {
        self.coeffs.get(m).copied().unwrap_or(Quaternion::ZERO)
    }

    /// `Σ q^m c_m`, Horner form `c_0 + q (c_1 + q (c_2 + ...))`.
    pub fn eval(&self, q: Quaternion) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::ZERO, |acc, &c| c + q * acc)
    }

    /// `(pi/nu) Σ (m!/nu^m) |c_m|^2`, the norm over any slice.
    pub fn norm_sq(&self) -> f64 {
        let nu = self.nu;
        PI / nu
            * sum_f64(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(m, c)| c.norm_sqr() * factorial_over_power(m, nu)),
            )
    }

    pub fn slice_flag(&self, tol: f64) -> SliceInvariantFlag {
        let (worst_index, worst_magnitude) = self
            .coeffs
            .iter()
            .map(|c| c.off_slice_i())
            .enumerate()
            .fold(
                (0, 0.0),
                |best, (m, v)| if v > best.1 { (m, v) } else { best },
            );
        SliceInvariantFlag {
            is_slice_i_invariant: worst_magnitude <= tol,
            worst_index,
            worst_magnitude,
        }
    }

    /// The restriction to `C_i` as an element of `F^{2,nu}(C)`; fails if a
    /// coefficient leaves the slice by more than `tol`.
    pub fn to_fock1(&self, tol: f64) -> Result<FockCoeffs1> {
        let flag = self.slice_flag(tol);
        if !flag.is_slice_i_invariant {
            return Err(Error::NotSliceInvariant {
                index: flag.worst_index,
                magnitude: flag.worst_magnitude,
            });
        }
        FockCoeffs1::new(
            self.nu,
            self.coeffs.iter().map(|c| c.slice_i_part()).collect(),
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|m| (self.coeff(m) - other.coeff(m)).norm())
            .fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(usize, Quaternion) -> Quaternion) -> Self {
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

    /// Truncation of `K_H(·, p)`: coefficients `(nu/pi) nu^m conj(p)^m / m!`.
    pub fn kernel_at(p: Quaternion, nu: f64, truncation: usize) -> Result<Self> {
        check_nu(nu)?;
        let pb = p.conj();
        let mut term = Quaternion::real(nu / PI);
        let mut c = Vec::with_capacity(truncation + 1);
        for m in 0..=truncation {
            c.push(term);
            term = term * pb * (nu / (m as f64 + 1.0));
        }
        Self::new(nu, c)
    }
}

impl From<&SliceRegularSeries> for CoeffDocument {
    fn from(f: &SliceRegularSeries) -> Self {
        CoeffDocument::from_quaternion(f.nu, Basis::Slice, &f.coeffs)
    }
}

impl TryFrom<&CoeffDocument> for SliceRegularSeries {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Slice])?;
        SliceRegularSeries::new(d.nu, d.quaternion_vec()?)
    }
}

/// Unique slice regular extension of `f`, holomorphic on `C_unit`, to
/// `q = x + y J`:
/// `(1/2)[f(x+yI) + f(x-yI)] + (J I / 2)[f(x-yI) - f(x+yI)]`.
pub fn ext_from_slice(
    f: impl Fn(Quaternion) -> Quaternion,
    unit: ImaginaryUnit,
    q: Quaternion,
) -> Quaternion {
    let (x, y, j) = ImaginaryUnit::decompose(q);
    let i = unit.as_quaternion();
    let plus = f(Quaternion::real(x) + i * y);
    let minus = f(Quaternion::real(x) - i * y);
    (plus + minus) * 0.5 + j.as_quaternion() * i * (minus - plus) * 0.5
}

/// `(nu/pi) Σ nu^m q^m conj(p)^m / m!`, summed until a term falls below
/// `tol` times the running sum past index `nu |q| |p|`.
pub fn kernel_kh(q: Quaternion, p: Quaternion, nu: f64, tol: f64) -> Result<Quaternion> {
    check_nu(nu)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(invalid("kernel tolerance must be positive"));
    }
    let pb = p.conj();
    let threshold = nu * q.norm() * p.norm();
    let mut qm = Quaternion::ONE;
    let mut pm = Quaternion::ONE;
    let mut scale = 1.0;
    let mut acc = QuaternionSum::new();
    for m in 0..MAX_KERNEL_TERMS {
        let term = qm * pm * scale;
        acc.add(term);
        if m as f64 > threshold && term.norm() <= tol * acc.value().norm() {
            return Ok(acc.value() * (nu / PI));
        }
        qm *= q;
        pm *= pb;
        scale *= nu / (m as f64 + 1.0);
    }
    Err(Error::Divergence {
        terms: MAX_KERNEL_TERMS,
    })
}
