//! JSON coefficient documents:
//! `{"nu": real, "basis": "...", "coeffs": [[re, im], ...] | nested}`.
//! Quaternion coefficients are written `[w, x, y, z]`.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::asub::ASubspaceCoeffs;
use super::fock::{FockCoeffs1, FockCoeffs2};
use super::grid::Grid;
use super::hermite::{HermiteCoeffs, HermiteTensor};
use crate::error::{invalid, Error, Result};
use crate::numerics::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `H_m^nu` on the line.
    Hermite,
    /// `H_m^nu(x) H_n^nu(y)` on the plane.
    Hermite2,
    /// `xi^m`.
    Fock1,
    /// `z^m w^n`.
    Fock2,
    /// `(z + i w)^m`.
    A2,
    /// `q^m` with right quaternion coefficients.
    Slice,
    /// `psi_k(Z)^m` on `C^{2^k}`.
    Hyper,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        write!(f, "{}", s.as_str().unwrap_or("?"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeffs {
    Flat(Vec<Vec<f64>>),
    Nested(Vec<Vec<Vec<f64>>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffDocument {
    pub nu: f64,
    pub basis: Basis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub coeffs: Coeffs,
}

fn complex_entry(v: &[f64]) -> Result<Complex64> {
    match v {
        [re, im] => Ok(Complex64::new(*re, *im)),
        [re] => Ok(Complex64::new(*re, 0.0)),
        _ => Err(invalid(format!(
            "complex coefficient must be [re, im], got {} numbers",
            v.len()
        ))),
    }
}

fn quaternion_entry(v: &[f64]) -> Result<Quaternion> {
    match v {
        [w, x, y, z] => Ok(Quaternion::new(*w, *x, *y, *z)),
        [w, x] => Ok(Quaternion::new(*w, *x, 0.0, 0.0)),
        [w] => Ok(Quaternion::real(*w)),
        _ => Err(invalid(format!(
            "quaternion coefficient must be [w, x, y, z], got {} numbers",
            v.len()
        ))),
    }
}

impl CoeffDocument {
    pub fn from_complex(nu: f64, basis: Basis, coeffs: &[Complex64]) -> Self {
        Self {
            nu,
            basis,
            k: None,
            coeffs: Coeffs::Flat(coeffs.iter().map(|c| vec![c.re, c.im]).collect()),
        }
    }

    pub fn from_quaternion(nu: f64, basis: Basis, coeffs: &[Quaternion]) -> Self {
        Self {
            nu,
            basis,
            k: None,
            coeffs: Coeffs::Flat(coeffs.iter().map(|q| q.to_array().to_vec()).collect()),
        }
    }

    pub fn from_grid(nu: f64, basis: Basis, grid: &Grid) -> Self {
        let rows = grid
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|c| vec![c.re, c.im]).collect())
            .collect();
        Self {
            nu,
            basis,
            k: None,
            coeffs: Coeffs::Nested(rows),
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn expect_basis(&self, expected: &[Basis]) -> Result<()> {
        if expected.contains(&self.basis) {
            Ok(())
        } else {
            let names: Vec<String> = expected.iter().map(Basis::to_string).collect();
            Err(Error::BasisMismatch {
                expected: names.join("|"),
                found: self.basis.to_string(),
            })
        }
    }

    fn flat(&self) -> Result<&[Vec<f64>]> {
        match &self.coeffs {
            Coeffs::Flat(v) => Ok(v),
            Coeffs::Nested(_) => Err(invalid(format!(
                "basis {} expects a flat coefficient list",
                self.basis
            ))),
        }
    }

    pub fn complex_vec(&self) -> Result<Vec<Complex64>> {
        self.flat()?.iter().map(|v| complex_entry(v)).collect()
    }

    pub fn quaternion_vec(&self) -> Result<Vec<Quaternion>> {
        self.flat()?.iter().map(|v| quaternion_entry(v)).collect()
    }

    /// True when any flat entry carries `j`/`k` components.
    pub fn has_quaternion_entries(&self) -> bool {
        matches!(&self.coeffs, Coeffs::Flat(v) if v.iter().any(|e| e.len() == 4))
    }

    pub fn grid(&self) -> Result<Grid> {
        let Coeffs::Nested(rows) = &self.coeffs else {
            return Err(invalid(format!(
                "basis {} expects a nested coefficient matrix",
                self.basis
            )));
        };
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|v| complex_entry(v)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Grid::from_rows(rows).ok_or_else(|| invalid("coefficient matrix rows differ in length"))
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string()? + "\n")?;
        Ok(())
    }
}

impl From<&HermiteCoeffs> for CoeffDocument {
    fn from(f: &HermiteCoeffs) -> Self {
        Self::from_complex(f.nu(), Basis::Hermite, f.coeffs())
    }
}

impl From<&HermiteCoeffs<Quaternion>> for CoeffDocument {
    fn from(f: &HermiteCoeffs<Quaternion>) -> Self {
        Self::from_quaternion(f.nu(), Basis::Hermite, f.coeffs())
    }
}

impl From<&HermiteTensor> for CoeffDocument {
    fn from(f: &HermiteTensor) -> Self {
        Self::from_grid(f.nu(), Basis::Hermite2, f.coeffs())
    }
}

impl From<&FockCoeffs1> for CoeffDocument {
    fn from(f: &FockCoeffs1) -> Self {
        Self::from_complex(f.nu(), Basis::Fock1, f.coeffs())
    }
}

impl From<&FockCoeffs2> for CoeffDocument {
    fn from(f: &FockCoeffs2) -> Self {
        Self::from_grid(f.nu(), Basis::Fock2, f.coeffs())
    }
}

impl From<&ASubspaceCoeffs> for CoeffDocument {
    fn from(f: &ASubspaceCoeffs) -> Self {
        Self::from_complex(f.nu(), Basis::A2, f.coeffs())
    }
}

impl TryFrom<&CoeffDocument> for HermiteCoeffs {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Hermite])?;
        HermiteCoeffs::new(d.nu, d.complex_vec()?)
    }
}

impl TryFrom<&CoeffDocument> for HermiteCoeffs<Quaternion> {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Hermite])?;
        HermiteCoeffs::new(d.nu, d.quaternion_vec()?)
    }
}

impl TryFrom<&CoeffDocument> for HermiteTensor {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Hermite2])?;
        HermiteTensor::new(d.nu, d.grid()?)
    }
}

impl TryFrom<&CoeffDocument> for FockCoeffs1 {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Fock1])?;
        FockCoeffs1::new(d.nu, d.complex_vec()?)
    }
}

impl TryFrom<&CoeffDocument> for FockCoeffs2 {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::Fock2])?;
        FockCoeffs2::new(d.nu, d.grid()?)
    }
}

impl TryFrom<&CoeffDocument> for ASubspaceCoeffs {
    type Error = Error;
    fn try_from(d: &CoeffDocument) -> Result<Self> {
        d.expect_basis(&[Basis::A2])?;
        ASubspaceCoeffs::new(d.nu, d.complex_vec()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c64;

    #[test]
    fn round_trip_preserves_values() {
        let f = HermiteCoeffs::new(
            0.5,
            vec![c64(0.1, 1.0 / 3.0), c64(std::f64::consts::PI, -1e-300)],
        )
        .unwrap();
        let s = CoeffDocument::from(&f).to_json_string().unwrap();
        let back = HermiteCoeffs::<Complex64>::try_from(&CoeffDocument::from_json_str(&s).unwrap())
            .unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn nested_grid_round_trip() {
        let g = Grid::from_fn(2, 3, |m, n| c64(m as f64, n as f64 / 7.0));
        let f = FockCoeffs2::new(1.0, g).unwrap();
        let s = CoeffDocument::from(&f).to_json_string().unwrap();
        assert!(s.contains("\"fock2\""));
        let back = FockCoeffs2::try_from(&CoeffDocument::from_json_str(&s).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn basis_mismatch_names_expected() {
        let d = CoeffDocument::from_complex(1.0, Basis::Fock1, &[c64(1.0, 0.0)]);
        match HermiteCoeffs::<Complex64>::try_from(&d) {
            Err(Error::BasisMismatch { expected, found }) => {
                assert_eq!(expected, "hermite");
                assert_eq!(found, "fock1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_handwritten_documents() {
        let d = CoeffDocument::from_json_str(
            r#"{"nu": 2, "basis": "a2", "coeffs": [[1, 0], [0, 0.5]]}"#,
        )
        .unwrap();
        let a = ASubspaceCoeffs::try_from(&d).unwrap();
        assert_eq!(a.coeff(1), c64(0.0, 0.5));
        let q = CoeffDocument::from_json_str(
            r#"{"nu": 1, "basis": "hermite", "coeffs": [[0, 0, 1, 0]]}"#,
        )
        .unwrap();
        assert!(q.has_quaternion_entries());
        let h = HermiteCoeffs::<Quaternion>::try_from(&q).unwrap();
        assert_eq!(h.coeff(0), Quaternion::J);
        assert!(HermiteCoeffs::<Complex64>::try_from(&q).is_err());
    }
}
