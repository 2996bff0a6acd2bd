use std::fmt;
use std::str::FromStr;

use bargmann::fourier::{fourier_rescaled, gk_transform, t1_transform, t2_transform, SignChoice};
use bargmann::quaternionic::{
    bh_forward, bh_inverse, i_transform, j_transform, SliceRegularSeries,
};
use bargmann::spaces::{
    a_subspace_embed, ASubspaceCoeffs, Basis, CoeffDocument, FockCoeffs1, FockCoeffs2,
    HermiteCoeffs, HermiteTensor,
};
use bargmann::transforms::{
    b1_forward, b1_inverse, b2_forward, b2_inverse, g_transform, r_transform,
};
use bargmann::{Quaternion, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformName {
    B1,
    B1Inv,
    B2,
    B2Inv,
    G,
    R,
    Bh,
    BhInv,
    I,
    J,
    T1(SignChoice),
    T2(SignChoice),
    Fourier(SignChoice),
    Gk,
}

const NAMES: &str =
    "b1, b1inv, b2, b2inv, g, r, bh, bhinv, i, j, t1-, t1+, t2-, t2+, fourier-, fourier+, gk";

impl FromStr for TransformName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let signed = |stem: &str| match s.strip_prefix(stem) {
            Some("-") => Some(SignChoice::Minus),
            Some("+") => Some(SignChoice::Plus),
            _ => None,
        };
        let t = match s {
            "b1" => Self::B1,
            "b1inv" => Self::B1Inv,
            "b2" => Self::B2,
            "b2inv" => Self::B2Inv,
            "g" => Self::G,
            "r" => Self::R,
            "bh" => Self::Bh,
            "bhinv" => Self::BhInv,
            "i" => Self::I,
            "j" => Self::J,
            "gk" => Self::Gk,
            _ => {
                if let Some(sg) = signed("t1") {
                    Self::T1(sg)
                } else if let Some(sg) = signed("t2") {
                    Self::T2(sg)
                } else if let Some(sg) = signed("fourier") {
                    Self::Fourier(sg)
                } else {
                    return Err(format!("unknown transform `{s}`; expected one of {NAMES}"));
                }
            }
        };
        Ok(t)
    }
}

impl fmt::Display for TransformName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::B1 => f.write_str("b1"),
            Self::B1Inv => f.write_str("b1inv"),
            Self::B2 => f.write_str("b2"),
            Self::B2Inv => f.write_str("b2inv"),
            Self::G => f.write_str("g"),
            Self::R => f.write_str("r"),
            Self::Bh => f.write_str("bh"),
            Self::BhInv => f.write_str("bhinv"),
            Self::I => f.write_str("i"),
            Self::J => f.write_str("j"),
            Self::T1(s) => write!(f, "t1{s}"),
            Self::T2(s) => write!(f, "t2{s}"),
            Self::Fourier(s) => write!(f, "fourier{s}"),
            Self::Gk => f.write_str("gk"),
        }
    }
}

/// Two-variable Fock input; `a2` documents are embedded first.
fn fock2(doc: &CoeffDocument) -> Result<FockCoeffs2> {
    doc.expect_basis(&[Basis::Fock2, Basis::A2])?;
    if doc.basis == Basis::A2 {
        Ok(a_subspace_embed(&ASubspaceCoeffs::try_from(doc)?))
    } else {
        FockCoeffs2::try_from(doc)
    }
}

pub fn apply(name: TransformName, doc: &CoeffDocument, k: u32) -> Result<CoeffDocument> {
    use TransformName as T;
    Ok(match name {
        T::B1 => (&b1_forward(&HermiteCoeffs::try_from(doc)?)).into(),
        T::B1Inv => (&b1_inverse(&FockCoeffs1::try_from(doc)?)).into(),
        T::B2 => (&b2_forward(&HermiteTensor::try_from(doc)?)).into(),
        T::B2Inv => (&b2_inverse(&fock2(doc)?)).into(),
        T::G => (&g_transform(&HermiteCoeffs::try_from(doc)?)).into(),
        T::R => (&r_transform(&fock2(doc)?)).into(),
        T::Bh => (&bh_forward(&HermiteCoeffs::<Quaternion>::try_from(doc)?)).into(),
        T::BhInv => (&bh_inverse(&SliceRegularSeries::try_from(doc)?)).into(),
        T::I => (&i_transform(&fock2(doc)?)).into(),
        T::J => (&j_transform(&SliceRegularSeries::try_from(doc)?)?).into(),
        T::T1(s) => (&t1_transform(&FockCoeffs1::try_from(doc)?, s)).into(),
        T::T2(s) => (&t2_transform(&fock2(doc)?, s)).into(),
        T::Fourier(s) => (&fourier_rescaled(&HermiteCoeffs::try_from(doc)?, s)).into(),
        T::Gk => (&gk_transform(&HermiteCoeffs::try_from(doc)?, k)?).into(),
    })
}
