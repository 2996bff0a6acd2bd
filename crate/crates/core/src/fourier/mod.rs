//! Rescaled Fourier transform, dilations, the transforms `T1`/`T2`, and the
//! iterated transform `G_k`.

pub mod appendix;
pub mod rescaled;

pub use appendix::{
    derived_constant, doubling_factor, gk_constant, gk_constant_report, gk_transform,
    printed_constant, psi_k_eval, psi_k_iterated, psi_k_symbol_mismatch, GkConstantReport,
    HyperFockCoeffs, MAX_LEVEL,
};
pub use rescaled::{
    fourier_rescaled, fourier_rescaled_quad, fourier_rescaled_quad_coeffs, gamma_dilation,
    intertwining_residual, t1_definition, t1_transform, t2_definition, t2_transform, Dilate,
    SignChoice,
};
