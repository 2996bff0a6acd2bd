//! Slice regular functions on the quaternions and the transforms linking
//! them to the complex Fock spaces.

pub mod bridge;
pub mod series;

pub use bridge::{
    bh_forward, bh_forward_complex, bh_inverse, bh_inverse_quad, bh_inverse_quad_coeffs,
    ckernel_residual, ext_c_psi2, i_prefactor, i_preimage, i_transform, i_transform_quad,
    ikernel_residual, j_transform, ji_roundtrip_residual, KernelFit, SLICE_TOL,
};
pub use series::{
    ext_from_slice, kernel_kh, SliceInvariantFlag, SliceRegularSeries, MAX_KERNEL_TERMS,
};
