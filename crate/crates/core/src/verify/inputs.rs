//! Seeded random inputs. Coefficient magnitudes decay as `1/√m!`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numerics::special::factorial;
use crate::numerics::Quaternion;
use crate::spaces::{ASubspaceCoeffs, FockCoeffs2, Grid, HermiteCoeffs};

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn unit(r: &mut ChaCha8Rng) -> f64 {
    r.random_range(-1.0..1.0)
}

pub fn complex_coeffs(r: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..=n)
        .map(|m| Complex64::new(unit(r), unit(r)) / factorial(m).sqrt())
        .collect()
}

pub fn quaternion_coeffs(r: &mut ChaCha8Rng, n: usize) -> Vec<Quaternion> {
    (0..=n)
        .map(|m| Quaternion::new(unit(r), unit(r), unit(r), unit(r)) / factorial(m).sqrt())
        .collect()
}

pub fn hermite(r: &mut ChaCha8Rng, nu: f64, n: usize) -> HermiteCoeffs {
    HermiteCoeffs::new(nu, complex_coeffs(r, n)).expect("nu validated by caller")
}

pub fn hermite_quaternion(r: &mut ChaCha8Rng, nu: f64, n: usize) -> HermiteCoeffs<Quaternion> {
    HermiteCoeffs::new(nu, quaternion_coeffs(r, n)).expect("nu validated by caller")
}

pub fn a_subspace(r: &mut ChaCha8Rng, nu: f64, n: usize) -> ASubspaceCoeffs {
    ASubspaceCoeffs::new(nu, complex_coeffs(r, n)).expect("nu validated by caller")
}

/// Total degree at most `n`.
pub fn fock2(r: &mut ChaCha8Rng, nu: f64, n: usize) -> FockCoeffs2 {
    let g = Grid::from_fn(n + 1, n + 1, |m, k| {
        if m + k <= n {
            Complex64::new(unit(r), unit(r)) / factorial(m + k).sqrt()
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    FockCoeffs2::new(nu, g).expect("nu validated by caller")
}

pub fn complex_point(r: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    Complex64::new(unit(r), unit(r)) * (radius / std::f64::consts::SQRT_2)
}

pub fn quaternion_point(r: &mut ChaCha8Rng, radius: f64) -> Quaternion {
    Quaternion::new(unit(r), unit(r), unit(r), unit(r)) * (radius / 2.0)
}
