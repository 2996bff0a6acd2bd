//! Real quaternions `w + x i + y j + z k` and the imaginary-unit sphere.
//!
//! Multiplication is the Hamilton product with `i j = k`, `j k = i`,
//! `k i = j`. Products are written left to right: `a * b` multiplies `a` on
//! the right by `b`, so in `q^m * c` the coefficient `c` acts from the right.
//! Complex numbers embed into the slice `C_i` as `re + im i`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Embeds `c` into the slice `C_i`.
    pub fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        // hypot chain avoids overflow for large components
        self.w.hypot(self.x).hypot(self.y.hypot(self.z))
    }

    pub fn inverse(self) -> Option<Self> {
        let n2 = self.norm_sqr();
        (n2 > 0.0).then(|| self.conj() * (1.0 / n2))
    }

    /// Vector (pure imaginary) part.
    pub fn vector(self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    /// `|j| + |k|` component magnitude; zero exactly on the slice `C_i`.
    pub fn off_slice_i(self) -> f64 {
        self.y.abs() + self.z.abs()
    }

    /// The complex number `w + x i` when `self` lies in `C_i`.
    pub fn slice_i_part(self) -> Complex64 {
        Complex64::new(self.w, self.x)
    }

    pub fn powi(self, m: usize) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..m {
            acc *= self;
        }
        acc
    }

    /// 2x2 complex matrix `[[a, b], [-conj(b), conj(a)]]` with
    /// `q = a + b j`, `a = w + x i`, `b = y + z i`. The map is an injective
    /// algebra homomorphism, used as an independent product oracle.
    pub fn to_complex_matrix(self) -> [[Complex64; 2]; 2] {
        let a = Complex64::new(self.w, self.x);
        let b = Complex64::new(self.y, self.z);
        [[a, b], [-b.conj(), a.conj()]]
    }

    pub fn from_complex_matrix(m: [[Complex64; 2]; 2]) -> Self {
        Self::new(m[0][0].re, m[0][0].im, m[0][1].re, m[0][1].im)
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Hamilton product.
pub fn quat_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )
}

impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        quat_mul(self, rhs)
    }
}

impl MulAssign for Quaternion {
    fn mul_assign(&mut self, rhs: Quaternion) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        self * (1.0 / s)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, r: Quaternion) {
        *self = *self + r;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, r: Quaternion) -> Quaternion {
        Quaternion::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, r: Quaternion) {
        *self = *self - r;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl From<Complex64> for Quaternion {
    fn from(c: Complex64) -> Self {
        Quaternion::from_complex(c)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

/// A unit pure quaternion `I`, so that `I^2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit(Quaternion::I);
    pub const J: ImaginaryUnit = ImaginaryUnit(Quaternion::J);
    pub const K: ImaginaryUnit = ImaginaryUnit(Quaternion::K);

    /// Normalizes the direction `(x, y, z)`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = x.hypot(y).hypot(z);
        if !(n > 0.0 && n.is_finite()) {
            return Err(invalid(
                "imaginary unit direction must be non-zero and finite",
            ));
        }
        Ok(Self(Quaternion::new(0.0, x / n, y / n, z / n)))
    }

    pub fn as_quaternion(self) -> Quaternion {
        self.0
    }

    /// `re + im I` in the slice `C_I`.
    pub fn embed(self, c: Complex64) -> Quaternion {
        Quaternion::real(c.re) + self.0 * c.im
    }

    /// Writes `q = x + y I` with `y >= 0` and `I` a unit; real `q` yields
    /// `I = i` and `y = 0`.
    pub fn decompose(q: Quaternion) -> (f64, f64, ImaginaryUnit) {
        let v = q.vector();
        let y = v.norm();
        if y == 0.0 {
            (q.w, 0.0, ImaginaryUnit::I)
        } else {
            (q.w, y, ImaginaryUnit(v / y))
        }
    }
}
