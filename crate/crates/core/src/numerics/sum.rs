//! Compensated summation (Neumaier's variant of Kahan summation, built on
//! the TwoSum error-free transform).

use num_complex::Complex64;

use super::quaternion::Quaternion;

/// Error-free transform: `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    err: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.sum, x);
        self.sum = s;
        self.err += e;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.err
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct QuaternionSum {
    parts: [CompensatedSum; 4],
}

impl QuaternionSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, q: Quaternion) {
        self.parts[0].add(q.w);
        self.parts[1].add(q.x);
        self.parts[2].add(q.y);
        self.parts[3].add(q.z);
    }

    pub fn value(&self) -> Quaternion {
        Quaternion::new(
            self.parts[0].value(),
            self.parts[1].value(),
            self.parts[2].value(),
            self.parts[3].value(),
        )
    }
}

pub fn sum_f64<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut acc = CompensatedSum::new();
    it.into_iter().for_each(|x| acc.add(x));
    acc.value()
}

pub fn sum_complex<I: IntoIterator<Item = Complex64>>(it: I) -> Complex64 {
    let mut acc = ComplexSum::new();
    it.into_iter().for_each(|z| acc.add(z));
    acc.value()
}

pub fn sum_quaternion<I: IntoIterator<Item = Quaternion>>(it: I) -> Quaternion {
    let mut acc = QuaternionSum::new();
    it.into_iter().for_each(|q| acc.add(q));
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_low_bits() {
        let xs = [1e16, 1.0, -1e16, 1.0];
        assert_eq!(sum_f64(xs), 2.0);
        assert_ne!(xs.iter().sum::<f64>(), 2.0);
    }

    #[test]
    fn two_sum_is_exact() {
        let (s, e) = two_sum(0.1, 0.2);
        assert_eq!(s, 0.1 + 0.2);
        assert!(e != 0.0);
    }
}
