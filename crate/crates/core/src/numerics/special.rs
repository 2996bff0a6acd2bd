//! Factorials and binomials. Exact integer products up to index 20, log-gamma
//! above it.

use statrs::function::gamma::ln_gamma;

const EXACT_LIMIT: usize = 20;

fn exact_factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

pub fn ln_factorial(m: usize) -> f64 {
    if m <= EXACT_LIMIT {
        (exact_factorial(m) as f64).ln()
    } else {
        ln_gamma(m as f64 + 1.0)
    }
}

pub fn factorial(m: usize) -> f64 {
    if m <= EXACT_LIMIT {
        exact_factorial(m) as f64
    } else {
        ln_factorial(m).exp()
    }
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= EXACT_LIMIT {
        let k = k.min(n - k);
        let mut acc: u64 = 1;
        for j in 0..k as u64 {
            acc = acc * (n as u64 - j) / (j + 1);
        }
        acc as f64
    } else {
        (ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k))
            .exp()
            .round()
    }
}

/// `m! / nu^m`, the Fock-space weight, computed in log space for large `m`.
pub fn factorial_over_power(m: usize, nu: f64) -> f64 {
    if m <= EXACT_LIMIT {
        factorial(m) / nu.powi(m as i32)
    } else {
        (ln_factorial(m) - m as f64 * nu.ln()).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials_are_exact() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
        assert_eq!(factorial(20), 2_432_902_008_176_640_000.0);
    }

    #[test]
    fn log_branch_is_continuous() {
        let direct = factorial(20) * 21.0 * 22.0;
        assert!((factorial(22) / direct - 1.0).abs() < 1e-13);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(16, 8), 12870.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(binomial(30, 15), 155_117_520.0);
        // Pascal rule across the log-space threshold
        assert_eq!(binomial(22, 7), binomial(21, 6) + binomial(21, 7));
    }

    #[test]
    fn large_weights_do_not_overflow() {
        let w = factorial_over_power(150, 0.5);
        assert!(w.is_finite() && w > 0.0);
    }
}
