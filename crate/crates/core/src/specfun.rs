//! Terminating confluent hypergeometric series, associated Laguerre
//! polynomials and log-gamma ratios.
//!
//! `₁F₁(-n, σ, x)` is evaluated through the Laguerre three-term recurrence,
//! using `L_n^p(x) = Γ(n+p+1)/(n! Γ(p+1)) · ₁F₁(-n, p+1, x)`. The prefactor is a
//! finite product, so no gamma function is formed on this path.

use crate::error::{domain, Result};
use crate::scalar::Real;

/// Associated Laguerre polynomial `L_n^p(x)` for `p > -1`.
pub fn laguerre<T: Real>(n: u32, p: T, x: T) -> Result<T> {
    if !(p > -T::one()) {
        return Err(domain(format!("Laguerre parameter p must exceed -1, got {p}")));
    }
    Ok(laguerre_recurrence(n, p, x))
}

/// Forward recurrence `(k+1) L_{k+1} = (2k+1+p-x) L_k - (k+p) L_{k-1}`, valid for any `p`.
pub(crate) fn laguerre_recurrence<T: Real>(n: u32, p: T, x: T) -> T {
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::one() + p - x;
    for k in 1..n {
        let kf = T::from_count(k);
        let next = ((T::lit(2.0) * kf + T::one() + p - x) * cur - (kf + p) * prev) / (kf + T::one());
        prev = cur;
        cur = next;
    }
    cur
}

/// The degree-`n` polynomial `₁F₁(-n, σ, x)`.
///
/// Fails when `σ ∈ {0, -1, …, -(n-1)}`, where the series has a zero denominator.
pub fn confluent_1f1_neg_int<T: Real>(n: u32, sigma: T, x: T) -> Result<T> {
    let mut factor = T::one();
    for k in 1..=n {
        let denom = sigma + T::from_count(k - 1);
        if denom == T::zero() {
            return Err(domain(format!(
                "₁F₁(-{n}, σ, x) undefined for σ = {sigma}: zero Pochhammer factor"
            )));
        }
        factor = factor * T::from_count(k) / denom;
    }
    Ok(laguerre_recurrence(n, sigma - T::one(), x) * factor)
}

// Godfrey's g = 7, n = 9 Lanczos coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero() && x.is_finite()) {
        return Err(domain(format!("log-gamma argument must be positive, got {x}")));
    }
    Ok(ln_gamma_positive(x))
}

fn ln_gamma_positive<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    let half_ln_2pi = T::lit(0.918_938_533_204_672_8);
    if x < half {
        return ln_gamma_positive(x + T::one()) - x.ln();
    }
    if x >= T::lit(10.0) {
        // Stirling series; the first omitted term is below 1e-14 for x ≥ 10.
        let inv = x.recip();
        let inv2 = inv * inv;
        let series = inv
            * (T::lit(1.0 / 12.0)
                - inv2
                    * (T::lit(1.0 / 360.0)
                        - inv2 * (T::lit(1.0 / 1260.0) - inv2 * (T::lit(1.0 / 1680.0) - inv2 * T::lit(1.0 / 1188.0)))));
        return (x - half) * x.ln() - x + half_ln_2pi + series;
    }
    let z = x - T::one();
    let mut acc = T::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (z + T::from_count(i as u32));
    }
    let t = z + T::lit(LANCZOS_G) + half;
    half_ln_2pi + (z + half) * t.ln() - t + acc.ln()
}

/// `Σ ln Γ(num_i) − Σ ln Γ(den_j)`.
pub fn log_gamma_ratio<T: Real>(num: &[T], den: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for &x in num {
        acc = acc + ln_gamma(x)?;
    }
    for &x in den {
        acc = acc - ln_gamma(x)?;
    }
    Ok(acc)
}

/// `ln n!` using exact products up to 20! and log-gamma above.
pub fn ln_factorial<T: Real>(n: u32) -> T {
    if n <= 20 {
        let f: u64 = (1..=u64::from(n)).product();
        T::lit(f as f64).ln()
    } else {
        ln_gamma_positive(T::from_count(n) + T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hypergeometric_examples() {
        for &(s, x) in &[(0.3, 1.0), (2.0, -4.0), (-1.5, 7.0)] {
            assert_eq!(confluent_1f1_neg_int(0, s, x).unwrap(), 1.0);
        }
        assert_relative_eq!(confluent_1f1_neg_int(1, 2.0, 2.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(confluent_1f1_neg_int(2, 1.5, 1.0).unwrap(), -1.0 / 15.0, max_relative = 1e-14);
    }

    #[test]
    fn hypergeometric_rejects_zero_pochhammer() {
        assert!(confluent_1f1_neg_int(3, 0.0, 1.0).is_err());
        assert!(confluent_1f1_neg_int(3, -2.0, 1.0).is_err());
        // σ = -3 only vanishes from the fourth term on
        assert!(confluent_1f1_neg_int(3, -3.0, 1.0).is_ok());
        assert!(confluent_1f1_neg_int(2, -0.5, 1.0).is_ok());
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 0.7, 3.0).unwrap(), 1.0);
        for x in [0.0, 0.5, 2.0, 9.0] {
            assert_relative_eq!(laguerre(1, 0.0, x).unwrap(), 1.0 - x, epsilon = 1e-15);
        }
        // exact rational series value -43/48
        assert_relative_eq!(laguerre(3, 0.5, 2.0).unwrap(), -43.0 / 48.0, max_relative = 1e-14);
        assert!(laguerre(2, -1.0, 1.0).is_err());
        assert!(laguerre(2, -1.5, 1.0).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_relative_eq!(log_gamma_ratio(&[5.0], &[4.0]).unwrap(), 4f64.ln(), max_relative = 1e-14);
        assert_eq!(log_gamma_ratio(&[1.0], &[1.0]).unwrap(), 0.0);
        assert_relative_eq!(log_gamma_ratio(&[200.5], &[199.5]).unwrap(), 199.5f64.ln(), max_relative = 1e-13);
        assert!(log_gamma_ratio(&[0.0], &[]).is_err());
        assert!(log_gamma_ratio(&[1.0], &[-2.0]).is_err());
    }

    #[test]
    fn gamma_reference_values() {
        assert_relative_eq!(ln_gamma(0.5).unwrap(), std::f64::consts::PI.sqrt().ln(), max_relative = 1e-14);
        assert_relative_eq!(ln_gamma(10.0).unwrap(), 362880f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(ln_gamma(0.1).unwrap(), 2.252_712_651_734_206, max_relative = 1e-13);
        assert_relative_eq!(ln_gamma(9.5).unwrap(), 11.689_333_420_797_268, max_relative = 1e-14);
        assert_relative_eq!(ln_gamma(438.62).unwrap(), 2_227.660_608_880_897_1, max_relative = 1e-14);
        for n in 0..30u32 {
            let expected: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
            assert_relative_eq!(ln_factorial::<f64>(n), expected, max_relative = 1e-13, epsilon = 1e-15);
        }
    }

    #[test]
    fn f32_evaluation() {
        assert_relative_eq!(laguerre(3, 0.5f32, 2.0).unwrap(), -43.0 / 48.0, max_relative = 1e-5);
        assert_relative_eq!(ln_gamma(10.0f32).unwrap(), 362880f32.ln(), max_relative = 1e-5);
    }

    proptest! {
        #[test]
        fn functional_equation(x in 0.05f64..300.0, k in 1u32..8) {
            let lhs = log_gamma_ratio(&[x + k as f64], &[x]).unwrap();
            let rhs: f64 = (0..k).map(|j| (x + j as f64).ln()).sum();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }

        #[test]
        fn hypergeometric_is_one_at_origin(n in 0u32..12, sigma in 0.1f64..50.0) {
            prop_assert!((confluent_1f1_neg_int(n, sigma, 0.0).unwrap() - 1.0).abs() < 1e-13);
        }
    }
}
