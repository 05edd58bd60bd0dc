use boundstate::quadrature::{integrate, Tolerance};
use boundstate::specfun::{confluent_1f1_neg_int, laguerre, ln_factorial, ln_gamma};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap()
}

/// Terminating series for `₁F₁(-n; σ; x)` in exact arithmetic, with the sum of
/// absolute terms as a cancellation scale.
fn series_1f1(n: u32, sigma: f64, x: f64) -> (f64, f64) {
    let (sigma, x) = (rational(sigma), rational(x));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut scale = BigRational::one();
    for k in 0..n {
        let k_big = BigRational::from_integer(BigInt::from(k));
        let minus_n = BigRational::from_integer(BigInt::from(-(n as i64)));
        term = term * (&minus_n + &k_big) / (&sigma + &k_big) * &x
            / BigRational::from_integer(BigInt::from(k + 1));
        sum += &term;
        scale += term.abs();
    }
    (sum.to_f64().unwrap(), scale.to_f64().unwrap())
}

fn binomial(n: u32, p: f64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * (p + k as f64) / k as f64)
}

#[test]
fn confluent_matches_exact_series() {
    for n in 0..=8 {
        for &sigma in &[0.5, 1.5, 2.25, 7.0, 219.8] {
            for &x in &[0.0, 0.125, 1.0, 3.5, 12.0, 40.0] {
                let (exact, scale) = series_1f1(n, sigma, x);
                let got = confluent_1f1_neg_int(n, sigma, x).unwrap();
                assert!(
                    (got - exact).abs() <= 1e-12 * (1.0 + scale),
                    "1F1(-{n}; {sigma}; {x}) = {got}, exact {exact}"
                );
            }
        }
    }
}

#[test]
fn laguerre_matches_exact_series() {
    for n in 0..=8 {
        for &p in &[-0.5, 0.0, 0.5, 2.7, 437.6] {
            for &x in &[0.0, 0.5, 2.0, 9.0, 30.0] {
                let (f, scale) = series_1f1(n, p + 1.0, x);
                let b = binomial(n, p);
                let got = laguerre(n, p, x).unwrap();
                assert!(
                    (got - b * f).abs() <= 1e-12 * b * (1.0 + scale),
                    "L_{n}^{p}({x}) = {got}, exact {}",
                    b * f
                );
            }
        }
    }
}

#[test]
fn laguerre_orthogonality() {
    for &q in &[0.5, 1.5, 2.7] {
        for n in 0..=6u32 {
            for m in 0..=n {
                let weight = |x: f64| x.powf(q) * (-x).exp();
                let value = integrate(
                    |x| weight(x) * laguerre(n, q, x).unwrap() * laguerre(m, q, x).unwrap(),
                    0.0,
                    120.0,
                    32,
                    Tolerance::new(1e-14, 1e-13),
                )
                .unwrap()
                .value;
                let expected = if n == m {
                    (ln_gamma(n as f64 + q + 1.0).unwrap() - ln_factorial::<f64>(n)).exp()
                } else {
                    0.0
                };
                let scale = expected.abs().max(1.0);
                assert!(
                    (value - expected).abs() < 1e-8 * scale,
                    "q = {q}, ({n}, {m}): {value} vs {expected}"
                );
            }
        }
    }
}

#[test]
fn invalid_parameters() {
    assert!(laguerre(3, -1.0, 1.0).is_err());
    assert!(confluent_1f1_neg_int(3, -1.0, 1.0).is_err());
    assert!(confluent_1f1_neg_int(0, -1.0, 1.0).is_ok());
    assert!(ln_gamma(0.0).is_err());
}
