//! Globally adaptive 7/15-point Gauss–Kronrod quadrature.

use crate::error::{Error, Result};
use crate::scalar::Real;

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    pub abs: T,
    pub rel: T,
    /// Cap on the number of subintervals.
    pub max_intervals: usize,
}

impl<T: Real> Tolerance<T> {
    pub fn new(abs: T, rel: T) -> Self {
        Self {
            abs,
            rel,
            max_intervals: 20_000,
        }
    }

    /// Tight default: relative `1e-13` in `f64`, loosened for lower precision.
    pub fn tight() -> Self {
        let rel = T::tol_floor(1e-13);
        Self::new(T::zero(), rel)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<T> {
    pub value: T,
    pub abs_error: T,
    pub intervals: usize,
    pub evaluations: usize,
}

#[derive(Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn kronrod15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Segment<T> {
    let half = T::lit(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let fc = f(center);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half_len * T::lit(XGK[j]);
        let sum = f(center - dx) + f(center + dx);
        kronrod = kronrod + T::lit(WGK[j]) * sum;
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * sum;
        }
    }
    Segment {
        a,
        b,
        value: kronrod * half_len,
        error: ((kronrod - gauss) * half_len).abs(),
    }
}

/// Integrates `f` over `[a, b]`, starting from `panels` equal subintervals.
///
/// Subdivides the interval with the largest error estimate until the summed
/// estimate meets `max(tol.abs, tol.rel * |value|)`.
pub fn integrate<T: Real, F: FnMut(T) -> T>(
    mut f: F,
    a: T,
    b: T,
    panels: usize,
    tol: Tolerance<T>,
) -> Result<Integral<T>> {
    if !(a.is_finite() && b.is_finite()) || b < a {
        return Err(Error::Domain(format!("invalid integration range [{a}, {b}]")));
    }
    let panels = panels.max(1);
    let width = (b - a) / T::lit(panels as f64);
    let mut segments: Vec<Segment<T>> = (0..panels)
        .map(|i| {
            let lo = a + width * T::lit(i as f64);
            let hi = if i + 1 == panels { b } else { lo + width };
            kronrod15(&mut f, lo, hi)
        })
        .collect();
    let mut evaluations = 15 * panels;

    loop {
        let value = segments.iter().fold(T::zero(), |acc, s| acc + s.value);
        let error = segments.iter().fold(T::zero(), |acc, s| acc + s.error);
        if !value.is_finite() {
            return Err(Error::Quadrature(format!(
                "non-finite integrand on [{a}, {b}] after {evaluations} evaluations"
            )));
        }
        let target = tol.abs.max(tol.rel * value.abs());
        if error <= target {
            return Ok(Integral {
                value,
                abs_error: error,
                intervals: segments.len(),
                evaluations,
            });
        }
        if segments.len() >= tol.max_intervals {
            return Err(Error::Quadrature(format!(
                "estimated error {error:e} above target {target:e} on [{a}, {b}] \
                 with {} subintervals ({evaluations} evaluations, value {value:e})",
                segments.len()
            )));
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .fold((0, T::zero()), |(bi, be), (i, s)| if s.error > be { (i, s.error) } else { (bi, be) });
        let s = segments.swap_remove(worst);
        let mid = T::lit(0.5) * (s.a + s.b);
        if !(mid > s.a && mid < s.b) {
            return Err(Error::Quadrature(format!(
                "interval [{:e}, {:e}] cannot be bisected further (error {error:e}, target {target:e})",
                s.a, s.b
            )));
        }
        segments.push(kronrod15(&mut f, s.a, mid));
        segments.push(kronrod15(&mut f, mid, s.b));
        evaluations += 30;
    }
}
