//! Numerov shooting solver for the radial equation
//! `u'' = [ (V(r) - E)/λ + ℓ(ℓ+1)/r² ] u`, `λ = ħ²/2m`.
//!
//! Eigenvalues are located by bisection on the node count of a single outward
//! shot: `E` is too high exactly when the solution on `[r_min, r_max]` has more
//! than `n` sign changes. Nothing here uses the closed-form spectra.

use crate::error::{domain, Error, Result};
use crate::potentials::RadialPotential;
use crate::scalar::Real;

/// Relative dead-band below which samples are treated as zero when counting nodes.
pub const NODE_DEAD_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumerovConfig<T> {
    pub r_min: T,
    pub r_max: T,
    /// Number of grid intervals between `r_min` and `r_max`.
    pub steps: usize,
    pub energy_bracket: (T, T),
    pub energy_tol: T,
    pub max_bisections: u32,
}

/// Outward solution on the uniform grid `r_i = r_min + i·step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Shot<T> {
    pub r_min: T,
    pub step: T,
    /// `u(r_i)`, rescaled as needed to stay finite; only ratios are meaningful.
    pub values: Vec<T>,
    /// Sign changes, counted with a dead-band relative to the running maximum.
    pub nodes: usize,
}

impl<T: Real> Shot<T> {
    pub fn radius(&self, i: usize) -> T {
        self.r_min + self.step * T::lit(i as f64)
    }

    pub fn samples(&self) -> Vec<(T, T)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.radius(i), v))
            .collect()
    }
}

impl<T: Real> NumerovConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > T::zero() && self.r_min < self.r_max && self.r_max.is_finite()) {
            return Err(domain(format!(
                "need 0 < r_min < r_max, got r_min = {}, r_max = {}",
                self.r_min, self.r_max
            )));
        }
        if self.steps < 1000 {
            return Err(domain(format!("need at least 1000 steps, got {}", self.steps)));
        }
        if !(self.energy_tol > T::zero()) {
            return Err(domain(format!("energy tolerance must be positive, got {}", self.energy_tol)));
        }
        let (lo, hi) = self.energy_bracket;
        if !(lo < hi && lo.is_finite() && hi.is_finite()) {
            return Err(domain(format!("energy bracket must satisfy lo < hi, got ({lo}, {hi})")));
        }
        Ok(())
    }

    pub fn step(&self) -> T {
        (self.r_max - self.r_min) / T::lit(self.steps as f64)
    }

    /// Builds a configuration for level `n_target` from the potential alone.
    ///
    /// A coarse shooting pass locates the level; the final grid extends past the
    /// outer turning point until the WKB attenuation `∫κ dr` reaches 20, and the
    /// step resolves the local wavelength with `k h ≤ 0.005`.
    pub fn auto<P: RadialPotential<T> + ?Sized>(
        pot: &P,
        lambda: T,
        ell: u32,
        n_target: u32,
    ) -> Result<Self> {
        let probe = Probe::new(pot, lambda, ell)?;
        let coarse = Resolution::Coarse;

        let mut width = lambda / (probe.length * probe.length);
        let lo = probe.v_min;
        let mut hi = lo + width;
        let mut found = false;
        for _ in 0..=60 {
            if let Some(c) = pot.asymptote() {
                if hi >= c {
                    hi = c - (c - lo) * T::lit(1e-9);
                }
            }
            let cfg = probe.grid_for(hi, coarse, (lo, hi))?;
            if numerov_integrate(pot, lambda, ell, hi, &cfg)?.nodes > n_target as usize {
                found = true;
                break;
            }
            if pot.asymptote().is_some_and(|c| hi >= c - (c - lo) * T::lit(2e-9)) {
                break;
            }
            width = width * T::lit(2.0);
            hi = lo + width;
        }
        if !found {
            return Err(Error::NoEigenvalue(format!(
                "could not bracket level n = {n_target}, ℓ = {ell}: fewer than {} nodes below E = {hi}",
                n_target + 1
            )));
        }

        let (mut a, mut b) = (lo, hi);
        let coarse_tol = (hi - lo) * T::lit(1e-7);
        while b - a > coarse_tol {
            let mid = T::lit(0.5) * (a + b);
            let cfg = probe.grid_for(mid, coarse, (lo, hi))?;
            if numerov_integrate(pot, lambda, ell, mid, &cfg)?.nodes > n_target as usize {
                b = mid;
            } else {
                a = mid;
            }
        }
        let estimate = T::lit(0.5) * (a + b);
        let local = probe.local_depth(estimate);
        let margin = local * T::lit(1e-3);
        let mut cfg = probe.grid_for(estimate, Resolution::Fine, (estimate - margin, estimate + margin))?;
        cfg.energy_tol = (local + estimate.abs()) * T::tol_floor(1e-13);
        Ok(cfg)
    }
}

#[derive(Clone, Copy)]
enum Resolution {
    Coarse,
    Fine,
}

impl Resolution {
    fn kh<T: Real>(self) -> T {
        match self {
            Resolution::Coarse => T::lit(0.05),
            Resolution::Fine => T::lit(0.005),
        }
    }
}

/// Effective-potential survey used to lay out grids.
struct Probe<'a, T, P: ?Sized> {
    pot: &'a P,
    lambda: T,
    centrifugal: T,
    length: T,
    r_eq: T,
    v_min: T,
    indicial: T,
}

impl<'a, T: Real, P: RadialPotential<T> + ?Sized> Probe<'a, T, P> {
    fn new(pot: &'a P, lambda: T, ell: u32) -> Result<Self> {
        if !(lambda > T::zero()) {
            return Err(domain(format!("lambda must be positive, got {lambda}")));
        }
        let l = T::from_count(ell);
        let centrifugal = l * (l + T::one());
        let length = pot.length_scale();
        let indicial = indicial_exponent(pot, lambda, ell)?;
        let mut probe = Self {
            pot,
            lambda,
            centrifugal,
            length,
            r_eq: length,
            v_min: T::infinity(),
            indicial,
        };
        let points = 4000;
        for i in 0..=points {
            let t = T::lit(-3.0 + 6.0 * i as f64 / points as f64);
            let r = length * T::lit(10.0).powf(t);
            let v = probe.v_eff(r);
            if v < probe.v_min {
                probe.v_min = v;
                probe.r_eq = r;
            }
        }
        Ok(probe)
    }

    fn v_eff(&self, r: T) -> T {
        self.pot.value(r) + self.lambda * self.centrifugal / (r * r)
    }

    fn outer_turning_point(&self, e: T) -> T {
        let cap = self.length * T::lit(1e4);
        let mut r = self.r_eq;
        while self.v_eff(r) < e && r < cap {
            r = r * T::lit(1.01);
        }
        r.min(cap)
    }

    /// `max(E - V_eff)` over the classically allowed region away from the origin.
    fn local_depth(&self, e: T) -> T {
        let rt = self.outer_turning_point(e);
        let samples = 2000;
        let mut depth = T::zero();
        for i in 0..=samples {
            let r = rt * T::lit(0.05 + 0.95 * i as f64 / samples as f64);
            depth = depth.max(e - self.v_eff(r));
        }
        depth.max(self.lambda / (self.length * self.length))
    }

    fn grid_for(&self, e: T, res: Resolution, bracket: (T, T)) -> Result<NumerovConfig<T>> {
        let rt = self.outer_turning_point(e);
        let cap = T::lit(200.0) * rt.max(self.length);

        // WKB attenuation into the outer forbidden region
        let mut r = rt;
        let mut attenuation = T::zero();
        let dr = T::lit(2e-3) * rt.max(self.length);
        while attenuation < T::lit(20.0) && r < cap {
            let kappa = ((self.v_eff(r + dr * T::lit(0.5)) - e) / self.lambda).max(T::zero()).sqrt();
            attenuation = attenuation + kappa * dr;
            r = r + dr;
        }
        let r_max = r.max(T::lit(1.5) * rt);

        let k_ref = (self.local_depth(e) / self.lambda).sqrt();
        let h_target = res.kh::<T>() / k_ref;
        let steps = (r_max / h_target).ceil().to_usize().unwrap_or(usize::MAX).clamp(4000, 2_000_000);
        let h = r_max / T::lit(steps as f64);

        // keep h² f / 12 small at the first grid point
        let s = self.indicial;
        let stiff = h * (s * (s - T::one()) / T::lit(1.2)).sqrt();
        let r_min = (T::lit(1e-4) * self.length).max(stiff).min(T::lit(0.1) * r_max);

        Ok(NumerovConfig {
            r_min,
            r_max,
            steps,
            energy_bracket: bracket,
            energy_tol: (bracket.1 - bracket.0).abs() * T::lit(1e-9),
            max_bisections: 200,
        })
    }
}

/// Regular-solution exponent `s` with `s(s-1) = ℓ(ℓ+1) + C/λ`, `C` the `1/r²` strength.
pub fn indicial_exponent<T: Real, P: RadialPotential<T> + ?Sized>(
    pot: &P,
    lambda: T,
    ell: u32,
) -> Result<T> {
    let l = T::from_count(ell);
    let quarter = T::lit(0.25);
    let disc = quarter + l * (l + T::one()) + pot.near_origin().inverse_square / lambda;
    if disc < T::zero() {
        return Err(domain(format!(
            "inverse-square term too attractive for ℓ = {ell}: no regular solution at the origin"
        )));
    }
    Ok(T::lit(0.5) + disc.sqrt())
}

/// Integrates outward from `cfg.r_min` to `cfg.r_max` at fixed energy.
///
/// The first two points follow the Frobenius series `r^s (1 + c₁ r + c₂ r²)`
/// of the regular solution. The running solution is rescaled whenever it
/// grows large, so the integration never overflows.
pub fn numerov_integrate<T: Real, P: RadialPotential<T> + ?Sized>(
    pot: &P,
    lambda: T,
    ell: u32,
    energy: T,
    cfg: &NumerovConfig<T>,
) -> Result<Shot<T>> {
    if !(cfg.r_min > T::zero() && cfg.r_min < cfg.r_max) || cfg.steps < 2 {
        return Err(domain(format!(
            "invalid grid: r_min = {}, r_max = {}, steps = {}",
            cfg.r_min, cfg.r_max, cfg.steps
        )));
    }
    let s = indicial_exponent(pot, lambda, ell)?;
    let origin = pot.near_origin();
    let two = T::lit(2.0);
    let b = origin.inverse / lambda;
    let k = (origin.constant - energy) / lambda;
    let c1 = b / (two * s);
    let c2 = (b * c1 + k) / (T::lit(4.0) * s + two);

    let l = T::from_count(ell);
    let centrifugal = l * (l + T::one());
    let h = cfg.step();
    let h2_12 = h * h / T::lit(12.0);
    let f = |r: T| (pot.value(r) - energy) / lambda + centrifugal / (r * r);
    let radius = |i: usize| cfg.r_min + h * T::lit(i as f64);

    let series = |r: T| T::one() + c1 * r + c2 * r * r;
    let r0 = radius(0);
    let r1 = radius(1);
    let u0 = (s * (r0 / r1).ln()).exp() * series(r0);
    let u1 = series(r1);

    let n = cfg.steps + 1;
    let mut values = Vec::with_capacity(n);
    values.push(u0);
    values.push(u1);

    let big = T::max_value().sqrt().sqrt();
    let dead = T::lit(NODE_DEAD_BAND);
    let mut running_max = u0.abs().max(u1.abs());
    let mut last_sign = 0i8;
    let mut nodes = 0usize;
    let track = |v: T, running_max: T, last_sign: &mut i8, nodes: &mut usize| {
        if v.abs() > dead * running_max {
            let sign = if v > T::zero() { 1 } else { -1 };
            if *last_sign != 0 && sign != *last_sign {
                *nodes += 1;
            }
            *last_sign = sign;
        }
    };
    track(u0, running_max, &mut last_sign, &mut nodes);
    track(u1, running_max, &mut last_sign, &mut nodes);

    let mut w_prev = T::one() - h2_12 * f(r0);
    let mut w_cur = T::one() - h2_12 * f(r1);
    for i in 1..cfg.steps {
        let w_next = T::one() - h2_12 * f(radius(i + 1));
        if !(w_next > T::zero()) {
            return Err(domain(format!(
                "grid too coarse near r = {}: h² f / 12 = {} exceeds 1; raise r_min or steps",
                radius(i + 1),
                T::one() - w_next
            )));
        }
        let u_next = ((T::lit(12.0) - T::lit(10.0) * w_cur) * values[i] - w_prev * values[i - 1]) / w_next;
        if !u_next.is_finite() {
            return Err(Error::NoEigenvalue(format!(
                "Numerov step produced a non-finite value at r = {}",
                radius(i + 1)
            )));
        }
        values.push(u_next);
        running_max = running_max.max(u_next.abs());
        track(u_next, running_max, &mut last_sign, &mut nodes);
        if u_next.abs() > big {
            let scale = u_next.abs().recip();
            for v in values.iter_mut() {
                *v = *v * scale;
            }
            running_max = running_max * scale;
        }
        w_prev = w_cur;
        w_cur = w_next;
    }

    Ok(Shot {
        r_min: cfg.r_min,
        step: h,
        values,
        nodes,
    })
}

/// Strict sign changes, ignoring samples with `|v| ≤ 1e-12 · max|v|`.
pub fn count_nodes<T: Real>(samples: &[T]) -> usize {
    let max = samples.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let dead = T::lit(NODE_DEAD_BAND) * max;
    let mut last = 0i8;
    let mut nodes = 0;
    for &v in samples {
        if v.abs() > dead {
            let sign = if v > T::zero() { 1 } else { -1 };
            if last != 0 && sign != last {
                nodes += 1;
            }
            last = sign;
        }
    }
    nodes
}

/// Bisects on the node count until the bracket is narrower than `cfg.energy_tol`.
///
/// The bracket is widened (up to 60 doublings per side) when it does not
/// contain the level, never past the potential's asymptote.
pub fn solve_eigenvalue<T: Real, P: RadialPotential<T> + ?Sized>(
    pot: &P,
    lambda: T,
    ell: u32,
    n_target: u32,
    cfg: &NumerovConfig<T>,
) -> Result<T> {
    cfg.validate()?;
    let target = n_target as usize;
    let nodes = |e: T| numerov_integrate(pot, lambda, ell, e, cfg).map(|s| s.nodes);
    let (mut lo, mut hi) = cfg.energy_bracket;

    let mut width = hi - lo;
    let mut widened = 0;
    while nodes(lo)? > target {
        if widened == 60 {
            return Err(Error::NoEigenvalue(format!(
                "lower bracket still above level n = {n_target} at E = {lo}"
            )));
        }
        hi = hi.min(lo);
        lo = lo - width;
        width = width * T::lit(2.0);
        widened += 1;
    }

    let mut width = hi - lo;
    let mut widened = 0;
    while nodes(hi)? <= target {
        let ceiling = pot.asymptote().map(|c| c - (c - lo).abs() * T::lit(1e-12));
        if widened == 60 || ceiling.is_some_and(|c| hi >= c) {
            return Err(Error::NoEigenvalue(format!(
                "could not bracket level n = {n_target}, ℓ = {ell} from above (reached E = {hi}, \
                 {} nodes)",
                nodes(hi)?
            )));
        }
        lo = lo.max(hi);
        hi = hi + width;
        if let Some(c) = ceiling {
            hi = hi.min(c);
        }
        width = width * T::lit(2.0);
        widened += 1;
    }

    let mut iterations = 0;
    while hi - lo > cfg.energy_tol {
        if iterations == cfg.max_bisections {
            return Err(Error::NoEigenvalue(format!(
                "bisection did not reach tolerance {} in {} steps (bracket [{lo}, {hi}])",
                cfg.energy_tol, cfg.max_bisections
            )));
        }
        let mid = T::lit(0.5) * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if nodes(mid)? > target {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }

    let found = nodes(lo)?;
    if found != target {
        return Err(Error::NoEigenvalue(format!(
            "converged bracket [{lo}, {hi}] has {found} nodes below, expected {n_target}"
        )));
    }
    Ok(T::lit(0.5) * (lo + hi))
}

/// [`NumerovConfig::auto`] followed by [`solve_eigenvalue`].
pub fn solve_auto<T: Real, P: RadialPotential<T> + ?Sized>(
    pot: &P,
    lambda: T,
    ell: u32,
    n_target: u32,
) -> Result<T> {
    let cfg = NumerovConfig::auto(pot, lambda, ell, n_target)?;
    solve_eigenvalue(pot, lambda, ell, n_target, &cfg)
}

/// `max_i |R''_fd(r_i) - f(r_i) R(r_i)| / max|R|` over interior points of a
/// uniform grid, with the centered second difference for `R''`.
pub fn residual_norm<T: Real, P: RadialPotential<T> + ?Sized>(
    pot: &P,
    lambda: T,
    ell: u32,
    energy: T,
    samples: &[(T, T)],
) -> Result<T> {
    if samples.len() < 5 {
        return Err(domain(format!("need at least 5 samples, got {}", samples.len())));
    }
    let h = samples[1].0 - samples[0].0;
    if !(h > T::zero()) {
        return Err(domain("grid must be ascending"));
    }
    let slack = h * T::lit(1e-6);
    if samples.windows(2).any(|w| ((w[1].0 - w[0].0) - h).abs() > slack) {
        return Err(domain("grid must be uniform"));
    }
    let l = T::from_count(ell);
    let centrifugal = l * (l + T::one());
    let scale = samples.iter().fold(T::zero(), |m, s| m.max(s.1.abs()));
    if scale == T::zero() {
        return Ok(T::zero());
    }
    let two = T::lit(2.0);
    let worst = samples.windows(3).fold(T::zero(), |acc, w| {
        let (r, v) = w[1];
        let second = (w[2].1 - two * v + w[0].1) / (h * h);
        let f = (pot.value(r) - energy) / lambda + centrifugal / (r * r);
        acc.max((second - f * v).abs())
    });
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{FnPotential, MieParams, PseudoharmonicParams};
    use approx::assert_relative_eq;

    fn oscillator() -> PseudoharmonicParams<f64> {
        PseudoharmonicParams::new(0.5, 0.0, 0.0, 0.5).unwrap()
    }

    fn fixed_cfg(r_max: f64, steps: usize) -> NumerovConfig<f64> {
        NumerovConfig {
            r_min: 1e-6,
            r_max,
            steps,
            energy_bracket: (0.0, 1.0),
            energy_tol: 1e-12,
            max_bisections: 200,
        }
    }

    #[test]
    fn count_nodes_examples() {
        assert_eq!(count_nodes(&[1.0, 2.0, 0.5]), 0);
        let n = 3000;
        let sin: Vec<f64> = (1..n).map(|i| (3.0 * std::f64::consts::PI * i as f64 / n as f64).sin()).collect();
        assert_eq!(count_nodes(&sin), 2);
        assert_eq!(count_nodes(&[1.0, 1e-15, -1e-15, 1.0]), 0);
        assert_eq!(count_nodes(&[1.0, 0.0, -1.0]), 1);
    }

    #[test]
    fn free_particle_node_spacing() {
        let free = FnPotential::new(|_r: f64| 0.0, 1.0);
        let e = 2.0;
        let shot = numerov_integrate(&free, 0.5, 0, e, &fixed_cfg(30.0, 30_000)).unwrap();
        // u = sin(k r), k = sqrt(E/λ) = 2: zeros every π/2
        let expected = (30.0 / (std::f64::consts::PI / 2.0)).floor() as usize;
        assert_eq!(shot.nodes, expected);
        let i = 15_000;
        let r = shot.radius(i);
        let ratio = shot.values[i] / shot.values[1000];
        assert_relative_eq!(ratio, (2.0 * r).sin() / (2.0 * shot.radius(1000)).sin(), max_relative = 1e-6);
    }

    #[test]
    fn oscillator_shots_bracket_ground_state() {
        let p = oscillator();
        let cfg = fixed_cfg(8.0, 8000);
        let near = numerov_integrate(&p, 0.5, 0, 1.5 - 1e-6, &cfg).unwrap();
        assert_eq!(near.nodes, 0);
        let peak = near.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let at_five = near.values[(5.0 / cfg.step()) as usize] / peak;
        assert!(at_five.abs() < 1e-4, "u(5) = {at_five}");
        assert_eq!(numerov_integrate(&p, 0.5, 0, 1.5 + 1e-6, &cfg).unwrap().nodes, 1);
        let above = numerov_integrate(&p, 0.5, 0, 1.6, &cfg).unwrap();
        assert_eq!(above.nodes, 1);
        assert!(above.values[cfg.steps] < 0.0);
        let below = numerov_integrate(&p, 0.5, 0, 1.4, &cfg).unwrap();
        assert_eq!(below.nodes, 0);
        assert!(below.values[cfg.steps] > 0.0);
    }

    #[test]
    fn oscillator_eigenvalues() {
        let p = oscillator();
        for (n, ell, exact) in [(0u32, 0u32, 1.5), (1, 0, 3.5), (0, 2, 3.5), (2, 1, 6.5)] {
            let e = solve_auto(&p, 0.5, ell, n).unwrap();
            assert!((e - exact).abs() < 1e-8, "({n},{ell}): {e}");
        }
    }

    #[test]
    fn coulomb_eigenvalues() {
        let p = MieParams::coulomb(-1.0).unwrap();
        let e: f64 = solve_auto(&p, 0.5, 0, 0).unwrap();
        assert!((e + 0.5).abs() < 1e-7, "{e}");
        let e: f64 = solve_auto(&p, 0.5, 1, 1).unwrap();
        assert!((e + 1.0 / 18.0).abs() < 1e-7, "{e}");
    }

    #[test]
    fn bracket_widening() {
        let p = oscillator();
        let cfg = NumerovConfig {
            energy_bracket: (10.0, 10.5),
            ..fixed_cfg(10.0, 20_000)
        };
        let e = solve_eigenvalue(&p, 0.5, 0, 0, &cfg).unwrap();
        assert!((e - 1.5).abs() < 1e-7);
        let cfg = NumerovConfig {
            energy_bracket: (0.1, 0.2),
            ..cfg
        };
        let e = solve_eigenvalue(&p, 0.5, 0, 1, &cfg).unwrap();
        assert!((e - 3.5).abs() < 1e-7);
    }

    #[test]
    fn bracket_exhaustion() {
        // shallow Kratzer well in natural units supports few levels below c = 0
        let p = MieParams::kratzer(0.05, 1.0, 0.5).unwrap();
        let cfg = NumerovConfig {
            energy_bracket: (-0.05, -0.04),
            ..fixed_cfg(400.0, 40_000)
        };
        let err = solve_eigenvalue(&p, 0.5, 0, 30, &cfg).unwrap_err();
        assert!(matches!(err, Error::NoEigenvalue(_)), "{err}");
    }

    #[test]
    fn config_validation() {
        let good = fixed_cfg(8.0, 1000);
        assert!(good.validate().is_ok());
        assert!(NumerovConfig { r_min: 0.0, ..good }.validate().is_err());
        assert!(NumerovConfig { steps: 999, ..good }.validate().is_err());
        assert!(NumerovConfig { energy_tol: 0.0, ..good }.validate().is_err());
        assert!(NumerovConfig { r_max: 1e-7, ..good }.validate().is_err());
    }

    #[test]
    fn deterministic() {
        let p = MieParams::modified_kratzer(2.0, 1.0, 0.5).unwrap();
        let a: f64 = solve_auto(&p, 0.5, 1, 2).unwrap();
        let b: f64 = solve_auto(&p, 0.5, 1, 2).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn residual_examples() {
        let p = oscillator();
        let h = 1e-3;
        let exact: Vec<(f64, f64)> = (1..8000).map(|i| {
            let r = i as f64 * h;
            (r, r * (-r * r / 2.0).exp())
        }).collect();
        let res = residual_norm(&p, 0.5, 0, 1.5, &exact).unwrap();
        assert!(res < 1e-5, "{res}");

        // deterministic pseudo-random noise as a negative control
        let mut state = 12345u64;
        let noise: Vec<(f64, f64)> = (1..2000).map(|i| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (i as f64 * h, (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5)
        }).collect();
        assert!(residual_norm(&p, 0.5, 0, 1.5, &noise).unwrap() > 1e3);

        assert!(residual_norm(&p, 0.5, 0, 1.5, &exact[..4]).is_err());
        let mut skewed = exact[..10].to_vec();
        skewed[5].0 += 1e-4;
        assert!(residual_norm(&p, 0.5, 0, 1.5, &skewed).is_err());
    }
}
