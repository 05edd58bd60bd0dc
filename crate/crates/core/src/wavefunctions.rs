//! Normalized radial eigenfunctions.
//!
//! Both families share the shape
//! `R(r) = 𝒩 · r^s · exp(-φ(r)) · ₁F₁(-n, σ, x(r))`:
//!
//! | family         | `s`     | `φ(r)`   | `σ`     | `x(r)`  |
//! |----------------|---------|----------|---------|---------|
//! | pseudoharmonic | `ν + 1` | `μr²/2`  | `ν+3/2` | `μr²`   |
//! | Mie            | `γ+1/2` | `εr`     | `2γ+1`  | `2εr`   |
//!
//! Evaluation runs in log space: for molecular parameters `s` is of order 200
//! and neither `𝒩` nor `r^s` is representable on its own.
//!
//! Normalization constants (Laguerre orthogonality, `q = σ - 1`):
//! pseudoharmonic `𝒩 = μ^{(ν+3/2)/2} sqrt(2Γ(n+ν+3/2)/n!) / Γ(ν+3/2)`,
//! Mie `𝒩 = (2ε)^{γ+1} sqrt(Γ(n+2γ+1)/(n!(2n+2γ+1))) / Γ(2γ+1)`.
//! Both are checked against quadrature at construction.

use std::fmt::Write as _;

use crate::error::{domain, Error, Result};
use crate::oracle::count_nodes;
use crate::potentials::{DerivedMie, DerivedPseudoharmonic, MieParams, PseudoharmonicParams};
use crate::quadrature::{integrate, Tolerance};
use crate::scalar::Real;
use crate::specfun::{laguerre_recurrence, ln_factorial, ln_gamma};
use crate::spectra::{energy_mie, energy_pseudoharmonic, mie_decay_rate, QuantumNumbers};

/// Initial equal panels for every quadrature over a wavefunction's support.
const PANELS: usize = 64;
/// Grid size used for node counting.
const NODE_GRID: usize = 20_000;
/// `ln(1e-16)`: the tail is cut where `R²` falls this far below its peak.
const LN_TAIL: f64 = -36.841_361_487_904_734;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Pseudoharmonic,
    Mie,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Derived<T> {
    Pseudoharmonic(DerivedPseudoharmonic<T>),
    Mie(DerivedMie<T>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction<T> {
    qn: QuantumNumbers,
    derived: Derived<T>,
    /// `μ` (pseudoharmonic) or `ε` (Mie).
    decay: T,
    energy: T,
    power: T,
    sigma: T,
    /// `n! Γ(σ) / Γ(n+σ)` as a finite product: converts `L_n^{σ-1}` to `₁F₁`.
    poly_scale: T,
    ln_norm: T,
    analytic_ln_norm: T,
    construction_norm: T,
    cutoff: T,
}

fn poly_scale<T: Real>(n: u32, sigma: T) -> T {
    (1..=n).fold(T::one(), |acc, k| {
        acc * T::from_count(k) / (sigma + T::from_count(k - 1))
    })
}

impl<T: Real> RadialWavefunction<T> {
    pub fn pseudoharmonic(p: &PseudoharmonicParams<T>, qn: QuantumNumbers) -> Result<Self> {
        let d = p.derive(qn.ell)?;
        let energy = energy_pseudoharmonic(p, qn)?.energy;
        let half = T::lit(0.5);
        let sigma = d.nu + T::lit(1.5);
        let n = T::from_count(qn.n);
        let analytic_ln_norm = half * sigma * d.mu.ln()
            + half * (T::LN_2() + ln_gamma(n + sigma)? - ln_factorial::<T>(qn.n))
            - ln_gamma(sigma)?;
        let wf = Self::assemble(
            qn,
            Derived::Pseudoharmonic(d),
            d.mu,
            energy,
            d.nu + T::one(),
            sigma,
            analytic_ln_norm,
        )?;
        wf.check_norm()?;
        Ok(wf)
    }

    pub fn mie(p: &MieParams<T>, qn: QuantumNumbers) -> Result<Self> {
        let eps = mie_decay_rate(p, qn)?;
        let d = p.derive(qn.ell)?;
        let energy = energy_mie(p, qn)?.energy;
        let half = T::lit(0.5);
        let two = T::lit(2.0);
        let sigma = two * d.gamma + T::one();
        let n = T::from_count(qn.n);
        let analytic_ln_norm = (d.gamma + T::one()) * (two * eps).ln()
            + half * (ln_gamma(n + sigma)? - ln_factorial::<T>(qn.n) - (two * n + sigma).ln())
            - ln_gamma(sigma)?;
        let mut wf = Self::assemble(
            qn,
            Derived::Mie(d),
            eps,
            energy,
            d.gamma + half,
            sigma,
            analytic_ln_norm,
        )?;
        wf.check_norm()?;
        // quadrature is the ground truth for this family
        wf.ln_norm = wf.ln_norm - half * wf.construction_norm.ln();
        Ok(wf)
    }

    fn assemble(
        qn: QuantumNumbers,
        derived: Derived<T>,
        decay: T,
        energy: T,
        power: T,
        sigma: T,
        analytic_ln_norm: T,
    ) -> Result<Self> {
        if !(analytic_ln_norm.is_finite() && decay > T::zero()) {
            return Err(domain(format!(
                "state {qn} has degenerate normalization (ln 𝒩 = {analytic_ln_norm}, decay = {decay})"
            )));
        }
        let mut wf = Self {
            qn,
            derived,
            decay,
            energy,
            power,
            sigma,
            poly_scale: poly_scale(qn.n, sigma),
            ln_norm: analytic_ln_norm,
            analytic_ln_norm,
            construction_norm: T::nan(),
            cutoff: T::nan(),
        };
        wf.cutoff = wf.find_cutoff();
        wf.construction_norm = square_norm(|r| wf.eval(r), wf.cutoff)?;
        Ok(wf)
    }

    fn check_norm(&self) -> Result<()> {
        let dev = (self.construction_norm - T::one()).abs();
        if dev > T::tol_floor(1e-6) {
            return Err(Error::Quadrature(format!(
                "state {}: analytic normalization integrates to {} (cutoff r = {})",
                self.qn, self.construction_norm, self.cutoff
            )));
        }
        Ok(())
    }

    fn x_of_r(&self, r: T) -> T {
        match self.derived {
            Derived::Pseudoharmonic(_) => self.decay * r * r,
            Derived::Mie(_) => T::lit(2.0) * self.decay * r,
        }
    }

    fn r_of_x(&self, x: T) -> T {
        match self.derived {
            Derived::Pseudoharmonic(_) => (x / self.decay).sqrt(),
            Derived::Mie(_) => x / (T::lit(2.0) * self.decay),
        }
    }

    /// `R(r)`. Returns zero for `r ≤ 0`, the limit at the origin.
    pub fn eval(&self, r: T) -> T {
        if r <= T::zero() {
            return T::zero();
        }
        let x = self.x_of_r(r);
        let envelope = self.ln_norm + self.power * r.ln() - T::lit(0.5) * x;
        let poly = laguerre_recurrence(self.qn.n, self.sigma - T::one(), x) * self.poly_scale;
        envelope.exp() * poly
    }

    /// Beyond the last polynomial zero and the envelope maximum, step outward in
    /// `x` until `R²` has fallen below `1e-16` of its peak.
    fn find_cutoff(&self) -> T {
        let n = T::from_count(self.qn.n);
        let two = T::lit(2.0);
        let alpha = (self.sigma - T::one()).abs();
        let zero_bound = T::lit(4.0) * n + two * alpha + T::lit(4.0);
        let envelope_peak = two * self.power + two * n;
        let x_start = zero_bound.max(envelope_peak);
        let r_start = self.r_of_x(x_start);

        let scan = 2000;
        let mut peak = T::zero();
        for i in 1..=scan {
            let r = r_start * T::lit(i as f64 / scan as f64);
            peak = peak.max(self.eval(r).abs());
        }
        let ln_floor = two * peak.ln() + T::lit(LN_TAIL);
        let mut x = x_start;
        loop {
            let v = self.eval(self.r_of_x(x));
            if v == T::zero() || two * v.abs().ln() < ln_floor {
                return self.r_of_x(x);
            }
            x = x + T::one();
        }
    }

    pub fn family(&self) -> Family {
        match self.derived {
            Derived::Pseudoharmonic(_) => Family::Pseudoharmonic,
            Derived::Mie(_) => Family::Mie,
        }
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn derived(&self) -> &Derived<T> {
        &self.derived
    }

    /// `μ` for the pseudoharmonic family, `ε` for the Mie family.
    pub fn decay_scale(&self) -> T {
        self.decay
    }

    /// The closed-form eigenvalue this function belongs to.
    pub fn energy(&self) -> T {
        self.energy
    }

    /// `𝒩` as applied by [`eval`](Self::eval). May overflow in low precision;
    /// see [`ln_norm_constant`](Self::ln_norm_constant).
    pub fn norm_constant(&self) -> T {
        self.ln_norm.exp()
    }

    pub fn ln_norm_constant(&self) -> T {
        self.ln_norm
    }

    /// The closed-form constant before any quadrature correction.
    pub fn analytic_ln_norm_constant(&self) -> T {
        self.analytic_ln_norm
    }

    /// `∫R²` measured at construction with the closed-form constant.
    pub fn construction_norm(&self) -> T {
        self.construction_norm
    }

    /// Radius beyond which `R²` is below `1e-16` of its peak.
    pub fn cutoff(&self) -> T {
        self.cutoff
    }
}

/// `∫₀^{r_cut} f(r)² dr` by adaptive quadrature.
pub fn square_norm<T: Real, F: Fn(T) -> T>(f: F, r_cut: T) -> Result<T> {
    integrate(
        |r| {
            let v = f(r);
            v * v
        },
        T::zero(),
        r_cut,
        PANELS,
        Tolerance::tight(),
    )
    .map(|i| i.value)
}

/// `∫ R² dr` recomputed by quadrature.
pub fn quadrature_norm<T: Real>(wf: &RadialWavefunction<T>) -> Result<T> {
    square_norm(|r| wf.eval(r), wf.cutoff)
}

/// `∫ R_a R_b dr`.
pub fn overlap<T: Real>(a: &RadialWavefunction<T>, b: &RadialWavefunction<T>) -> Result<T> {
    let r_cut = a.cutoff.max(b.cutoff);
    let tol = Tolerance::new(T::tol_floor(1e-13), T::tol_floor(1e-13));
    integrate(|r| a.eval(r) * b.eval(r), T::zero(), r_cut, PANELS, tol).map(|i| i.value)
}

/// Interior zeros of `R`, counted as sign changes on a fine uniform grid.
pub fn node_count<T: Real>(wf: &RadialWavefunction<T>) -> usize {
    let h = wf.cutoff / T::lit(NODE_GRID as f64);
    let values: Vec<T> = (1..=NODE_GRID)
        .map(|i| wf.eval(h * T::lit(i as f64)))
        .collect();
    count_nodes(&values)
}

/// Evaluates `R` on a strictly ascending grid of positive radii.
pub fn sample<T: Real>(wf: &RadialWavefunction<T>, grid: &[T]) -> Result<Vec<(T, T)>> {
    let mut prev = T::zero();
    grid.iter()
        .map(|&r| {
            if !(r > T::zero() && r.is_finite()) {
                return Err(domain(format!("grid radius must be positive, got {r}")));
            }
            if r <= prev {
                return Err(domain(format!("grid must be strictly ascending at r = {r}")));
            }
            prev = r;
            Ok((r, wf.eval(r)))
        })
        .collect()
}

/// `n` equally spaced radii on `(0, r_max]`.
pub fn uniform_grid<T: Real>(r_max: T, n: usize) -> Vec<T> {
    let h = r_max / T::lit(n as f64);
    (1..=n).map(|i| h * T::lit(i as f64)).collect()
}

/// Formats a value with 17 significant digits.
pub fn format_sig17<T: Real>(v: T) -> String {
    format!("{:.16e}", v.to_f64().unwrap_or(f64::NAN))
}

/// Serializes `(r, R)` samples as CSV with header `r,R`.
pub fn to_csv<T: Real>(samples: &[(T, T)]) -> String {
    let mut out = String::from("r,R\n");
    for &(r, v) in samples {
        let _ = writeln!(out, "{},{}", format_sig17(r), format_sig17(v));
    }
    out
}

/// The six states shown in the natural-unit wavefunction plots.
pub const FIGURE_STATES: [QuantumNumbers; 6] = [
    QuantumNumbers::new(0, 0),
    QuantumNumbers::new(1, 0),
    QuantumNumbers::new(1, 1),
    QuantumNumbers::new(2, 0),
    QuantumNumbers::new(2, 1),
    QuantumNumbers::new(2, 2),
];

/// Natural-unit pseudoharmonic plot parameters: `a1 = a2 = 1`, `a3 = 0`.
pub fn figure_pseudoharmonic<T: Real>() -> PseudoharmonicParams<T> {
    PseudoharmonicParams::new(T::one(), T::one(), T::zero(), T::lit(0.5))
        .expect("valid literal parameters")
}

/// Natural-unit Kratzer plot parameters: modified Kratzer with `D = 2`, `r0 = 1`.
pub fn figure_kratzer<T: Real>() -> MieParams<T> {
    MieParams::modified_kratzer(T::lit(2.0), T::one(), T::lit(0.5)).expect("valid literal parameters")
}
