//! Closed-form bound-state energies.
//!
//! Pseudoharmonic: `E = a3 + 4 λ μ (n + 1/2 + (2ν+1)/4)`.
//! Mie-type: `E = c - λ ε²` with `ε = -δ² / (2n + 2γ + 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::potentials::{MieParams, PseudoharmonicParams};
use crate::scalar::Real;

/// Radial quantum number `n` (node count) and angular momentum `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: u32,
    pub ell: u32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, ell: u32) -> Self {
        Self { n, ell }
    }
}

impl fmt::Display for QuantumNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.ell)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel<T> {
    pub qn: QuantumNumbers,
    pub energy: T,
}

/// A potential family with an analytic spectrum.
pub trait Spectrum<T: Real> {
    fn energy(&self, qn: QuantumNumbers) -> Result<EnergyLevel<T>>;

    /// Minimum of the bare potential, the reference for relative energy errors.
    /// Unbounded-below potentials return `None`.
    fn potential_minimum(&self) -> Option<T>;
}

/// Pseudoharmonic energy computed through the derived symbols `μ`, `ν`.
pub fn energy_pseudoharmonic<T: Real>(
    p: &PseudoharmonicParams<T>,
    qn: QuantumNumbers,
) -> Result<EnergyLevel<T>> {
    let d = p.derive(qn.ell)?;
    let quarter = T::lit(0.25);
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let energy =
        p.a3 + four * p.lambda * d.mu * (T::from_count(qn.n) + half + (two * d.nu + T::one()) * quarter);
    Ok(EnergyLevel { qn, energy })
}

/// The same spectrum written directly in the potential coefficients,
/// `a3 + sqrt(16 λ a1) (n + 1/2 + sqrt(1 + 4ℓ(ℓ+1) + 4 a2/λ) / 4)`.
pub fn energy_pseudoharmonic_direct<T: Real>(
    p: &PseudoharmonicParams<T>,
    qn: QuantumNumbers,
) -> Result<EnergyLevel<T>> {
    let l = T::from_count(qn.ell);
    let four = T::lit(4.0);
    let disc = T::one() + four * l * (l + T::one()) + four * p.a2 / p.lambda;
    if disc < T::zero() {
        return Err(Error::Domain(format!(
            "a2 = {} too attractive for ℓ = {}",
            p.a2, qn.ell
        )));
    }
    let energy = p.a3
        + (T::lit(16.0) * p.lambda * p.a1).sqrt()
            * (T::from_count(qn.n) + T::lit(0.5) + T::lit(0.25) * disc.sqrt());
    Ok(EnergyLevel { qn, energy })
}

/// Inverse-square-plus-square special case (`a3 = 0`).
pub fn energy_pseudoharmonic_a3zero<T: Real>(
    p: &PseudoharmonicParams<T>,
    qn: QuantumNumbers,
) -> Result<EnergyLevel<T>> {
    if p.a3 != T::zero() {
        return Err(Error::Precondition(format!(
            "inverse-square-plus-square form requires a3 = 0, got {}",
            p.a3
        )));
    }
    energy_pseudoharmonic(p, qn)
}

/// Isotropic oscillator `ħω (n' + 3/2)` in natural units, `n' = 2n + ℓ`.
pub fn energy_harmonic_oscillator<T: Real>(omega: T, n_prime: u32) -> Result<T> {
    if !(omega > T::zero() && omega.is_finite()) {
        return Err(Error::Domain(format!("ω must be positive, got {omega}")));
    }
    Ok(omega * (T::from_count(n_prime) + T::lit(1.5)))
}

/// Decay rate `ε = -δ²/(2(n + γ + 1/2))` of a Mie bound state.
pub fn mie_decay_rate<T: Real>(p: &MieParams<T>, qn: QuantumNumbers) -> Result<T> {
    if p.b >= T::zero() {
        return Err(Error::NoBoundState(format!(
            "Mie potential with b = {} ≥ 0 is not attractive",
            p.b
        )));
    }
    let d = p.derive(qn.ell)?;
    let eps = -d.delta_sq / (T::lit(2.0) * (T::from_count(qn.n) + d.gamma + T::lit(0.5)));
    debug_assert!(eps > T::zero());
    Ok(eps)
}

/// Mie-type energy `c − λ ε²`.
pub fn energy_mie<T: Real>(p: &MieParams<T>, qn: QuantumNumbers) -> Result<EnergyLevel<T>> {
    let eps = mie_decay_rate(p, qn)?;
    Ok(EnergyLevel {
        qn,
        energy: p.c - p.lambda * eps * eps,
    })
}

/// Inverts the Mie quantization condition: the (real) `n` for which a state
/// of decay rate `eps` would be an eigenstate.
pub fn mie_radial_index<T: Real>(p: &MieParams<T>, ell: u32, eps: T) -> Result<T> {
    let d = p.derive(ell)?;
    let two = T::lit(2.0);
    Ok(-d.delta_sq / (two * eps) - (two * d.gamma + T::one()) / two)
}

impl<T: Real> Spectrum<T> for PseudoharmonicParams<T> {
    fn energy(&self, qn: QuantumNumbers) -> Result<EnergyLevel<T>> {
        energy_pseudoharmonic(self, qn)
    }

    fn potential_minimum(&self) -> Option<T> {
        if self.a2 > T::zero() {
            Some(self.a3 + T::lit(2.0) * (self.a1 * self.a2).sqrt())
        } else if self.a2 == T::zero() {
            Some(self.a3)
        } else {
            None
        }
    }
}

impl<T: Real> Spectrum<T> for MieParams<T> {
    fn energy(&self, qn: QuantumNumbers) -> Result<EnergyLevel<T>> {
        energy_mie(self, qn)
    }

    fn potential_minimum(&self) -> Option<T> {
        if self.a > T::zero() && self.b < T::zero() {
            Some(self.c - self.b * self.b / (T::lit(4.0) * self.a))
        } else {
            None
        }
    }
}

/// Which `(n, ℓ)` pairs a level table enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LevelRule {
    /// `0 ≤ ℓ ≤ n`, the layout of the reference tables.
    #[default]
    EllUpToN,
    /// `0 ≤ ℓ ≤ ell_max` for every `n`.
    EllUpTo(u32),
}

impl LevelRule {
    /// Quantum numbers in table order: `n` ascending, then `ℓ` ascending.
    pub fn enumerate(self, n_max: u32) -> Vec<QuantumNumbers> {
        (0..=n_max)
            .flat_map(|n| {
                let top = match self {
                    LevelRule::EllUpToN => n,
                    LevelRule::EllUpTo(l) => l,
                };
                (0..=top).map(move |ell| QuantumNumbers::new(n, ell))
            })
            .collect()
    }
}

pub fn level_table<T: Real, S: Spectrum<T> + ?Sized>(
    spectrum: &S,
    n_max: u32,
    rule: LevelRule,
) -> Result<Vec<EnergyLevel<T>>> {
    rule.enumerate(n_max)
        .into_iter()
        .map(|qn| spectrum.energy(qn))
        .collect()
}
