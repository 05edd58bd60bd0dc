//! Exact bound states of the pseudoharmonic (`a1 r² + a2/r² + a3`) and
//! Mie-type (`a/r² + b/r + c`) radial potentials, with an independent Numerov
//! shooting solver to cross-check every closed-form level.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`). The `f64`
//! aliases below are what applications normally use.

pub mod error;
pub mod oracle;
pub mod potentials;
pub mod quadrature;
pub mod scalar;
pub mod specfun;
pub mod spectra;
pub mod units;
pub mod wavefunctions;

pub use error::{Error, Result};
pub use oracle::{count_nodes, numerov_integrate, residual_norm, solve_auto, solve_eigenvalue, NumerovConfig};
pub use potentials::{
    DerivedMie, DerivedPseudoharmonic, FnPotential, MieParams, NearOrigin, PseudoharmonicParams, RadialPotential,
};
pub use scalar::Real;
pub use specfun::{confluent_1f1_neg_int, laguerre, log_gamma_ratio};
pub use spectra::{
    energy_harmonic_oscillator, energy_mie, energy_pseudoharmonic, energy_pseudoharmonic_a3zero, level_table,
    EnergyLevel, LevelRule, QuantumNumbers, Spectrum,
};
pub use units::{builtin_molecule, builtin_molecules, parse_molecules, MoleculeSpec, UnitSystem, Units};
pub use wavefunctions::{node_count, overlap, quadrature_norm, sample, Family, RadialWavefunction};

pub type Pseudoharmonic = PseudoharmonicParams<f64>;
pub type Mie = MieParams<f64>;
pub type Level = EnergyLevel<f64>;
pub type Wavefunction = RadialWavefunction<f64>;
pub type LabUnits = UnitSystem<f64>;
pub type Numerov = NumerovConfig<f64>;

pub type Pseudoharmonic32 = PseudoharmonicParams<f32>;
pub type Mie32 = MieParams<f32>;
pub type Wavefunction32 = RadialWavefunction<f32>;
