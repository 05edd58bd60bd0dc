//! Physical constants, spectroscopic unit conversions and molecule presets.
//!
//! Internal units are eV for energy and Å for length. Masses enter only
//! through `lambda = ħ²/2m` (eV·Å²). A separate natural-unit system with
//! `ħ = m = 1` is provided for dimensionless model calculations.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// CODATA 2018 values. The SI redefinition makes `h`, `c` and `e` exact, so
/// `hc` and `ħc` below are exact to the printed digits; the atomic mass unit
/// carries its CODATA uncertainty.
pub mod codata2018 {
    /// `ħc` in eV·Å.
    pub const HBAR_C_EV_ANGSTROM: f64 = 1973.269_804_593_024_7;
    /// Rest energy of one unified atomic mass unit, eV.
    pub const AMU_ENERGY_EV: f64 = 931.494_102_42e6;
    /// `hc` in eV·cm, i.e. the energy of one cm⁻¹.
    pub const WAVENUMBER_TO_EV: f64 = 1.239_841_984_332_002_6e-4;
}

/// The three constants needed to turn spectroscopic inputs into internal units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem<T> {
    /// `ħc`, energy·length.
    pub hbar_c: T,
    /// Rest energy of the mass unit.
    pub amu_energy: T,
    /// Energy of one cm⁻¹.
    pub wavenumber_to_ev: T,
}

impl<T: Real> UnitSystem<T> {
    /// Laboratory units: eV, Å, amu, cm⁻¹.
    pub fn lab() -> Self {
        Self {
            hbar_c: T::lit(codata2018::HBAR_C_EV_ANGSTROM),
            amu_energy: T::lit(codata2018::AMU_ENERGY_EV),
            wavenumber_to_ev: T::lit(codata2018::WAVENUMBER_TO_EV),
        }
    }

    /// Natural units with `ħ = m = 1`; every conversion factor is one.
    pub fn natural() -> Self {
        Self {
            hbar_c: T::one(),
            amu_energy: T::one(),
            wavenumber_to_ev: T::one(),
        }
    }

    pub fn new(hbar_c: T, amu_energy: T, wavenumber_to_ev: T) -> Result<Self> {
        for (name, v) in [
            ("hbar_c", hbar_c),
            ("amu_energy", amu_energy),
            ("wavenumber_to_ev", wavenumber_to_ev),
        ] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(Self {
            hbar_c,
            amu_energy,
            wavenumber_to_ev,
        })
    }

    /// Converts a wavenumber in cm⁻¹ to energy.
    #[inline]
    pub fn wavenumber_to_ev(&self, x: T) -> T {
        x * self.wavenumber_to_ev
    }

    /// `ħ²/2m` for a mass given in amu (eV·Å² in lab units).
    pub fn lambda_of_mass(&self, mass: T) -> Result<T> {
        if !(mass.is_finite() && mass > T::zero()) {
            return Err(domain(format!("mass must be positive, got {mass}")));
        }
        let two = T::lit(2.0);
        Ok(self.hbar_c * self.hbar_c / (two * mass * self.amu_energy))
    }
}

/// Which unit system a calculation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Units {
    #[default]
    Lab,
    Natural,
}

impl Units {
    pub fn system<T: Real>(self) -> UnitSystem<T> {
        match self {
            Units::Lab => UnitSystem::lab(),
            Units::Natural => UnitSystem::natural(),
        }
    }
}

impl FromStr for Units {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lab" => Ok(Units::Lab),
            "natural" => Ok(Units::Natural),
            other => Err(domain(format!("unknown unit system `{other}`"))),
        }
    }
}

impl fmt::Display for Units {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Units::Lab => "lab",
            Units::Natural => "natural",
        })
    }
}

/// Diatomic molecule parameters in spectroscopic units.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeSpec {
    pub name: String,
    /// Dissociation energy, cm⁻¹.
    pub dissociation_energy: f64,
    /// Equilibrium bond length, Å.
    pub equilibrium_distance: f64,
    /// Reduced mass, amu.
    pub mass: f64,
}

impl MoleculeSpec {
    pub fn new(
        name: impl Into<String>,
        dissociation_energy: f64,
        equilibrium_distance: f64,
        mass: f64,
    ) -> Result<Self> {
        let spec = Self {
            name: name.into(),
            dissociation_energy,
            equilibrium_distance,
            mass,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("D0_cm1", self.dissociation_energy),
            ("r0_angstrom", self.equilibrium_distance),
            ("mass_amu", self.mass),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(domain(format!(
                    "molecule `{}`: {field} must be positive, got {v}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Well depth converted to energy in the given unit system.
    pub fn depth<T: Real>(&self, units: &UnitSystem<T>) -> T {
        units.wavenumber_to_ev(T::lit(self.dissociation_energy))
    }

    pub fn r0<T: Real>(&self) -> T {
        T::lit(self.equilibrium_distance)
    }

    pub fn lambda<T: Real>(&self, units: &UnitSystem<T>) -> Result<T> {
        units.lambda_of_mass(T::lit(self.mass))
    }
}

/// The N₂ and CO parameter sets used for the reference energy tables.
pub fn builtin_molecules() -> Vec<MoleculeSpec> {
    vec![
        MoleculeSpec {
            name: "N2".to_owned(),
            dissociation_energy: 96288.03528,
            equilibrium_distance: 1.0940,
            mass: 7.00335,
        },
        MoleculeSpec {
            name: "CO".to_owned(),
            dissociation_energy: 87471.42567,
            equilibrium_distance: 1.1282,
            mass: 6.860586,
        },
    ]
}

/// Case-insensitive lookup in a list of presets.
pub fn find_molecule<'a>(molecules: &'a [MoleculeSpec], name: &str) -> Result<&'a MoleculeSpec> {
    molecules
        .iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownMolecule(name.to_owned()))
}

/// Looks a name up among [`builtin_molecules`].
pub fn builtin_molecule(name: &str) -> Result<MoleculeSpec> {
    find_molecule(&builtin_molecules(), name).cloned()
}

/// Parses molecule presets from a sectioned key-value file:
///
/// ```text
/// # comment
/// [N2]
/// D0_cm1 = 96288.03528
/// r0_angstrom = 1.0940
/// mass_amu = 7.00335
/// ```
///
/// Every section must define all three keys exactly once.
pub fn parse_molecules(text: &str) -> Result<Vec<MoleculeSpec>> {
    struct Pending {
        name: String,
        header_line: usize,
        d0: Option<f64>,
        r0: Option<f64>,
        mass: Option<f64>,
    }

    fn finish(p: Pending, out: &mut Vec<MoleculeSpec>) -> Result<()> {
        let missing = |key: &str| Error::Parse {
            line: p.header_line,
            message: format!("section [{}] is missing `{key}`", p.name),
        };
        let spec = MoleculeSpec {
            name: p.name.clone(),
            dissociation_energy: p.d0.ok_or_else(|| missing("D0_cm1"))?,
            equilibrium_distance: p.r0.ok_or_else(|| missing("r0_angstrom"))?,
            mass: p.mass.ok_or_else(|| missing("mass_amu"))?,
        };
        spec.validate().map_err(|e| Error::Parse {
            line: p.header_line,
            message: e.to_string(),
        })?;
        if out.iter().any(|m| m.name.eq_ignore_ascii_case(&spec.name)) {
            return Err(Error::Parse {
                line: p.header_line,
                message: format!("duplicate molecule `{}`", spec.name),
            });
        }
        out.push(spec);
        Ok(())
    }

    let mut out = Vec::new();
    let mut current: Option<Pending> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let name = rest.strip_suffix(']').map(str::trim).ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("unterminated section header `{line}`"),
            })?;
            if name.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "empty molecule name".into(),
                });
            }
            if let Some(p) = current.take() {
                finish(p, &mut out)?;
            }
            current = Some(Pending {
                name: name.to_owned(),
                header_line: line_no,
                d0: None,
                r0: None,
                mass: None,
            });
            continue;
        }

        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let section = current.as_mut().ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("key `{key}` outside of a [molecule] section"),
        })?;
        let parsed: f64 = value.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("`{value}` is not a number"),
        })?;
        let slot = match key {
            "D0_cm1" => &mut section.d0,
            "r0_angstrom" => &mut section.r0,
            "mass_amu" => &mut section.mass,
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown key `{other}`"),
                })
            }
        };
        if slot.replace(parsed).is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate key `{key}`"),
            });
        }
    }
    if let Some(p) = current.take() {
        finish(p, &mut out)?;
    }
    Ok(out)
}
