//! Command-line arguments and their resolution into a validated run configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use boundstate::units::{find_molecule, parse_molecules};
use boundstate::wavefunctions::{figure_kratzer, figure_pseudoharmonic};
use boundstate::{builtin_molecules, Mie, MoleculeSpec, Pseudoharmonic, UnitSystem, Units};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

/// Largest supported `--n-max`.
pub const N_MAX_LIMIT: u32 = 12;
pub const OUTPUT_DIR_ENV: &str = "BOUNDSTATE_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "boundstate", version, about = "Bound-state energies and wavefunctions of pseudoharmonic and Kratzer potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the energy levels as an aligned listing.
    Energies(RunArgs),
    /// Emit the energy table as CSV or JSON.
    Table(RunArgs),
    /// Sample the normalized radial wavefunctions of the six plotted states.
    Wavefunction(RunArgs),
    /// Compare closed-form energies against the Numerov shooting solver.
    Verify(RunArgs),
}

impl Command {
    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Energies(a) | Command::Table(a) | Command::Wavefunction(a) | Command::Verify(a) => a,
        }
    }

    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Energies(_) => CommandKind::Energies,
            Command::Table(_) => CommandKind::Table,
            Command::Wavefunction(_) => CommandKind::Wavefunction,
            Command::Verify(_) => CommandKind::Verify,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Energies,
    Table,
    Wavefunction,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pseudoharmonic,
    /// Modified Kratzer, `D (r - r0)² / r²`.
    Kratzer,
}

impl fmt::Display for FamilyArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyArg::Pseudoharmonic => "pseudoharmonic",
            FamilyArg::Kratzer => "kratzer",
        })
    }
}

impl FromStr for FamilyArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Preset molecule name (N2, CO, or one defined in --molecules-file).
    #[arg(long)]
    pub molecule: Option<String>,
    /// Dissociation energy in cm⁻¹; overrides the preset value.
    #[arg(long = "D0-cm1")]
    pub d0_cm1: Option<f64>,
    /// Equilibrium distance in Å; overrides the preset value.
    #[arg(long = "r0-angstrom")]
    pub r0_angstrom: Option<f64>,
    /// Reduced mass in amu; overrides the preset value.
    #[arg(long = "mass-amu")]
    pub mass_amu: Option<f64>,
    /// Additional molecule presets.
    #[arg(long)]
    pub molecules_file: Option<PathBuf>,
    /// Potential coefficients `a1,a2,a3` (pseudoharmonic) or `a,b,c` (kratzer),
    /// used instead of a molecule mapping.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub coefficients: Option<Vec<f64>>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Highest radial quantum number; levels with ℓ ≤ n are listed.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub units: Option<Units>,
    /// Outer end of the wavefunction grid.
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Number of wavefunction grid points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Key-value file supplying defaults for any of the options above.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Multiplies ħ²/2m seen by the shooting solver (negative control).
    #[arg(long, hide = true)]
    pub corrupt_lambda: Option<f64>,
}

/// The potential a run operates on.
#[derive(Debug, Clone)]
pub enum Model {
    Pseudoharmonic(Pseudoharmonic),
    Kratzer(Mie),
}

impl Model {
    pub fn family(&self) -> FamilyArg {
        match self {
            Model::Pseudoharmonic(_) => FamilyArg::Pseudoharmonic,
            Model::Kratzer(_) => FamilyArg::Kratzer,
        }
    }

    pub fn lambda(&self) -> f64 {
        match self {
            Model::Pseudoharmonic(p) => p.lambda,
            Model::Kratzer(p) => p.lambda,
        }
    }

    pub fn with_lambda(&self, lambda: f64) -> Model {
        let mut out = self.clone();
        match &mut out {
            Model::Pseudoharmonic(p) => p.lambda = lambda,
            Model::Kratzer(p) => p.lambda = lambda,
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub model: Model,
    /// Human-readable description of where the model came from.
    pub source: String,
    pub n_max: u32,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub units: Units,
    pub r_max: Option<f64>,
    pub points: usize,
    pub corrupt_lambda: Option<f64>,
}

const CONFIG_KEYS: [&str; 14] = [
    "molecule",
    "D0_cm1",
    "r0_angstrom",
    "mass_amu",
    "molecules_file",
    "coefficients",
    "family",
    "n_max",
    "output",
    "format",
    "units",
    "r_max",
    "points",
    "corrupt_lambda",
];

/// Reads `key = value` lines; `#` starts a comment.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, (usize, String)>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Config(format!("config line {line_no}: expected `key = value`")));
        };
        let key = key.trim().replace('-', "_");
        let value = value.trim().to_owned();
        if !CONFIG_KEYS.iter().any(|k| k.eq_ignore_ascii_case(&key)) {
            return Err(CliError::Config(format!("config line {line_no}: unknown key `{key}`")));
        }
        let canonical = CONFIG_KEYS.iter().find(|k| k.eq_ignore_ascii_case(&key)).unwrap().to_string();
        if out.insert(canonical, (line_no, value)).is_some() {
            return Err(CliError::Config(format!("config line {line_no}: duplicate key `{key}`")));
        }
    }
    Ok(out)
}

fn fill<T: FromStr>(slot: &mut Option<T>, map: &BTreeMap<String, (usize, String)>, key: &str) -> Result<(), CliError>
where
    T::Err: fmt::Display,
{
    if slot.is_none() {
        if let Some((line, value)) = map.get(key) {
            *slot = Some(
                value
                    .parse()
                    .map_err(|e| CliError::Config(format!("config line {line}: bad value for `{key}`: {e}")))?,
            );
        }
    }
    Ok(())
}

impl RunArgs {
    /// Fills options not given on the command line from the `--config` file.
    pub fn merge_config(mut self) -> Result<Self, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        let map = parse_config_file(&text)?;
        fill(&mut self.molecule, &map, "molecule")?;
        fill(&mut self.d0_cm1, &map, "D0_cm1")?;
        fill(&mut self.r0_angstrom, &map, "r0_angstrom")?;
        fill(&mut self.mass_amu, &map, "mass_amu")?;
        fill(&mut self.molecules_file, &map, "molecules_file")?;
        fill(&mut self.family, &map, "family")?;
        fill(&mut self.n_max, &map, "n_max")?;
        fill(&mut self.output, &map, "output")?;
        fill(&mut self.format, &map, "format")?;
        fill(&mut self.units, &map, "units")?;
        fill(&mut self.r_max, &map, "r_max")?;
        fill(&mut self.points, &map, "points")?;
        fill(&mut self.corrupt_lambda, &map, "corrupt_lambda")?;
        if self.coefficients.is_none() {
            if let Some((line, value)) = map.get("coefficients") {
                let parsed: Result<Vec<f64>, _> = value.split(',').map(|v| v.trim().parse::<f64>()).collect();
                self.coefficients = Some(
                    parsed.map_err(|e| CliError::Config(format!("config line {line}: bad coefficients: {e}")))?,
                );
            }
        }
        Ok(self)
    }

    fn molecule_spec(&self) -> Result<Option<MoleculeSpec>, CliError> {
        let inline = self.d0_cm1.is_some() || self.r0_angstrom.is_some() || self.mass_amu.is_some();
        if self.molecule.is_none() && !inline {
            return Ok(None);
        }
        let mut presets = builtin_molecules();
        if let Some(path) = &self.molecules_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            let extra = parse_molecules(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            for m in extra {
                presets.retain(|p| !p.name.eq_ignore_ascii_case(&m.name));
                presets.push(m);
            }
        }
        let base = match &self.molecule {
            Some(name) => Some(find_molecule(&presets, name).map_err(|e| CliError::Config(e.to_string()))?.clone()),
            None => None,
        };
        let pick = |flag: Option<f64>, preset: Option<f64>, key: &str| {
            flag.or(preset)
                .ok_or_else(|| CliError::Config(format!("inline molecule needs --{key} (or --molecule)")))
        };
        let spec = MoleculeSpec::new(
            base.as_ref().map_or("custom".to_owned(), |m| m.name.clone()),
            pick(self.d0_cm1, base.as_ref().map(|m| m.dissociation_energy), "D0-cm1")?,
            pick(self.r0_angstrom, base.as_ref().map(|m| m.equilibrium_distance), "r0-angstrom")?,
            pick(self.mass_amu, base.as_ref().map(|m| m.mass), "mass-amu")?,
        )
        .map_err(|e| CliError::Config(e.to_string()))?;
        Ok(Some(spec))
    }

    pub fn resolve(self, command: CommandKind) -> Result<RunConfig, CliError> {
        let args = self.merge_config()?;
        let family = args.family.unwrap_or(FamilyArg::Pseudoharmonic);
        let units = args.units.unwrap_or(match command {
            CommandKind::Wavefunction => Units::Natural,
            _ => Units::Lab,
        });
        let n_max = args.n_max.unwrap_or(4);
        if n_max > N_MAX_LIMIT {
            return Err(CliError::Config(format!("--n-max {n_max} exceeds the limit of {N_MAX_LIMIT}")));
        }
        let points = args.points.unwrap_or(401);
        if points < 2 {
            return Err(CliError::Config(format!("--points must be at least 2, got {points}")));
        }
        if let Some(r) = args.r_max {
            if !(r.is_finite() && r > 0.0) {
                return Err(CliError::Config(format!("--r-max must be positive, got {r}")));
            }
        }
        if let Some(f) = args.corrupt_lambda {
            if !(f.is_finite() && f > 0.0) {
                return Err(CliError::Config(format!("--corrupt-lambda must be positive, got {f}")));
            }
        }
        let system: UnitSystem<f64> = units.system();
        let molecule = args.molecule_spec()?;
        let config_err = |e: boundstate::Error| CliError::Config(e.to_string());

        let (model, source) = match (&args.coefficients, &molecule) {
            (Some(c), _) => {
                if c.len() != 3 {
                    return Err(CliError::Config(format!("--coefficients needs 3 values, got {}", c.len())));
                }
                let lambda = match (&molecule, units) {
                    (Some(m), _) => m.lambda(&system).map_err(config_err)?,
                    (None, Units::Natural) => 0.5,
                    (None, Units::Lab) => {
                        return Err(CliError::Config(
                            "--coefficients in lab units need a mass (--molecule or --mass-amu)".into(),
                        ))
                    }
                };
                let model = match family {
                    FamilyArg::Pseudoharmonic => {
                        Model::Pseudoharmonic(Pseudoharmonic::new(c[0], c[1], c[2], lambda).map_err(config_err)?)
                    }
                    FamilyArg::Kratzer => Model::Kratzer(Mie::new(c[0], c[1], c[2], lambda).map_err(config_err)?),
                };
                (model, format!("coefficients {},{},{}", c[0], c[1], c[2]))
            }
            (None, Some(m)) => {
                let model = match family {
                    FamilyArg::Pseudoharmonic => {
                        Model::Pseudoharmonic(Pseudoharmonic::from_molecule(m, &system).map_err(config_err)?)
                    }
                    FamilyArg::Kratzer => Model::Kratzer(Mie::from_molecule(m, &system).map_err(config_err)?),
                };
                (model, format!("molecule {}", m.name))
            }
            (None, None) => match units {
                Units::Natural => {
                    let model = match family {
                        FamilyArg::Pseudoharmonic => Model::Pseudoharmonic(figure_pseudoharmonic()),
                        FamilyArg::Kratzer => Model::Kratzer(figure_kratzer()),
                    };
                    (model, "natural-unit defaults".to_owned())
                }
                Units::Lab => {
                    return Err(CliError::Config(
                        "no molecule given: use --molecule, the inline --D0-cm1/--r0-angstrom/--mass-amu flags, \
                         or --units natural"
                            .into(),
                    ))
                }
            },
        };

        Ok(RunConfig {
            command,
            model,
            source,
            n_max,
            output: args.output.map(|p| resolve_output(&p, std::env::var_os(OUTPUT_DIR_ENV).as_deref())),
            format: args.format.unwrap_or(Format::Csv),
            units,
            r_max: args.r_max,
            points,
            corrupt_lambda: args.corrupt_lambda,
        })
    }
}

/// Relative output paths land in the override directory when one is set.
pub fn resolve_output(path: &Path, dir: Option<&std::ffi::OsStr>) -> PathBuf {
    match dir {
        Some(d) if !d.is_empty() && path.is_relative() => Path::new(d).join(path),
        _ => path.to_path_buf(),
    }
}
