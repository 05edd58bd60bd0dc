//! The four subcommands. Each renders its full output to a string first so
//! results are byte-identical across runs.

use std::fmt::Write as _;

use boundstate::oracle::solve_auto;
use boundstate::spectra::Spectrum;
use boundstate::wavefunctions::{format_sig17, uniform_grid, FIGURE_STATES};
use boundstate::{EnergyLevel, LevelRule, Units, Wavefunction};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::{Format, Model, RunConfig};
use crate::CliError;

/// Relative agreement required between closed form and shooting solver.
pub const VERIFY_TOL: f64 = 1e-6;

fn compute(e: boundstate::Error) -> CliError {
    CliError::Compute(e.to_string())
}

fn spectrum(model: &Model) -> &dyn Spectrum<f64> {
    match model {
        Model::Pseudoharmonic(p) => p,
        Model::Kratzer(p) => p,
    }
}

pub fn levels(cfg: &RunConfig) -> Result<Vec<EnergyLevel<f64>>, CliError> {
    boundstate::level_table(spectrum(&cfg.model), cfg.n_max, LevelRule::EllUpToN).map_err(compute)
}

fn energy_unit(units: Units) -> &'static str {
    match units {
        Units::Lab => "eV",
        Units::Natural => "natural units",
    }
}

pub fn energies(cfg: &RunConfig) -> Result<String, CliError> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} potential, {}, energies in {}",
        cfg.model.family(),
        cfg.source,
        energy_unit(cfg.units)
    );
    let _ = writeln!(out, "{:>3} {:>3} {:>14}", "n", "l", "E");
    for level in levels(cfg)? {
        let _ = writeln!(out, "{:>3} {:>3} {:>14.6}", level.qn.n, level.qn.ell, level.energy);
    }
    Ok(out)
}

#[derive(Serialize)]
struct Row {
    n: u32,
    l: u32,
    energy_ev: Box<RawValue>,
}

pub fn table(cfg: &RunConfig) -> Result<String, CliError> {
    let levels = levels(cfg)?;
    match cfg.format {
        Format::Csv => {
            let mut out = String::from("n,l,energy_ev\n");
            for level in &levels {
                let _ = writeln!(out, "{},{},{:.6}", level.qn.n, level.qn.ell, level.energy);
            }
            Ok(out)
        }
        Format::Json => {
            let rows = levels
                .iter()
                .map(|level| {
                    let energy_ev = RawValue::from_string(format!("{:.6}", level.energy))
                        .map_err(|e| CliError::Compute(format!("energy {} is not a JSON number: {e}", level.energy)))?;
                    Ok(Row {
                        n: level.qn.n,
                        l: level.qn.ell,
                        energy_ev,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let mut out = serde_json::to_string_pretty(&rows).map_err(|e| CliError::Compute(e.to_string()))?;
            out.push('\n');
            Ok(out)
        }
    }
}

fn build(model: &Model, qn: boundstate::QuantumNumbers) -> boundstate::Result<Wavefunction> {
    match model {
        Model::Pseudoharmonic(p) => Wavefunction::pseudoharmonic(p, qn),
        Model::Kratzer(p) => Wavefunction::mie(p, qn),
    }
}

pub fn wavefunction(cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.format == Format::Json {
        return Err(CliError::Config("wavefunction output is CSV only".into()));
    }
    let states = FIGURE_STATES
        .iter()
        .map(|&qn| build(&cfg.model, qn))
        .collect::<boundstate::Result<Vec<_>>>()
        .map_err(compute)?;
    let r_max = cfg
        .r_max
        .unwrap_or_else(|| states.iter().fold(0.0f64, |m, wf| m.max(wf.cutoff())));
    let mut out = String::from("r");
    for wf in &states {
        let _ = write!(out, ",R_{}_{}", wf.qn().n, wf.qn().ell);
    }
    out.push('\n');
    for r in uniform_grid(r_max, cfg.points) {
        out.push_str(&format_sig17(r));
        for wf in &states {
            out.push(',');
            out.push_str(&format_sig17(wf.eval(r)));
        }
        out.push('\n');
    }
    Ok(out)
}

pub struct Verification {
    pub report: String,
    pub failures: usize,
}

pub fn verify(cfg: &RunConfig) -> Result<Verification, CliError> {
    let levels = levels(cfg)?;
    let v_min = spectrum(&cfg.model).potential_minimum();
    let oracle_model = cfg
        .corrupt_lambda
        .map_or_else(|| cfg.model.clone(), |f| cfg.model.with_lambda(cfg.model.lambda() * f));
    let lambda = oracle_model.lambda();
    let solved: Vec<boundstate::Result<f64>> = levels
        .par_iter()
        .map(|level| match &oracle_model {
            Model::Pseudoharmonic(p) => solve_auto(p, lambda, level.qn.ell, level.qn.n),
            Model::Kratzer(p) => solve_auto(p, lambda, level.qn.ell, level.qn.n),
        })
        .collect();

    let mut report = String::new();
    let _ = writeln!(
        report,
        "# {} potential, {}, closed form vs Numerov, tolerance {VERIFY_TOL:.0e} relative to E - V_min (|E| if unbounded below)",
        cfg.model.family(),
        cfg.source
    );
    let mut failures = 0;
    for (level, oracle) in levels.iter().zip(solved) {
        let closed = level.energy;
        let (n, l) = (level.qn.n, level.qn.ell);
        match oracle {
            Ok(e) => {
                let abs = (e - closed).abs();
                let scale = v_min.map_or(closed.abs(), |v| (closed - v).abs());
                let rel = abs / scale;
                let pass = rel < VERIFY_TOL;
                failures += usize::from(!pass);
                let _ = writeln!(
                    report,
                    "n={n} l={l} closed={closed:.12e} oracle={e:.12e} abs={abs:.3e} rel={rel:.3e} {}",
                    if pass { "PASS" } else { "FAIL" }
                );
            }
            Err(err) => {
                failures += 1;
                let _ = writeln!(report, "n={n} l={l} closed={closed:.12e} oracle error: {err} FAIL");
            }
        }
    }
    let _ = writeln!(report, "# {} of {} levels PASS", levels.len() - failures, levels.len());
    Ok(Verification { report, failures })
}
