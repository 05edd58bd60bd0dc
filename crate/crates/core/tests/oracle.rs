use boundstate::oracle::{count_nodes, numerov_integrate, solve_auto, solve_eigenvalue, NumerovConfig};
use boundstate::potentials::RadialPotential;
use boundstate::spectra::Spectrum;
use boundstate::wavefunctions::{sample, uniform_grid};
use boundstate::{builtin_molecule, LevelRule, Mie, Pseudoharmonic, QuantumNumbers, UnitSystem, Wavefunction};

fn molecules() -> Vec<(String, Pseudoharmonic, Mie)> {
    let units = UnitSystem::lab();
    ["N2", "CO"]
        .iter()
        .map(|name| {
            let mol = builtin_molecule(name).unwrap();
            (
                name.to_string(),
                Pseudoharmonic::from_molecule(&mol, &units).unwrap(),
                Mie::from_molecule(&mol, &units).unwrap(),
            )
        })
        .collect()
}

fn check_family<P: RadialPotential<f64> + Spectrum<f64>>(label: &str, p: &P, lambda: f64) {
    let v_min = p.potential_minimum().unwrap();
    for qn in LevelRule::EllUpToN.enumerate(4) {
        let closed = p.energy(qn).unwrap().energy;
        let oracle = solve_auto(p, lambda, qn.ell, qn.n).unwrap();
        let rel = (oracle - closed).abs() / (closed - v_min).abs();
        assert!(rel < 1e-6, "{label} {qn}: closed {closed}, oracle {oracle}, rel {rel:e}");
    }
}

#[test]
fn oracle_matches_closed_forms_for_molecules() {
    for (name, ph, mie) in molecules() {
        check_family(&format!("{name} pseudoharmonic"), &ph, ph.lambda);
        check_family(&format!("{name} kratzer"), &mie, mie.lambda);
    }
}

#[test]
fn oracle_matches_natural_unit_wells() {
    let ph = Pseudoharmonic::new(1.0, 1.0, 0.0, 0.5).unwrap();
    check_family("natural pseudoharmonic", &ph, 0.5);
    let mie = Mie::modified_kratzer(2.0, 1.0, 0.5).unwrap();
    check_family("natural kratzer", &mie, 0.5);
}

fn oscillator_error(steps: usize) -> f64 {
    let p = Pseudoharmonic::new(0.5, 0.0, 0.0, 0.5).unwrap();
    let cfg = NumerovConfig {
        r_min: 1e-6,
        r_max: 9.0,
        steps,
        energy_bracket: (4.0, 6.0),
        energy_tol: 1e-14,
        max_bisections: 200,
    };
    // n = 1, ℓ = 1: E = 2n + ℓ + 3/2
    (solve_eigenvalue(&p, 0.5, 1, 1, &cfg).unwrap() - 4.5).abs()
}

#[test]
fn grid_halving_is_fourth_order() {
    let coarse = oscillator_error(1000);
    let fine = oscillator_error(2000);
    let ratio = coarse / fine;
    assert!((12.0..20.0).contains(&ratio), "errors {coarse:e} -> {fine:e}, ratio {ratio}");
}

#[test]
fn insensitive_to_inner_start() {
    let mol = builtin_molecule("CO").unwrap();
    let p = Mie::from_molecule(&mol, &UnitSystem::lab()).unwrap();
    let qn = QuantumNumbers::new(2, 1);
    let closed = p.energy(qn).unwrap().energy;
    let v_min = p.potential_minimum().unwrap();
    let base = NumerovConfig::auto(&p, p.lambda, qn.ell, qn.n).unwrap();
    for scale in [0.5, 1.0, 4.0, 16.0] {
        let cfg = NumerovConfig {
            r_min: base.r_min * scale,
            ..base
        };
        let e = solve_eigenvalue(&p, p.lambda, qn.ell, qn.n, &cfg).unwrap();
        let rel = (e - closed).abs() / (closed - v_min);
        assert!(rel < 1e-6, "r_min × {scale}: rel {rel:e}");
    }
    let stiff = NumerovConfig {
        r_min: base.r_min * 0.1,
        ..base
    };
    let err = solve_eigenvalue(&p, p.lambda, qn.ell, qn.n, &stiff).unwrap_err();
    assert!(err.to_string().contains("raise r_min"), "{err}");
}

#[test]
fn solves_are_bit_identical() {
    let (_, ph, _) = molecules().remove(0);
    let a = solve_auto(&ph, ph.lambda, 2, 3).unwrap();
    let b = solve_auto(&ph, ph.lambda, 2, 3).unwrap();
    assert_eq!(a.to_bits(), b.to_bits());
}

#[test]
fn converged_shot_has_target_nodes() {
    let p = Mie::modified_kratzer(2.0, 1.0, 0.5).unwrap();
    let cfg = NumerovConfig::auto(&p, 0.5, 0, 3).unwrap();
    let e = solve_eigenvalue(&p, 0.5, 0, 3, &cfg).unwrap();
    let shot = numerov_integrate(&p, 0.5, 0, e - cfg.energy_tol, &cfg).unwrap();
    assert_eq!(shot.nodes, 3);
}

#[test]
fn analytic_state_node_count() {
    let p = Pseudoharmonic::new(1.0, 1.0, 0.0, 0.5).unwrap();
    let wf = Wavefunction::pseudoharmonic(&p, QuantumNumbers::new(4, 0)).unwrap();
    let grid = uniform_grid(wf.cutoff(), 5000);
    let values: Vec<f64> = sample(&wf, &grid).unwrap().into_iter().map(|(_, v)| v).collect();
    assert_eq!(count_nodes(&values), 4);
}
