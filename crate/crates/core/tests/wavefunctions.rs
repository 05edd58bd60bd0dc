use boundstate::oracle::residual_norm;
use boundstate::potentials::RadialPotential;
use boundstate::wavefunctions::{figure_kratzer, figure_pseudoharmonic, node_count, overlap, quadrature_norm, sample};
use boundstate::{builtin_molecule, LevelRule, Mie, Pseudoharmonic, QuantumNumbers, UnitSystem, Wavefunction};

const N_MAX: u32 = 5;

fn pseudoharmonic_wells() -> Vec<(&'static str, Pseudoharmonic)> {
    let lab = UnitSystem::lab();
    vec![
        ("N2", Pseudoharmonic::from_molecule(&builtin_molecule("N2").unwrap(), &lab).unwrap()),
        ("CO", Pseudoharmonic::from_molecule(&builtin_molecule("CO").unwrap(), &lab).unwrap()),
        ("natural", figure_pseudoharmonic()),
    ]
}

fn mie_wells() -> Vec<(&'static str, Mie)> {
    let lab = UnitSystem::lab();
    vec![
        ("N2", Mie::from_molecule(&builtin_molecule("N2").unwrap(), &lab).unwrap()),
        ("CO", Mie::from_molecule(&builtin_molecule("CO").unwrap(), &lab).unwrap()),
        ("natural", figure_kratzer()),
    ]
}

fn states<F: Fn(QuantumNumbers) -> Wavefunction>(build: F) -> Vec<Wavefunction> {
    LevelRule::EllUpToN.enumerate(N_MAX).into_iter().map(build).collect()
}

fn check_orthonormal(label: &str, wfs: &[Wavefunction]) {
    for (i, a) in wfs.iter().enumerate() {
        let norm = quadrature_norm(a).unwrap();
        assert!((norm - 1.0).abs() < 1e-8, "{label} {}: norm {norm}", a.qn());
        for b in &wfs[..i] {
            if a.qn().ell == b.qn().ell {
                let s = overlap(a, b).unwrap();
                assert!(s.abs() < 1e-8, "{label} <{}|{}> = {s:e}", a.qn(), b.qn());
            }
        }
    }
}

#[test]
fn pseudoharmonic_orthonormal() {
    for (label, p) in pseudoharmonic_wells() {
        check_orthonormal(label, &states(|qn| Wavefunction::pseudoharmonic(&p, qn).unwrap()));
    }
}

#[test]
fn mie_orthonormal() {
    for (label, p) in mie_wells() {
        check_orthonormal(label, &states(|qn| Wavefunction::mie(&p, qn).unwrap()));
    }
}

#[test]
fn pseudoharmonic_constant_is_exact() {
    for (label, p) in pseudoharmonic_wells() {
        for wf in states(|qn| Wavefunction::pseudoharmonic(&p, qn).unwrap()) {
            let dev = (wf.construction_norm() - 1.0).abs();
            assert!(dev < 1e-10, "{label} {}: analytic constant off by {dev:e}", wf.qn());
            assert_eq!(wf.ln_norm_constant(), wf.analytic_ln_norm_constant());
        }
    }
}

#[test]
fn mie_constant_agrees_with_quadrature() {
    for (label, p) in mie_wells() {
        for wf in states(|qn| Wavefunction::mie(&p, qn).unwrap()) {
            let dev = (wf.construction_norm() - 1.0).abs();
            assert!(dev < 1e-10, "{label} {}: analytic constant off by {dev:e}", wf.qn());
        }
    }
}

#[test]
fn node_theorem() {
    for (label, p) in pseudoharmonic_wells() {
        for wf in states(|qn| Wavefunction::pseudoharmonic(&p, qn).unwrap()) {
            assert_eq!(node_count(&wf), wf.qn().n as usize, "{label} {}", wf.qn());
        }
    }
    for (label, p) in mie_wells() {
        for wf in states(|qn| Wavefunction::mie(&p, qn).unwrap()) {
            assert_eq!(node_count(&wf), wf.qn().n as usize, "{label} {}", wf.qn());
        }
    }
}

fn residual_at<P: RadialPotential<f64>>(p: &P, lambda: f64, wf: &Wavefunction, points: usize) -> f64 {
    let r_cut = wf.cutoff();
    let h = r_cut / points as f64;
    let grid: Vec<f64> = (points / 20..=points).map(|i| i as f64 * h).collect();
    let samples = sample(wf, &grid).unwrap();
    residual_norm(p, lambda, wf.qn().ell, wf.energy(), &samples).unwrap()
}

fn observed_order<P: RadialPotential<f64>>(p: &P, lambda: f64, wf: &Wavefunction) -> f64 {
    let coarse = residual_at(p, lambda, wf, 2000);
    let fine = residual_at(p, lambda, wf, 4000);
    (coarse / fine).log2()
}

#[test]
fn residual_converges_at_second_order() {
    let lab = UnitSystem::lab();
    let n2 = builtin_molecule("N2").unwrap();
    let mie = Mie::from_molecule(&n2, &lab).unwrap();
    let wf = Wavefunction::mie(&mie, QuantumNumbers::new(1, 1)).unwrap();
    let order = observed_order(&mie, mie.lambda, &wf);
    assert!((order - 2.0).abs() < 0.2, "N2 kratzer (1,1): order {order}");

    let ph = Pseudoharmonic::from_molecule(&n2, &lab).unwrap();
    let wf = Wavefunction::pseudoharmonic(&ph, QuantumNumbers::new(2, 1)).unwrap();
    let order = observed_order(&ph, ph.lambda, &wf);
    assert!((order - 2.0).abs() < 0.2, "N2 pseudoharmonic (2,1): order {order}");
}

#[test]
fn residual_detects_wrong_energy() {
    let p = figure_pseudoharmonic();
    let wf = Wavefunction::pseudoharmonic(&p, QuantumNumbers::new(1, 0)).unwrap();
    let exact = residual_at(&p, 0.5, &wf, 4000);
    let h = wf.cutoff() / 4000.0;
    let grid: Vec<f64> = (200..=4000).map(|i| i as f64 * h).collect();
    let samples = sample(&wf, &grid).unwrap();
    let shifted = residual_norm(&p, 0.5, 0, wf.energy() + 0.1, &samples).unwrap();
    assert!(shifted > 100.0 * exact, "exact {exact:e}, shifted {shifted:e}");
}
