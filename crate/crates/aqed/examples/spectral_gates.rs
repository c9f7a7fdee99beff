//! Single-qubit gates on the composite spectral signal: project the two
//! carrier branches, rebuild with the gate's entries, and measure. Also
//! shows the mixer-mode degradation against the ideal multiplier.

use aqed::gate::{hadamard_n, x_n};
use aqed::signal::SignalConfig;
use aqed::spectral::{Multiplier, SpectralState};
use aqed::Complex64;

fn show(label: &str, coeffs: &[Complex64]) {
    let body: Vec<String> = coeffs
        .iter()
        .map(|a| format!("{:+.4}{:+.4}j", a.re, a.im))
        .collect();
    println!("{label}: [{}]", body.join(", "));
}

fn main() {
    let config = SignalConfig::default_1khz();

    // |0⟩ through the unnormalized Hadamard: amplitudes (1, 1) on the
    // signal, with the 2^{-1/2} factor tracked by the circuit runner.
    let ground = SpectralState::encode(
        &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        &config,
    )
    .unwrap();
    let h = hadamard_n(1, false).unwrap();
    let spread = ground.apply_gate(&h, 0).unwrap();
    show("H|0⟩ (unnormalized)", &spread.measure().unwrap());

    // X on spectral qubit 1 of a three-qubit state swaps coefficient pairs
    // four positions apart (bit weight 2).
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 8];
    coeffs[0] = Complex64::new(0.9, 0.0);
    coeffs[3] = Complex64::new(0.0, -0.7);
    let state = SpectralState::encode(&coeffs, &config).unwrap();
    let flipped = state.apply_gate(&x_n(1).unwrap(), 1).unwrap();
    show("before X on lattice bit 1", &state.measure().unwrap());
    show("after  X on lattice bit 1", &flipped.measure().unwrap());

    // Mixer mode runs the same gate through comparator-squared references.
    let ideal = state.apply_gate(&h, 2).unwrap().measure().unwrap();
    let mixed = state
        .clone()
        .with_multiplier(Multiplier::Mixer)
        .apply_gate(&h, 2)
        .unwrap()
        .measure()
        .unwrap();
    let worst = ideal
        .iter()
        .zip(&mixed)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("\nH on lattice bit 2, mixer vs ideal: max coefficient deviation {worst:.2e}");
}
