//! Quantum Fourier transform on the spatial engine: |000000⟩ spreads to 64
//! equal probabilities, and |001⟩ on three qubits becomes a pure phase
//! ramp across the channels.

use aqed::circuit::{run_circuit, Circuit, Engine};
use aqed::Complex64;

fn basis(n: usize, x: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); 1 << n];
    v[x] = Complex64::new(1.0, 0.0);
    v
}

fn main() {
    let circuit = Circuit::qft(6).unwrap();
    let out = run_circuit(&circuit, &basis(6, 0), &Engine::spatial()).unwrap();
    let probs = out.probabilities();
    let (min, max) = probs
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &p| (lo.min(p), hi.max(p)));
    println!("qft(6) on |000000⟩:");
    println!("  probabilities span [{min:.12}, {max:.12}] (ideal 1/64 = {:.12})", 1.0 / 64.0);
    println!("  spread = {:.2e}", max - min);

    // A one-hot input produces the matching DFT column: constant magnitude,
    // linear phase.
    let out = run_circuit(&Circuit::qft(3).unwrap(), &basis(3, 1), &Engine::spatial()).unwrap();
    println!("\nqft(3) on |001⟩ (DFT column 1):");
    println!("  k  amplitude            phase/2π");
    for (k, a) in out.normalized().iter().enumerate() {
        println!(
            "  {k}  {:+.4}{:+.4}j   {:+.4}",
            a.re,
            a.im,
            a.arg() / (2.0 * std::f64::consts::PI)
        );
    }
}
