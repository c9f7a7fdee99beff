//! The square-wave mixer: comparator-squared references replace analog
//! multipliers. Mixing against the squared reference, low-passing the
//! harmonics, and compensating the 4/π fundamental reproduces ideal
//! multiplication.

use aqed::signal::{SampledSignal, SignalConfig, DEFAULT_COMPARATOR_TOL};
use aqed::spectral::quadrature_square;
use aqed::Complex64;

fn main() {
    let config = SignalConfig::default_1khz();

    // A cosine against its own comparator output: the DC term of
    // cos·sign(cos) is 2/π, and the π/4 gain restores the ideal 1/2.
    let cos = SampledSignal::cosine(config, 1);
    let square = cos.comparator(DEFAULT_COMPARATOR_TOL).unwrap();
    let mixed = cos.mix(&square, 2.0 * config.omega0).unwrap();
    println!(
        "cos·sign(cos) mixed and compensated: DC = {:.6} (ideal cos² DC = 0.5)",
        mixed.mean().re
    );

    // One-qubit coefficient extraction, mixer vs ideal multiplier.
    let a0 = Complex64::new(0.8, -0.3);
    let a1 = Complex64::new(-0.45, 0.6);
    let psi = SampledSignal::tone(config, 1)
        .scale(a0)
        .add(&SampledSignal::tone(config, -1).scale(a1))
        .unwrap();
    let conj_carrier = SampledSignal::tone(config, -1);

    let ideal = psi
        .multiply(&conj_carrier)
        .unwrap()
        .lowpass(config.omega0)
        .unwrap()
        .mean();
    let square_ref = quadrature_square(&conj_carrier).unwrap();
    let mixed = psi.mix(&square_ref, config.omega0).unwrap().mean();

    println!("\none-qubit projection onto |0⟩ (true a0 = {:+.4}{:+.4}j):", a0.re, a0.im);
    println!("  ideal multiplier: {:+.10}{:+.10}j", ideal.re, ideal.im);
    println!("  square-wave mixer: {:+.10}{:+.10}j", mixed.re, mixed.im);
    println!("  |mixer − ideal| = {:.2e}", (mixed - ideal).norm());

    // The mixer's whole trick in one line: the squared reference is
    // exactly ±1-valued, so the analog multiplier degenerates to a switch.
    let distinct: std::collections::BTreeSet<String> = square_ref
        .samples()
        .iter()
        .map(|s| format!("{:+.0}{:+.0}j", s.re, s.im))
        .collect();
    println!("\nsquare reference sample values: {distinct:?}");
}
