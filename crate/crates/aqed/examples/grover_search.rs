//! Six-qubit Grover search on every engine, checked against the closed
//! form sin²((2k+1)·arcsin(2^{−n/2})).

use aqed::circuit::{run_circuit, Circuit, Engine, GroverSpec};
use aqed::oracle::grover_success_probability;
use aqed::Complex64;

fn main() {
    let n = 6u32;
    let target = 0usize;
    let iterations = GroverSpec::default_iterations(n);
    let spec = GroverSpec::new(n, target, iterations).unwrap();
    let circuit = Circuit::grover(&spec);
    println!(
        "grover: n={n}, target={target}, {iterations} iterations, {} ops",
        circuit.gates.len()
    );

    let mut input = vec![Complex64::new(0.0, 0.0); 1 << n];
    input[0] = Complex64::new(1.0, 0.0);

    println!("\nengine    target prob   runner scale");
    for engine in [Engine::spatial(), Engine::spectral(), Engine::oracle()] {
        let out = run_circuit(&circuit, &input, &engine).unwrap();
        println!(
            "{:<9} {:.9}   {:.3e}",
            engine.id(),
            out.probabilities()[target],
            out.scale
        );
    }
    println!(
        "closed    {:.9}   sin²((2k+1)·arcsin(1/8))",
        grover_success_probability(n, iterations)
    );

    // Success probability over the iteration count: it oscillates, peaking
    // near round(π/4·√N).
    println!("\n k  success probability");
    for k in 0..=10u32 {
        let p = grover_success_probability(n, k);
        let bar = "#".repeat((p * 40.0).round() as usize);
        println!("{k:>2}  {p:.5} {bar}");
    }
}
