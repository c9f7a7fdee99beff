//! Signal-level emulation of quantum circuits.
//!
//! Quantum states are represented as classical complex signals under two
//! encodings: a spectral encoding, where one composite signal carries all
//! 2^n coefficients on octave-spaced tones and gates act through
//! projection, filtering, and recombination; and a spatial encoding, where
//! 2^m parallel channels scale a shared carrier and gates act on the
//! amplitude vector. A deliberately independent dense state-vector oracle
//! backs every equivalence test, and a closed-form resource model counts
//! the multiplications, additions, and opamps an analog realization needs.
//!
//! ```
//! use aqed::circuit::{run_circuit, Circuit, Engine, GroverSpec};
//! use aqed::Complex64;
//!
//! let spec = GroverSpec::new(6, 0, 6).unwrap();
//! let circuit = Circuit::grover(&spec);
//! let mut input = vec![Complex64::new(0.0, 0.0); 64];
//! input[0] = Complex64::new(1.0, 0.0);
//! let out = run_circuit(&circuit, &input, &Engine::spatial()).unwrap();
//! assert!(out.probabilities()[0] > 0.99);
//! ```
//!
//! The runnable examples cover each capability end to end; see the crate's
//! `examples/` directory and the README.

pub mod circuit;
pub mod cli;
pub mod error;
pub mod gate;
pub mod oracle;
pub mod resources;
pub mod signal;
pub mod spatial;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
