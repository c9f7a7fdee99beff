//! Dense state-vector reference used as ground truth by equivalence tests.
//!
//! Deliberately shares no evolution code with the signal engines: gates are
//! lifted entry by entry with explicit bit matching and applied as plain
//! matrix-vector products. Only normalized (unitary) gates act here; scaled
//! gates are normalized on entry.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gate::GateMatrix;

/// A 2^n amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() < 2 || !amplitudes.len().is_power_of_two() {
            return Err(Error::DimensionMismatch(format!(
                "state length must be a power of two >= 2, got {}",
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite amplitude".into()));
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state |x⟩ on n qubits.
    pub fn basis(n: u32, x: usize) -> Result<Self> {
        if n == 0 || n >= usize::BITS {
            return Err(Error::IndexOutOfRange(format!("qubit count {n}")));
        }
        let dim = 1usize << n;
        if x >= dim {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {x} for {n} qubit(s)"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[x] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn qubits(&self) -> u32 {
        self.amplitudes.len().trailing_zeros()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Applies the unitary form of `u` to `targets` (MSB-first, qubit 0 is
    /// the top wire) through a fully materialized lifted matrix.
    pub fn apply(&self, u: &GateMatrix, targets: &[usize]) -> Result<Self> {
        let n = self.qubits() as usize;
        let k = targets.len();
        if u.dim() != 1usize << k {
            return Err(Error::DimensionMismatch(format!(
                "{}×{} gate cannot target {k} qubit(s)",
                u.dim(),
                u.dim()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &t in targets {
            if t >= n {
                return Err(Error::IndexOutOfRange(format!("target {t} of {n}")));
            }
            if !seen.insert(t) {
                return Err(Error::InvalidParameter(format!("duplicate target {t}")));
            }
        }
        let unitary = u.normalized();
        let dim = self.amplitudes.len();
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for (row, out_row) in out.iter_mut().enumerate() {
            for col in 0..dim {
                // Non-target bits must agree between row and column.
                let mut rest_match = true;
                for bit in 0..n {
                    if targets.contains(&bit) {
                        continue;
                    }
                    let pos = n - 1 - bit;
                    if (row >> pos) & 1 != (col >> pos) & 1 {
                        rest_match = false;
                        break;
                    }
                }
                if !rest_match {
                    continue;
                }
                let mut u_row = 0usize;
                let mut u_col = 0usize;
                for (j, &t) in targets.iter().enumerate() {
                    let pos = n - 1 - t;
                    u_row |= ((row >> pos) & 1) << (k - 1 - j);
                    u_col |= ((col >> pos) & 1) << (k - 1 - j);
                }
                *out_row += unitary.at(u_row, u_col) * self.amplitudes[col];
            }
        }
        Ok(Self { amplitudes: out })
    }
}

/// Closed-form success probability of Grover search: sin²((2k+1)·θ) with
/// θ = arcsin(2^{−n/2}). Independent of the searched index.
pub fn grover_success_probability(n: u32, iterations: u32) -> f64 {
    let theta = (2f64.powf(-(n as f64) / 2.0)).asin();
    let s = ((2 * iterations + 1) as f64 * theta).sin();
    s * s
}
