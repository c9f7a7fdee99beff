//! Frequency-domain (spectral) encoding: one composite signal carries all
//! 2^n coefficients on octave-spaced tones.
//!
//! Spectral qubit `i` owns the frequency ω_i = 2^i·ω0; bit i of a basis
//! index picks the tone's sign (0 → +ω_i, 1 → −ω_i). Note this is the
//! lattice convention: bit i has weight 2^i in the coefficient index, so
//! spectral qubit `i` corresponds to circuit wire `n−1−i` under the
//! MSB-first circuit convention.
//!
//! Projection extracts coefficients by conjugate multiplication plus
//! brick-wall filtering. The multiplication backend is selectable: `Ideal`
//! uses the exact quadrature product, `Mixer` squares the reference with a
//! comparator, mixes, and low-passes, with a per-channel band-select filter
//! ahead of the mixer so the square wave's odd harmonics cannot fold other
//! lattice tones onto DC.

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gate::GateMatrix;
use crate::signal::{BasisIndex, SampledSignal, SignalConfig, DEFAULT_COMPARATOR_TOL};

/// Multiplication backend used by projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Multiplier {
    /// Exact quadrature multiplication.
    #[default]
    Ideal,
    /// Comparator-squared reference, mixing, harmonic rejection, π/4 gain.
    Mixer,
}

/// An n-qubit state as a single composite signal.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralState {
    n: u32,
    signal: SampledSignal,
    multiplier: Multiplier,
}

impl SpectralState {
    /// Synthesizes Σ_x coeffs[x]·φ_x(t). Length must be 2^n.
    pub fn encode(coeffs: &[Complex64], config: &SignalConfig) -> Result<Self> {
        let n = qubit_count(coeffs.len())?;
        if !config.supports_qubits(n) {
            return Err(Error::Nyquist(format!(
                "{} samples cannot carry a {n}-qubit lattice",
                config.samples_per_window
            )));
        }
        let k = config.samples_per_window;
        let mut samples = vec![Complex64::new(0.0, 0.0); k];
        for (x, &a) in coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            let f = BasisIndex::new(x, n)?.frequency_multiple();
            let tone = SampledSignal::tone(*config, f);
            for (s, t) in samples.iter_mut().zip(tone.samples()) {
                *s += a * t;
            }
        }
        Ok(Self {
            n,
            signal: SampledSignal::from_samples(*config, samples)?,
            multiplier: Multiplier::Ideal,
        })
    }

    /// Wraps an existing signal, checking that its spectrum lives on the
    /// n-qubit lattice.
    pub fn from_signal(n: u32, signal: SampledSignal) -> Result<Self> {
        if n == 0 || !signal.config().supports_qubits(n) {
            return Err(Error::Nyquist(format!(
                "config cannot carry a {n}-qubit lattice"
            )));
        }
        let lattice = lattice_frequencies(&(0..n).collect());
        let k = signal.len() as i64;
        let spectrum = signal.spectrum();
        let peak = spectrum.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (bin, v) in spectrum.iter().enumerate() {
            let signed = if (bin as i64) <= k / 2 {
                bin as i64
            } else {
                bin as i64 - k
            };
            if !lattice.contains(&signed) && v.norm() > 1e-9 * peak.max(1.0) {
                return Err(Error::InvalidParameter(format!(
                    "spectrum has off-lattice content at {signed}·ω0"
                )));
            }
        }
        Ok(Self {
            n,
            signal,
            multiplier: Multiplier::Ideal,
        })
    }

    pub fn with_multiplier(mut self, multiplier: Multiplier) -> Self {
        self.multiplier = multiplier;
        self
    }

    pub fn multiplier(&self) -> Multiplier {
        self.multiplier
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    pub fn signal(&self) -> &SampledSignal {
        &self.signal
    }

    pub fn config(&self) -> &SignalConfig {
        self.signal.config()
    }

    fn wrap(&self, signal: SampledSignal) -> Self {
        Self {
            n: self.n,
            signal,
            multiplier: self.multiplier,
        }
    }

    /// Parallel projection onto basis state x: conjugate multiplication
    /// (ideal or mixer), low-pass at ω0, DC readout. Returns a_x.
    pub fn project_basis(&self, x: BasisIndex) -> Result<Complex64> {
        if x.qubits() != self.n {
            return Err(Error::IndexOutOfRange(format!(
                "basis index for {} qubit(s) used on a {}-qubit state",
                x.qubits(),
                self.n
            )));
        }
        let cfg = *self.config();
        let f = x.frequency_multiple();
        let conj_carrier = SampledSignal::tone(cfg, -f);
        match self.multiplier {
            Multiplier::Ideal => {
                let product = self.signal.multiply(&conj_carrier)?;
                Ok(product.lowpass(cfg.omega0)?.mean())
            }
            Multiplier::Mixer => {
                // Band-select the ±|f| pair first: the square reference's
                // odd harmonics would otherwise fold other lattice tones
                // onto DC.
                let band = f.unsigned_abs() as f64 * cfg.omega0;
                let selected = self
                    .signal
                    .bandpass(band - 0.5 * cfg.omega0, band + 0.5 * cfg.omega0)?;
                let square_ref = quadrature_square(&conj_carrier)?;
                Ok(selected.mix(&square_ref, cfg.omega0)?.mean())
            }
        }
    }

    /// One recursive-projection step: multiply by e^{∓jω_qubit·t} and keep
    /// exactly the frequencies the remaining qubits can produce.
    ///
    /// Recursive projection always multiplies ideally; square-wave mixing
    /// is incompatible with its wide intermediate bands.
    pub fn project_qubit(&self, qubit: u32, bit: u8) -> Result<QubitProjection> {
        if qubit >= self.n {
            return Err(Error::IndexOutOfRange(format!(
                "qubit {qubit} of {}",
                self.n
            )));
        }
        let remaining: BTreeSet<u32> = (0..self.n).collect();
        project_step(&self.signal, qubit, bit, &remaining)
    }

    /// Chains recursive projection over every qubit of x and returns a_x.
    pub fn recursive_coefficient(&self, x: BasisIndex) -> Result<Complex64> {
        if x.qubits() != self.n {
            return Err(Error::IndexOutOfRange(format!(
                "basis index for {} qubit(s) used on a {}-qubit state",
                x.qubits(),
                self.n
            )));
        }
        let mut proj = self.project_qubit(0, x.bit(0))?;
        for qubit in 1..self.n {
            proj = proj.then(qubit, x.bit(qubit))?;
        }
        Ok(proj.dc())
    }

    /// Single-qubit gate on spectral qubit `qubit`, applied exactly as
    /// given (no implicit normalization).
    ///
    /// Ideal mode extracts the two carrier-stripped residuals and rebuilds
    /// (U00·e^{jω_i t} + U10·e^{−jω_i t})ψ_0 + (U01·e^{jω_i t} + U11·e^{−jω_i t})ψ_1.
    /// Mixer mode measures every coefficient through the mixer bank, maps
    /// the coefficient pairs, and recombines the gated basis signals.
    pub fn apply_gate(&self, u: &GateMatrix, qubit: u32) -> Result<Self> {
        if u.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "spectral gate application needs a 2×2 gate, got {}×{}",
                u.dim(),
                u.dim()
            )));
        }
        if qubit >= self.n {
            return Err(Error::IndexOutOfRange(format!(
                "qubit {qubit} of {}",
                self.n
            )));
        }
        match self.multiplier {
            Multiplier::Ideal => {
                let cfg = *self.config();
                let w = 1i64 << qubit;
                let remaining: BTreeSet<u32> = (0..self.n).collect();
                let psi0 = project_step(&self.signal, qubit, 0, &remaining)?;
                let psi1 = project_step(&self.signal, qubit, 1, &remaining)?;
                let up = SampledSignal::tone(cfg, w);
                let down = SampledSignal::tone(cfg, -w);
                let branch0 = up
                    .scale(u.at(0, 0))
                    .add(&down.scale(u.at(1, 0)))?
                    .multiply(psi0.residual())?;
                let branch1 = up
                    .scale(u.at(0, 1))
                    .add(&down.scale(u.at(1, 1)))?
                    .multiply(psi1.residual())?;
                Ok(self.wrap(branch0.add(&branch1)?))
            }
            Multiplier::Mixer => {
                let coeffs = self.measure()?;
                let mut mapped = coeffs.clone();
                let w = 1usize << qubit;
                for (x, &cx) in coeffs.iter().enumerate() {
                    if x & w == 0 {
                        let y = x | w;
                        mapped[x] = u.at(0, 0) * cx + u.at(0, 1) * coeffs[y];
                        mapped[y] = u.at(1, 0) * cx + u.at(1, 1) * coeffs[y];
                    }
                }
                let cfg = *self.config();
                Ok(Self::encode(&mapped, &cfg)?.with_multiplier(self.multiplier))
            }
        }
    }

    /// Coefficients of every basis state, in ascending index order.
    pub fn measure(&self) -> Result<Vec<Complex64>> {
        (0..(1usize << self.n))
            .map(|x| self.project_basis(BasisIndex::new(x, self.n)?))
            .collect()
    }
}

/// Output of one recursive-projection step: the matched carrier's index
/// and the carrier-stripped residual signal.
#[derive(Debug, Clone)]
pub struct QubitProjection {
    qubit: u32,
    bit: u8,
    residual: SampledSignal,
    remaining: BTreeSet<u32>,
}

impl QubitProjection {
    pub fn qubit(&self) -> u32 {
        self.qubit
    }

    pub fn bit(&self) -> u8 {
        self.bit
    }

    /// ψ_a^{(i)}: spectrum confined to the remaining qubits' lattice.
    pub fn residual(&self) -> &SampledSignal {
        &self.residual
    }

    /// Qubit indices not yet projected out.
    pub fn remaining(&self) -> impl Iterator<Item = u32> + '_ {
        self.remaining.iter().copied()
    }

    /// The matched carrier e^{±jω_i t}.
    pub fn carrier(&self) -> SampledSignal {
        let w = 1i64 << self.qubit;
        let f = if self.bit == 0 { w } else { -w };
        SampledSignal::tone(*self.residual.config(), f)
    }

    /// Carrier × residual: the projected component Π_a^{(i)}|ψ⟩ as a signal.
    pub fn reassembled(&self) -> Result<SampledSignal> {
        self.carrier().multiply(&self.residual)
    }

    /// Projects a further qubit out of the residual.
    pub fn then(&self, qubit: u32, bit: u8) -> Result<Self> {
        if !self.remaining.contains(&qubit) {
            return Err(Error::IndexOutOfRange(format!(
                "qubit {qubit} already projected or out of range"
            )));
        }
        project_step(&self.residual, qubit, bit, &self.remaining)
    }

    /// DC value of the residual; the coefficient a_x once every qubit has
    /// been projected out.
    pub fn dc(&self) -> Complex64 {
        self.residual.mean()
    }
}

fn project_step(
    signal: &SampledSignal,
    qubit: u32,
    bit: u8,
    remaining: &BTreeSet<u32>,
) -> Result<QubitProjection> {
    if bit > 1 {
        return Err(Error::InvalidParameter(format!("bit must be 0 or 1, got {bit}")));
    }
    let cfg = *signal.config();
    let w = 1i64 << qubit;
    // Conjugate of the matched carrier: bit 0 carries +ω, so multiply by −ω.
    let shift = if bit == 0 { -w } else { w };
    let product = signal.multiply(&SampledSignal::tone(cfg, shift))?;
    let mut rest = remaining.clone();
    rest.remove(&qubit);
    let survivors = lattice_frequencies(&rest);
    let residual = product.retain_bins(&survivors);
    Ok(QubitProjection {
        qubit,
        bit,
        residual,
        remaining: rest,
    })
}

/// Every frequency multiple the given qubits can sum to: Σ ±2^k over the
/// set. The empty set gives {0}.
fn lattice_frequencies(qubits: &BTreeSet<u32>) -> BTreeSet<i64> {
    let mut freqs = BTreeSet::new();
    freqs.insert(0i64);
    for q in qubits {
        let w = 1i64 << q;
        freqs = freqs
            .iter()
            .flat_map(|f| [f + w, f - w])
            .collect();
    }
    freqs
}

/// Comparator applied to both quadratures of a carrier: the complex square
/// reference sign(Re) + j·sign(Im).
pub fn quadrature_square(carrier: &SampledSignal) -> Result<SampledSignal> {
    let re = carrier.real_part().comparator(DEFAULT_COMPARATOR_TOL)?;
    let im = carrier.imag_part().comparator(DEFAULT_COMPARATOR_TOL)?;
    re.add(&im.scale(Complex64::new(0.0, 1.0)))
}

fn qubit_count(len: usize) -> Result<u32> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::DimensionMismatch(format!(
            "coefficient vector length must be a power of two >= 2, got {len}"
        )));
    }
    Ok(len.trailing_zeros())
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    n: u32,
    coeffs: Vec<[f64; 2]>,
}

/// Serializes a coefficient vector as `{"n": ..., "coeffs": [[re, im], ...]}`.
pub fn coeffs_to_json(coeffs: &[Complex64]) -> Result<String> {
    let n = qubit_count(coeffs.len())?;
    let body = StateJson {
        n,
        coeffs: coeffs.iter().map(|c| [c.re, c.im]).collect(),
    };
    Ok(serde_json::to_string(&body)?)
}

/// Parses the JSON state format back into a coefficient vector.
pub fn coeffs_from_json(text: &str) -> Result<(u32, Vec<Complex64>)> {
    let body: StateJson = serde_json::from_str(text)?;
    let coeffs: Vec<Complex64> = body
        .coeffs
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    let n = qubit_count(coeffs.len())?;
    if n != body.n {
        return Err(Error::InvalidParameter(format!(
            "state claims {} qubit(s) but carries {} coefficients",
            body.n,
            coeffs.len()
        )));
    }
    Ok((n, coeffs))
}
