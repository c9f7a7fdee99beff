//! Sampled complex signals on a one-period window.
//!
//! Everything in this crate manipulates finite windows of complex samples.
//! A window always spans exactly one period `T = 2π/ω0` of the fundamental,
//! so every integer harmonic of `ω0` integrates to zero over the window and
//! the discrete inner product of band-limited tones is exact up to float
//! rounding. Samples are taken at bin midpoints `t_k = (k + 1/2)·T/K`, which
//! keeps sampled square waves symmetric and keeps comparator inputs away
//! from exact zero crossings for every basis tone.
//!
//! Frequencies are handled as signed integer multiples of `ω0` ("bins");
//! brick-wall filters zero DFT bins outside the requested band.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::io::Write;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Default fundamental: 2π · 1 kHz.
pub const DEFAULT_OMEGA0: f64 = 2.0 * PI * 1000.0;

/// Default window resolution; enough for 6 qubits with 16× Nyquist margin.
pub const DEFAULT_SAMPLES: usize = 4096;

/// Default relative tolerance for the comparator's realness check.
pub const DEFAULT_COMPARATOR_TOL: f64 = 1e-9;

/// Sampling window description shared by all signals that interact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalConfig {
    /// Base angular frequency ω0 in rad/s.
    pub omega0: f64,
    /// Window duration T in seconds; always exactly 2π/ω0.
    pub window: f64,
    /// Number of samples per window.
    pub samples_per_window: usize,
}

impl SignalConfig {
    /// Window of one fundamental period at `omega0` with `samples` points.
    pub fn new(omega0: f64, samples: usize) -> Result<Self> {
        if !(omega0.is_finite() && omega0 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "omega0 must be positive and finite, got {omega0}"
            )));
        }
        if samples == 0 {
            return Err(Error::InvalidParameter(
                "samples_per_window must be positive".into(),
            ));
        }
        Ok(Self {
            omega0,
            window: 2.0 * PI / omega0,
            samples_per_window: samples,
        })
    }

    /// 1 kHz fundamental, 4096 samples.
    pub fn default_1khz() -> Self {
        Self::new(DEFAULT_OMEGA0, DEFAULT_SAMPLES).expect("default config is valid")
    }

    /// True when the grid oversamples the largest basis tone of an
    /// `n`-qubit lattice by at least 4×.
    pub fn supports_qubits(&self, n: u32) -> bool {
        n < usize::BITS && self.samples_per_window >= (4usize << n)
    }

    /// Sample instant of bin `k`, at the bin midpoint.
    pub fn sample_time(&self, k: usize) -> f64 {
        (k as f64 + 0.5) * self.window / self.samples_per_window as f64
    }

    fn check_matches(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ConfigMismatch(format!(
                "{:?} vs {:?}",
                self, other
            )))
        }
    }
}

impl Default for SignalConfig {
    fn default() -> Self {
        Self::default_1khz()
    }
}

/// Index of one of the 2^n lattice basis signals.
///
/// Bit `i` of `x` (weight 2^i) selects the sign of the octave frequency
/// `ω_i = 2^i ω0`: bit 0 → +ω_i, bit 1 → −ω_i. The signal's total frequency
/// is the sum over bits, always an odd multiple of ω0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    x: usize,
    n: u32,
}

impl BasisIndex {
    pub fn new(x: usize, n: u32) -> Result<Self> {
        if n == 0 || n >= usize::BITS {
            return Err(Error::IndexOutOfRange(format!("qubit count {n}")));
        }
        if x >= (1usize << n) {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {x} for {n} qubit(s)"
            )));
        }
        Ok(Self { x, n })
    }

    pub fn index(&self) -> usize {
        self.x
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    pub fn bit(&self, i: u32) -> u8 {
        ((self.x >> i) & 1) as u8
    }

    /// Signed frequency of the basis signal as a multiple of ω0.
    pub fn frequency_multiple(&self) -> i64 {
        (0..self.n)
            .map(|i| {
                let w = 1i64 << i;
                if self.bit(i) == 0 {
                    w
                } else {
                    -w
                }
            })
            .sum()
    }
}

/// A finite window of complex samples.
///
/// Filtered signals carry their masked spectrum so that reapplying the same
/// brick-wall filter is a bit-identical no-op.
#[derive(Debug, Clone)]
pub struct SampledSignal {
    config: SignalConfig,
    samples: Vec<Complex64>,
    spectrum: OnceLock<Vec<Complex64>>,
}

impl PartialEq for SampledSignal {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config && self.samples == other.samples
    }
}

impl SampledSignal {
    pub fn from_samples(config: SignalConfig, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != config.samples_per_window {
            return Err(Error::DimensionMismatch(format!(
                "expected {} samples, got {}",
                config.samples_per_window,
                samples.len()
            )));
        }
        Ok(Self {
            config,
            samples,
            spectrum: OnceLock::new(),
        })
    }

    fn from_spectrum(config: SignalConfig, spectrum: Vec<Complex64>) -> Self {
        let samples = ifft_scaled(&spectrum);
        let cell = OnceLock::new();
        let _ = cell.set(spectrum);
        Self {
            config,
            samples,
            spectrum: cell,
        }
    }

    pub fn zero(config: SignalConfig) -> Self {
        Self::constant(config, Complex64::new(0.0, 0.0))
    }

    pub fn constant(config: SignalConfig, value: Complex64) -> Self {
        Self {
            samples: vec![value; config.samples_per_window],
            config,
            spectrum: OnceLock::new(),
        }
    }

    /// Complex exponential e^{j·multiple·ω0·t}.
    ///
    /// Tones recur constantly in projections, so the sample vectors are
    /// cached per (config, multiple).
    pub fn tone(config: SignalConfig, multiple: i64) -> Self {
        let key = (
            config.omega0.to_bits(),
            config.samples_per_window,
            multiple,
        );
        let cached = TONES.with(|tones| {
            tones
                .borrow_mut()
                .entry(key)
                .or_insert_with(|| {
                    let k = config.samples_per_window;
                    Arc::new(
                        (0..k)
                            .map(|i| {
                                let phase =
                                    2.0 * PI * multiple as f64 * (i as f64 + 0.5) / k as f64;
                                Complex64::from_polar(1.0, phase)
                            })
                            .collect::<Vec<_>>(),
                    )
                })
                .clone()
        });
        Self {
            config,
            samples: cached.as_ref().clone(),
            spectrum: OnceLock::new(),
        }
    }

    /// Real cosine cos(multiple·ω0·t).
    pub fn cosine(config: SignalConfig, multiple: i64) -> Self {
        let k = config.samples_per_window;
        let samples = (0..k)
            .map(|i| {
                let phase = 2.0 * PI * multiple as f64 * (i as f64 + 0.5) / k as f64;
                Complex64::new(phase.cos(), 0.0)
            })
            .collect();
        Self {
            config,
            samples,
            spectrum: OnceLock::new(),
        }
    }

    /// ±1 square wave in phase with cos(multiple·ω0·t).
    pub fn square_wave(config: SignalConfig, multiple: i64) -> Self {
        Self::cosine(config, multiple)
            .comparator(DEFAULT_COMPARATOR_TOL)
            .expect("cosine is real")
    }

    pub fn config(&self) -> &SignalConfig {
        &self.config
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Raw (unnormalized) DFT of the samples, computed once and cached.
    pub fn spectrum(&self) -> &[Complex64] {
        self.spectrum.get_or_init(|| fft_forward(&self.samples))
    }

    /// Mean of the samples; the DC Fourier coefficient.
    pub fn mean(&self) -> Complex64 {
        let sum: Complex64 = self.samples.iter().sum();
        sum / self.samples.len() as f64
    }

    pub fn max_magnitude(&self) -> f64 {
        self.samples.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.config.check_matches(&other.config)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_samples(self.config, samples)
    }

    /// Pointwise scaling by a complex factor.
    pub fn scale(&self, factor: Complex64) -> Self {
        let samples = self.samples.iter().map(|s| s * factor).collect();
        Self {
            config: self.config,
            samples,
            spectrum: OnceLock::new(),
        }
    }

    /// Pointwise complex product, computed as four real products and two
    /// additions per sample, mirroring a quadrature multiplier.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.config.check_matches(&other.config)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| {
                let re = a.re * b.re - a.im * b.im;
                let im = a.re * b.im + a.im * b.re;
                Complex64::new(re, im)
            })
            .collect();
        Self::from_samples(self.config, samples)
    }

    /// Windowed inner product (1/T)∫ a*(t) b(t) dt as the discrete mean.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        self.config.check_matches(&other.config)?;
        let sum: Complex64 = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(sum / self.samples.len() as f64)
    }

    /// Real part as a signal.
    pub fn real_part(&self) -> Self {
        let samples = self
            .samples
            .iter()
            .map(|s| Complex64::new(s.re, 0.0))
            .collect();
        Self {
            config: self.config,
            samples,
            spectrum: OnceLock::new(),
        }
    }

    /// Imaginary part as a real-valued signal.
    pub fn imag_part(&self) -> Self {
        let samples = self
            .samples
            .iter()
            .map(|s| Complex64::new(s.im, 0.0))
            .collect();
        Self {
            config: self.config,
            samples,
            spectrum: OnceLock::new(),
        }
    }

    fn filtered_by<F: Fn(i64) -> bool>(&self, keep: F) -> Self {
        let k = self.samples.len() as i64;
        let masked: Vec<Complex64> = self
            .spectrum()
            .iter()
            .enumerate()
            .map(|(bin, &value)| {
                let signed = if (bin as i64) <= k / 2 {
                    bin as i64
                } else {
                    bin as i64 - k
                };
                if keep(signed) {
                    value
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        Self::from_spectrum(self.config, masked)
    }

    /// Ideal brick-wall low-pass: keeps |frequency| ≤ cutoff (inclusive).
    pub fn lowpass(&self, cutoff: f64) -> Result<Self> {
        if !(cutoff.is_finite() && cutoff > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "low-pass cutoff must be positive, got {cutoff}"
            )));
        }
        let limit = cutoff / self.config.omega0 + 1e-9;
        Ok(self.filtered_by(|bin| (bin.abs() as f64) <= limit))
    }

    /// Ideal brick-wall band-pass: keeps lo ≤ |frequency| ≤ hi (inclusive).
    pub fn bandpass(&self, lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && lo < hi) {
            return Err(Error::InvalidParameter(format!(
                "band-pass requires 0 <= lo < hi, got lo={lo}, hi={hi}"
            )));
        }
        let lo_limit = lo / self.config.omega0 - 1e-9;
        let hi_limit = hi / self.config.omega0 + 1e-9;
        Ok(self.filtered_by(|bin| {
            let b = bin.abs() as f64;
            b >= lo_limit && b <= hi_limit
        }))
    }

    /// Keeps exactly the given set of signed frequency multiples.
    pub(crate) fn retain_bins(&self, bins: &std::collections::BTreeSet<i64>) -> Self {
        self.filtered_by(|bin| bins.contains(&bin))
    }

    /// Sign slicer: ±1 per sample from the real part; sign(0) = +1.
    ///
    /// Rejects inputs whose imaginary part exceeds `tolerance` relative to
    /// the peak magnitude.
    pub fn comparator(&self, tolerance: f64) -> Result<Self> {
        let peak = self.max_magnitude();
        let max_imag = self.samples.iter().map(|s| s.im.abs()).fold(0.0, f64::max);
        if peak > 0.0 && max_imag > tolerance * peak {
            return Err(Error::NotReal {
                max_imag,
                tolerance: tolerance * peak,
            });
        }
        let samples = self
            .samples
            .iter()
            .map(|s| {
                let sign = if s.re >= 0.0 { 1.0 } else { -1.0 };
                Complex64::new(sign, 0.0)
            })
            .collect();
        Self::from_samples(self.config, samples)
    }

    /// Square-wave mixer: pointwise product with a ±1-valued reference,
    /// harmonic rejection by an ideal low-pass at `rejection_cutoff`, and a
    /// π/4 gain to undo the square wave's 4/π fundamental.
    ///
    /// The reference may be real (one mixer) or carry a ±1 imaginary part
    /// too (quadrature pair of mixers).
    pub fn mix(&self, square_ref: &Self, rejection_cutoff: f64) -> Result<Self> {
        self.config.check_matches(&square_ref.config)?;
        let is_unit = |v: f64| (v.abs() - 1.0).abs() < 1e-12;
        let square_ok = square_ref
            .samples
            .iter()
            .all(|s| is_unit(s.re) && (s.im == 0.0 || is_unit(s.im)));
        if !square_ok {
            return Err(Error::NotSquare);
        }
        let product = self.multiply(square_ref)?;
        let filtered = product.lowpass(rejection_cutoff)?;
        Ok(filtered.scale(Complex64::new(PI / 4.0, 0.0)))
    }

    /// CSV export: header `t,re,im`, one row per sample.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,re,im")?;
        for (k, s) in self.samples.iter().enumerate() {
            writeln!(w, "{},{},{}", self.config.sample_time(k), s.re, s.im)?;
        }
        Ok(())
    }
}

/// Basis signal φ_x(t) = exp[Σ_i (−1)^{x_i} j·2^i·ω0·t].
pub fn basis_signal(x: BasisIndex, config: &SignalConfig) -> Result<SampledSignal> {
    if !config.supports_qubits(x.qubits()) {
        return Err(Error::Nyquist(format!(
            "{} samples cannot carry a {}-qubit lattice (need at least {})",
            config.samples_per_window,
            x.qubits(),
            4usize << x.qubits()
        )));
    }
    Ok(SampledSignal::tone(*config, x.frequency_multiple()))
}

fn fft_forward(samples: &[Complex64]) -> Vec<Complex64> {
    let mut buf = samples.to_vec();
    forward_plan(samples.len()).process(&mut buf);
    buf
}

fn ifft_scaled(spectrum: &[Complex64]) -> Vec<Complex64> {
    let mut buf = spectrum.to_vec();
    inverse_plan(spectrum.len()).process(&mut buf);
    let scale = 1.0 / spectrum.len() as f64;
    for v in &mut buf {
        *v *= scale;
    }
    buf
}

type PlanPair = (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>);
type ToneKey = (u64, usize, i64);

thread_local! {
    static PLANS: RefCell<HashMap<usize, PlanPair>> = RefCell::new(HashMap::new());
    static TONES: RefCell<HashMap<ToneKey, Arc<Vec<Complex64>>>> = RefCell::new(HashMap::new());
}

fn forward_plan(len: usize) -> Arc<dyn Fft<f64>> {
    PLANS.with(|plans| {
        plans
            .borrow_mut()
            .entry(len)
            .or_insert_with(|| {
                let mut planner = FftPlanner::new();
                (
                    planner.plan_fft_forward(len),
                    planner.plan_fft_inverse(len),
                )
            })
            .0
            .clone()
    })
}

fn inverse_plan(len: usize) -> Arc<dyn Fft<f64>> {
    PLANS.with(|plans| {
        plans
            .borrow_mut()
            .entry(len)
            .or_insert_with(|| {
                let mut planner = FftPlanner::new();
                (
                    planner.plan_fft_forward(len),
                    planner.plan_fft_inverse(len),
                )
            })
            .1
            .clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg() -> SignalConfig {
        SignalConfig::default_1khz()
    }

    fn small_cfg() -> SignalConfig {
        SignalConfig::new(DEFAULT_OMEGA0, 512).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn window_is_one_fundamental_period() {
        let cfg = cfg();
        assert_eq!(cfg.window, 2.0 * PI / cfg.omega0);
    }

    #[test]
    fn config_rejects_bad_values() {
        assert!(SignalConfig::new(0.0, 64).is_err());
        assert!(SignalConfig::new(-1.0, 64).is_err());
        assert!(SignalConfig::new(DEFAULT_OMEGA0, 0).is_err());
    }

    #[test]
    fn basis_index_bounds() {
        assert!(BasisIndex::new(3, 2).is_ok());
        assert!(BasisIndex::new(4, 2).is_err());
        assert!(BasisIndex::new(0, 0).is_err());
    }

    #[test]
    fn basis_frequencies_match_octave_lattice() {
        // n=1: x=0 → +1.
        assert_eq!(BasisIndex::new(0, 1).unwrap().frequency_multiple(), 1);
        assert_eq!(BasisIndex::new(1, 1).unwrap().frequency_multiple(), -1);
        // n=2: x=0 → +3, x=1 → +1, x=2 → −1, x=3 → −3.
        let freqs: Vec<i64> = (0..4)
            .map(|x| BasisIndex::new(x, 2).unwrap().frequency_multiple())
            .collect();
        assert_eq!(freqs, vec![3, 1, -1, -3]);
    }

    #[test]
    fn basis_signal_rejects_coarse_grid() {
        let coarse = SignalConfig::new(DEFAULT_OMEGA0, 16).unwrap();
        let x = BasisIndex::new(0, 3).unwrap();
        assert!(basis_signal(x, &coarse).is_err());
    }

    #[test]
    fn single_qubit_basis_orthonormal() {
        let cfg = cfg();
        let phi0 = basis_signal(BasisIndex::new(0, 1).unwrap(), &cfg).unwrap();
        let phi1 = basis_signal(BasisIndex::new(1, 1).unwrap(), &cfg).unwrap();
        let diag = phi0.inner_product(&phi0).unwrap();
        let off = phi0.inner_product(&phi1).unwrap();
        assert!((diag - c(1.0, 0.0)).norm() < 1e-12);
        assert!(off.norm() < 1e-12);
    }

    #[test]
    fn inner_product_recovers_superposition_coefficient() {
        let cfg = cfg();
        let a = [c(0.3, -0.4), c(-0.7, 0.2), c(0.1, 0.9), c(0.5, 0.0)];
        let mut psi = SampledSignal::zero(cfg);
        for (x, coeff) in a.iter().enumerate() {
            let phi = basis_signal(BasisIndex::new(x, 2).unwrap(), &cfg).unwrap();
            psi = psi.add(&phi.scale(*coeff)).unwrap();
        }
        for (x, coeff) in a.iter().enumerate() {
            let phi = basis_signal(BasisIndex::new(x, 2).unwrap(), &cfg).unwrap();
            let got = phi.inner_product(&psi).unwrap();
            assert!((got - coeff).norm() < 1e-12, "x={x}: {got} vs {coeff}");
        }
    }

    #[test]
    fn inner_product_conjugate_symmetric() {
        let cfg = small_cfg();
        let a = SampledSignal::tone(cfg, 3).scale(c(0.2, 0.7));
        let b = SampledSignal::tone(cfg, -1).scale(c(-0.4, 0.1));
        let ab = a.inner_product(&b).unwrap();
        let ba = b.inner_product(&a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-15);
    }

    #[test]
    fn inner_product_rejects_config_mismatch() {
        let a = SampledSignal::tone(cfg(), 1);
        let b = SampledSignal::tone(small_cfg(), 1);
        assert!(a.inner_product(&b).is_err());
    }

    #[test]
    fn multiply_conjugate_pair_is_one() {
        let cfg = small_cfg();
        let p = SampledSignal::tone(cfg, 1)
            .multiply(&SampledSignal::tone(cfg, -1))
            .unwrap();
        for s in p.samples() {
            assert!((s - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn multiply_by_unity_is_identity() {
        let cfg = small_cfg();
        let psi = SampledSignal::tone(cfg, 3).scale(c(0.3, -0.8));
        let one = SampledSignal::constant(cfg, c(1.0, 0.0));
        let p = psi.multiply(&one).unwrap();
        assert_eq!(p, psi);
    }

    #[test]
    fn multiply_shifts_two_qubit_state_down() {
        // e^{−3jω0t} · ψ leaves a00 at DC and the rest at −4, −2, −6 multiples.
        let cfg = cfg();
        let a = [c(0.5, 0.1), c(-0.2, 0.3), c(0.8, -0.5), c(0.05, 0.4)];
        let mut psi = SampledSignal::zero(cfg);
        for (x, coeff) in a.iter().enumerate() {
            let phi = basis_signal(BasisIndex::new(x, 2).unwrap(), &cfg).unwrap();
            psi = psi.add(&phi.scale(*coeff)).unwrap();
        }
        let shifted = psi.multiply(&SampledSignal::tone(cfg, -3)).unwrap();
        let coeff_at = |m: i64| {
            SampledSignal::tone(cfg, m)
                .inner_product(&shifted)
                .unwrap()
        };
        assert!((coeff_at(0) - a[0]).norm() < 1e-12);
        assert!((coeff_at(-2) - a[1]).norm() < 1e-12);
        assert!((coeff_at(-4) - a[2]).norm() < 1e-12);
        assert!((coeff_at(-6) - a[3]).norm() < 1e-12);
    }

    #[test]
    fn lowpass_keeps_dc_drops_double_frequency() {
        let cfg = cfg();
        let a0 = c(0.6, -0.2);
        let a1 = c(-0.3, 0.9);
        let s = SampledSignal::constant(cfg, a0)
            .add(&SampledSignal::tone(cfg, -2).scale(a1))
            .unwrap();
        let filtered = s.lowpass(cfg.omega0).unwrap();
        for v in filtered.samples() {
            assert!((v - a0).norm() < 1e-12);
        }
    }

    #[test]
    fn lowpass_passes_dc_exactly() {
        let cfg = small_cfg();
        let s = SampledSignal::constant(cfg, c(0.33, -1.25));
        let filtered = s.lowpass(5.0 * cfg.omega0).unwrap();
        for v in filtered.samples() {
            assert!((v - c(0.33, -1.25)).norm() < 1e-12);
        }
    }

    #[test]
    fn lowpass_removes_component_above_cutoff() {
        let cfg = small_cfg();
        let s = SampledSignal::tone(cfg, 4);
        let filtered = s.lowpass(3.0 * cfg.omega0).unwrap();
        assert!(filtered.max_magnitude() < 1e-12);
    }

    #[test]
    fn lowpass_boundary_inclusive() {
        let cfg = small_cfg();
        let s = SampledSignal::tone(cfg, 3);
        let filtered = s.lowpass(3.0 * cfg.omega0).unwrap();
        assert!((filtered.max_magnitude() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lowpass_rejects_nonpositive_cutoff() {
        let s = SampledSignal::tone(small_cfg(), 1);
        assert!(s.lowpass(0.0).is_err());
        assert!(s.lowpass(-1.0).is_err());
    }

    #[test]
    fn bandpass_selects_single_term() {
        let cfg = cfg();
        let a00 = c(0.4, 0.2);
        let s = SampledSignal::tone(cfg, 2)
            .scale(a00)
            .add(&SampledSignal::constant(cfg, c(-0.7, 0.1)))
            .unwrap()
            .add(&SampledSignal::tone(cfg, -4).scale(c(0.3, 0.3)))
            .unwrap();
        let filtered = s.bandpass(cfg.omega0, 3.0 * cfg.omega0).unwrap();
        let expect = SampledSignal::tone(cfg, 2).scale(a00);
        for (got, want) in filtered.samples().iter().zip(expect.samples()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn bandpass_keeps_both_signs() {
        let cfg = small_cfg();
        let s = SampledSignal::tone(cfg, 2)
            .add(&SampledSignal::tone(cfg, -2))
            .unwrap();
        let filtered = s.bandpass(cfg.omega0, 3.0 * cfg.omega0).unwrap();
        for (got, want) in filtered.samples().iter().zip(s.samples()) {
            assert!((got - want).norm() < 1e-12);
        }
    }

    #[test]
    fn bandpass_zero_in_zero_out() {
        let cfg = small_cfg();
        let z = SampledSignal::zero(cfg);
        let filtered = z.bandpass(cfg.omega0, 2.0 * cfg.omega0).unwrap();
        assert!(filtered.max_magnitude() == 0.0);
    }

    #[test]
    fn bandpass_rejects_inverted_band() {
        let s = SampledSignal::tone(small_cfg(), 1);
        assert!(s.bandpass(3.0 * DEFAULT_OMEGA0, DEFAULT_OMEGA0).is_err());
        assert!(s.bandpass(2.0 * DEFAULT_OMEGA0, 2.0 * DEFAULT_OMEGA0).is_err());
    }

    #[test]
    fn comparator_tracks_cosine_sign() {
        let cfg = cfg();
        let cos = SampledSignal::cosine(cfg, 1);
        let sq = cos.comparator(DEFAULT_COMPARATOR_TOL).unwrap();
        for (s, q) in cos.samples().iter().zip(sq.samples()) {
            let want = if s.re >= 0.0 { 1.0 } else { -1.0 };
            assert_eq!(q.re, want);
            assert_eq!(q.im, 0.0);
        }
        // Negated input gives the negated square wave.
        let neg = cos.scale(c(-1.0, 0.0)).comparator(1e-9).unwrap();
        for (a, b) in sq.samples().iter().zip(neg.samples()) {
            assert_eq!(a.re, -b.re);
        }
    }

    #[test]
    fn comparator_constant_positive() {
        let cfg = small_cfg();
        let s = SampledSignal::constant(cfg, c(2.0, 0.0));
        let sq = s.comparator(DEFAULT_COMPARATOR_TOL).unwrap();
        assert!(sq.samples().iter().all(|v| v.re == 1.0));
    }

    #[test]
    fn comparator_rejects_complex_input() {
        let cfg = small_cfg();
        let s = SampledSignal::tone(cfg, 1);
        assert!(matches!(
            s.comparator(DEFAULT_COMPARATOR_TOL),
            Err(Error::NotReal { .. })
        ));
    }

    #[test]
    fn mix_rejects_non_square_reference() {
        let cfg = small_cfg();
        let s = SampledSignal::cosine(cfg, 1);
        let not_square = SampledSignal::cosine(cfg, 1);
        assert!(matches!(
            s.mix(&not_square, 2.0 * cfg.omega0),
            Err(Error::NotSquare)
        ));
    }

    #[test]
    fn mix_zero_signal_stays_zero() {
        let cfg = small_cfg();
        let z = SampledSignal::zero(cfg);
        let sq = SampledSignal::square_wave(cfg, 1);
        let out = z.mix(&sq, 2.0 * cfg.omega0).unwrap();
        assert_eq!(out.max_magnitude(), 0.0);
    }

    #[test]
    fn mix_cosine_with_own_square_gives_half_dc() {
        // Independent oracle: DC of cos·sign(cos) on a fine midpoint grid.
        let fine = 1_000_000usize;
        let mut acc = 0.0f64;
        for i in 0..fine {
            let phase = 2.0 * PI * (i as f64 + 0.5) / fine as f64;
            let cv = phase.cos();
            acc += cv * if cv >= 0.0 { 1.0 } else { -1.0 };
        }
        let dc_oracle = acc / fine as f64;
        assert!((dc_oracle - 2.0 / PI).abs() < 1e-6);

        let cfg = cfg();
        let cos = SampledSignal::cosine(cfg, 1);
        let sq = SampledSignal::square_wave(cfg, 1);
        let mixed = cos.mix(&sq, 2.0 * cfg.omega0).unwrap();
        let dc = mixed.mean();
        assert!((dc.re - (PI / 4.0) * dc_oracle).abs() < 1e-6);
        assert!((dc.re - 0.5).abs() < 1e-6);
        assert!(dc.im.abs() < 1e-9);
    }

    #[test]
    fn mix_matches_ideal_single_qubit_projection() {
        // One-qubit coefficient extraction: mixer path vs ideal multiply path.
        let cfg = cfg();
        let a0 = c(0.8, -0.3);
        let a1 = c(-0.45, 0.6);
        let psi = SampledSignal::tone(cfg, 1)
            .scale(a0)
            .add(&SampledSignal::tone(cfg, -1).scale(a1))
            .unwrap();
        let conj_carrier = SampledSignal::tone(cfg, -1);
        let square_ref = conj_carrier
            .real_part()
            .comparator(DEFAULT_COMPARATOR_TOL)
            .unwrap()
            .add(
                &conj_carrier
                    .imag_part()
                    .comparator(DEFAULT_COMPARATOR_TOL)
                    .unwrap()
                    .scale(c(0.0, 1.0)),
            )
            .unwrap();
        let ideal = psi
            .multiply(&conj_carrier)
            .unwrap()
            .lowpass(cfg.omega0)
            .unwrap()
            .mean();
        let mixed = psi.mix(&square_ref, cfg.omega0).unwrap().mean();
        assert!((ideal - a0).norm() < 1e-12);
        assert!((mixed - ideal).norm() < 1e-6, "mixer dc {mixed} vs {ideal}");
    }

    #[test]
    fn mixer_projection_fidelity_two_qubits() {
        // Channel-filtered mixer projection tracks the ideal projection to
        // better than 1e-3 for arbitrary two-qubit lattice signals.
        let cfg = cfg();
        let coeffs = [c(0.9, -0.2), c(-0.6, 0.8), c(0.3, 0.95), c(-1.0, -0.4)];
        let mut psi = SampledSignal::zero(cfg);
        for (x, coeff) in coeffs.iter().enumerate() {
            let phi = basis_signal(BasisIndex::new(x, 2).unwrap(), &cfg).unwrap();
            psi = psi.add(&phi.scale(*coeff)).unwrap();
        }
        for (x, coeff) in coeffs.iter().enumerate() {
            let idx = BasisIndex::new(x, 2).unwrap();
            let f = idx.frequency_multiple();
            let conj = SampledSignal::tone(cfg, -f);
            let ideal = psi
                .multiply(&conj)
                .unwrap()
                .lowpass(cfg.omega0)
                .unwrap()
                .mean();
            let band = f.unsigned_abs() as f64 * cfg.omega0;
            let selected = psi.bandpass(band - 0.5 * cfg.omega0, band + 0.5 * cfg.omega0).unwrap();
            let square_ref = conj
                .real_part()
                .comparator(DEFAULT_COMPARATOR_TOL)
                .unwrap()
                .add(
                    &conj
                        .imag_part()
                        .comparator(DEFAULT_COMPARATOR_TOL)
                        .unwrap()
                        .scale(c(0.0, 1.0)),
                )
                .unwrap();
            let mixed = selected.mix(&square_ref, cfg.omega0).unwrap().mean();
            assert!((ideal - coeff).norm() < 1e-12);
            assert!(
                (mixed - ideal).norm() < 1e-3,
                "x={x}: mixer {mixed} vs ideal {ideal}"
            );
        }
    }

    #[test]
    fn csv_export_shape() {
        let cfg = SignalConfig::new(DEFAULT_OMEGA0, 8).unwrap();
        let s = SampledSignal::tone(cfg, 1);
        let mut out = Vec::new();
        s.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,re,im");
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[1].split(',').count(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn inner_product_linear_in_second_argument(
            ar in -1.0f64..1.0, ai in -1.0f64..1.0,
            br in -1.0f64..1.0, bi in -1.0f64..1.0,
        ) {
            let cfg = small_cfg();
            let phi = SampledSignal::tone(cfg, 1);
            let a = SampledSignal::tone(cfg, 1).scale(c(0.4, -0.1));
            let b = SampledSignal::tone(cfg, -3).scale(c(-0.2, 0.6));
            let alpha = c(ar, ai);
            let beta = c(br, bi);
            let combo = a.scale(alpha).add(&b.scale(beta)).unwrap();
            let lhs = phi.inner_product(&combo).unwrap();
            let rhs = alpha * phi.inner_product(&a).unwrap()
                + beta * phi.inner_product(&b).unwrap();
            let scale = lhs.norm().max(rhs.norm()).max(1e-12);
            prop_assert!((lhs - rhs).norm() / scale < 1e-12);
        }

        #[test]
        fn filters_idempotent_bit_identical(
            c1 in 1i64..8, keep in proptest::collection::vec(-8i64..8, 1..4)
        ) {
            let cfg = small_cfg();
            let mut s = SampledSignal::constant(cfg, c(0.1, 0.0));
            for (i, m) in keep.iter().enumerate() {
                s = s
                    .add(&SampledSignal::tone(cfg, *m).scale(c(0.3 + i as f64 * 0.1, -0.2)))
                    .unwrap();
            }
            let cutoff = c1 as f64 * cfg.omega0;
            let once = s.lowpass(cutoff).unwrap();
            let twice = once.lowpass(cutoff).unwrap();
            prop_assert_eq!(&once, &twice);

            let band_lo = 0.5 * cfg.omega0;
            let band_hi = (c1 as f64 + 0.5) * cfg.omega0;
            let bp_once = s.bandpass(band_lo, band_hi).unwrap();
            let bp_twice = bp_once.bandpass(band_lo, band_hi).unwrap();
            prop_assert_eq!(&bp_once, &bp_twice);
        }

        #[test]
        fn parseval_after_filtering(
            m1 in -6i64..6, m2 in -6i64..6, cut in 1i64..7,
        ) {
            let cfg = small_cfg();
            let s = SampledSignal::tone(cfg, m1).scale(c(0.7, 0.2))
                .add(&SampledSignal::tone(cfg, m2).scale(c(-0.3, 0.5))).unwrap();
            let filtered = s.lowpass(cut as f64 * cfg.omega0).unwrap();
            let power = filtered.inner_product(&filtered).unwrap().re;
            let k = filtered.len() as f64;
            let coeff_power: f64 = filtered
                .spectrum()
                .iter()
                .map(|v| (v / k).norm_sqr())
                .sum();
            let scale = power.abs().max(coeff_power.abs()).max(1e-12);
            prop_assert!((power - coeff_power).abs() / scale < 1e-9);
        }
    }
}
