//! Spatial encoding: 2^m parallel channels, each an amplitude-scaled copy
//! of one shared carrier.
//!
//! Gates act on the amplitude vector alone; the carrier never changes.
//! Qubit indices are MSB-first: qubit 0 owns the largest stride 2^{m−1}.
//! The reference path materializes the Kronecker-lifted matrix; the
//! performance path updates amplitudes in place with strided gathers.
//! Both must agree, and tests hold them to 1e−12.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gate::GateMatrix;
use crate::signal::{SampledSignal, SignalConfig};

/// An M = 2^m channel state over one shared carrier φ(t).
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialState {
    m: u32,
    amplitudes: Vec<Complex64>,
    carrier: SampledSignal,
}

impl SpatialState {
    pub fn new(amplitudes: Vec<Complex64>, carrier: SampledSignal) -> Result<Self> {
        let m = match amplitudes.len() {
            len if len >= 2 && len.is_power_of_two() => len.trailing_zeros(),
            len => {
                return Err(Error::DimensionMismatch(format!(
                    "channel count must be a power of two >= 2, got {len}"
                )))
            }
        };
        if carrier.max_magnitude() == 0.0 {
            return Err(Error::InvalidParameter("carrier must be nonzero".into()));
        }
        Ok(Self {
            m,
            amplitudes,
            carrier,
        })
    }

    /// State with the default ±1 square carrier at the config's fundamental.
    pub fn with_square_carrier(amplitudes: Vec<Complex64>, config: &SignalConfig) -> Result<Self> {
        Self::new(amplitudes, SampledSignal::square_wave(*config, 1))
    }

    /// Basis state e_x on m qubits over the default square carrier.
    pub fn basis(m: u32, x: usize, config: &SignalConfig) -> Result<Self> {
        if m == 0 || m >= usize::BITS {
            return Err(Error::IndexOutOfRange(format!("qubit count {m}")));
        }
        let dim = 1usize << m;
        if x >= dim {
            return Err(Error::IndexOutOfRange(format!(
                "basis index {x} for {m} qubit(s)"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[x] = Complex64::new(1.0, 0.0);
        Self::with_square_carrier(amplitudes, config)
    }

    pub fn qubits(&self) -> u32 {
        self.m
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn carrier(&self) -> &SampledSignal {
        &self.carrier
    }

    /// Channel y's signal, amplitudes[y]·φ(t), materialized on demand.
    pub fn channel(&self, y: usize) -> Result<SampledSignal> {
        let a = self
            .amplitudes
            .get(y)
            .ok_or_else(|| Error::IndexOutOfRange(format!("channel {y}")))?;
        Ok(self.carrier.scale(*a))
    }

    /// Gate application via the strided in-place update; the carrier is
    /// reused untouched.
    pub fn apply_gate(&self, u: &GateMatrix, targets: &[usize]) -> Result<Self> {
        let amplitudes = apply_strided(u, targets, self.m, &self.amplitudes)?;
        Ok(Self {
            m: self.m,
            amplitudes,
            carrier: self.carrier.clone(),
        })
    }

    /// Reference gate application through the materialized lifted matrix.
    pub fn apply_gate_dense(&self, u: &GateMatrix, targets: &[usize]) -> Result<Self> {
        let lifted = lift_gate(u, targets, self.m)?;
        let amplitudes = lifted.mul_vec(&self.amplitudes)?;
        Ok(Self {
            m: self.m,
            amplitudes,
            carrier: self.carrier.clone(),
        })
    }

    /// Splits the channel vector on one qubit's bit.
    pub fn decompose(&self, qubit: usize) -> Result<SpatialDecomposition> {
        if qubit as u32 >= self.m {
            return Err(Error::IndexOutOfRange(format!(
                "qubit {qubit} of {}",
                self.m
            )));
        }
        let pos = (self.m as usize) - 1 - qubit;
        let half_len = self.amplitudes.len() / 2;
        let mut halves = [
            vec![Complex64::new(0.0, 0.0); half_len],
            vec![Complex64::new(0.0, 0.0); half_len],
        ];
        for (y, a) in self.amplitudes.iter().enumerate() {
            let bit = (y >> pos) & 1;
            let rest = ((y >> (pos + 1)) << pos) | (y & ((1 << pos) - 1));
            halves[bit][rest] = *a;
        }
        Ok(SpatialDecomposition {
            qubit,
            pos,
            halves,
        })
    }

    /// Complex amplitude readout: carrier correlation per channel,
    /// ⟨φ|ψ_y⟩ / ⟨φ|φ⟩.
    pub fn measure(&self) -> Result<Vec<Complex64>> {
        let denom = self.carrier.inner_product(&self.carrier)?;
        if denom.norm() == 0.0 {
            return Err(Error::InvalidParameter("carrier must be nonzero".into()));
        }
        (0..self.amplitudes.len())
            .map(|y| {
                let ch = self.channel(y)?;
                Ok(self.carrier.inner_product(&ch)? / denom)
            })
            .collect()
    }

    /// Magnitude-only diagnostic: |amplitude| times the carrier's
    /// real-part swing (max − min). Loses phase by construction.
    pub fn peak_to_peak(&self) -> Vec<f64> {
        let swing = {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for s in self.carrier.samples() {
                lo = lo.min(s.re);
                hi = hi.max(s.re);
            }
            hi - lo
        };
        self.amplitudes.iter().map(|a| a.norm() * swing).collect()
    }

    /// One `channel_XY.csv` per channel (header `t,re,im`) in `dir`.
    pub fn write_channel_csvs(&self, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for y in 0..self.amplitudes.len() {
            let path = dir.join(format!("channel_{y:02}.csv"));
            let file = std::fs::File::create(&path)?;
            self.channel(y)?.write_csv(std::io::BufWriter::new(file))?;
            written.push(path);
        }
        Ok(written)
    }

    /// Wide CSV: `t,ch0_re,ch0_im,...` with one row per sample.
    pub fn write_wide_csv<W: Write>(&self, mut w: W) -> Result<()> {
        write!(w, "t")?;
        for y in 0..self.amplitudes.len() {
            write!(w, ",ch{y}_re,ch{y}_im")?;
        }
        writeln!(w)?;
        let cfg = self.carrier.config();
        for (k, s) in self.carrier.samples().iter().enumerate() {
            write!(w, "{}", cfg.sample_time(k))?;
            for a in &self.amplitudes {
                let v = a * s;
                write!(w, ",{},{}", v.re, v.im)?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// The two sub-vectors of an amplitude vector split on one qubit's bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialDecomposition {
    qubit: usize,
    pos: usize,
    halves: [Vec<Complex64>; 2],
}

impl SpatialDecomposition {
    pub fn qubit(&self) -> usize {
        self.qubit
    }

    pub fn halves(&self) -> (&[Complex64], &[Complex64]) {
        (&self.halves[0], &self.halves[1])
    }

    /// Reassembles the full amplitude vector.
    pub fn recombine(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.halves[0].len() * 2];
        for (bit, half) in self.halves.iter().enumerate() {
            for (rest, a) in half.iter().enumerate() {
                let low = rest & ((1 << self.pos) - 1);
                let high = rest >> self.pos;
                let y = (high << (self.pos + 1)) | (bit << self.pos) | low;
                out[y] = *a;
            }
        }
        out
    }

    /// Applies a single-qubit gate through the decomposition:
    /// half0' = U00·half0 + U01·half1, half1' = U10·half0 + U11·half1.
    pub fn apply_gate(&self, u: &GateMatrix) -> Result<Self> {
        if u.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "decomposition gate must be 2×2, got {}×{}",
                u.dim(),
                u.dim()
            )));
        }
        let mut halves = self.halves.clone();
        for rest in 0..self.halves[0].len() {
            let h0 = self.halves[0][rest];
            let h1 = self.halves[1][rest];
            halves[0][rest] = u.at(0, 0) * h0 + u.at(0, 1) * h1;
            halves[1][rest] = u.at(1, 0) * h0 + u.at(1, 1) * h1;
        }
        Ok(Self {
            qubit: self.qubit,
            pos: self.pos,
            halves,
        })
    }
}

/// Kronecker-lifts a k-qubit gate to the full 2^m space, identity on
/// non-targets. `targets[0]` is the gate's most significant slot; qubit 0
/// has stride 2^{m−1}.
pub fn lift_gate(u: &GateMatrix, targets: &[usize], m: u32) -> Result<GateMatrix> {
    let positions = target_positions(u, targets, m)?;
    let k = targets.len();
    let dim = 1usize << m;
    let target_mask: usize = positions.iter().map(|p| 1usize << p).sum();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for row in 0..dim {
        let mut u_row = 0usize;
        for (j, pos) in positions.iter().enumerate() {
            u_row |= ((row >> pos) & 1) << (k - 1 - j);
        }
        let rest = row & !target_mask;
        for u_col in 0..(1usize << k) {
            let mut col = rest;
            for (j, pos) in positions.iter().enumerate() {
                if (u_col >> (k - 1 - j)) & 1 == 1 {
                    col |= 1 << pos;
                }
            }
            entries[row * dim + col] = u.at(u_row, u_col);
        }
    }
    Ok(GateMatrix::new(dim, entries)?.with_scale(u.scale()))
}

/// Strided gate application without materializing the lifted matrix.
pub fn apply_strided(
    u: &GateMatrix,
    targets: &[usize],
    m: u32,
    amplitudes: &[Complex64],
) -> Result<Vec<Complex64>> {
    let positions = target_positions(u, targets, m)?;
    let dim = 1usize << m;
    if amplitudes.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "expected {dim} amplitudes, got {}",
            amplitudes.len()
        )));
    }
    let k = targets.len();
    let block = 1usize << k;
    let target_mask: usize = positions.iter().map(|p| 1usize << p).sum();
    // Offsets of each gate-local index inside the full vector.
    let offsets: Vec<usize> = (0..block)
        .map(|t| {
            let mut off = 0usize;
            for (j, pos) in positions.iter().enumerate() {
                if (t >> (k - 1 - j)) & 1 == 1 {
                    off |= 1 << pos;
                }
            }
            off
        })
        .collect();
    let mut out = amplitudes.to_vec();
    let mut gathered = vec![Complex64::new(0.0, 0.0); block];
    for base in 0..dim {
        if base & target_mask != 0 {
            continue;
        }
        for (t, g) in gathered.iter_mut().enumerate() {
            *g = amplitudes[base | offsets[t]];
        }
        for r in 0..block {
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, g) in gathered.iter().enumerate() {
                acc += u.at(r, t) * g;
            }
            out[base | offsets[r]] = acc;
        }
    }
    Ok(out)
}

fn target_positions(u: &GateMatrix, targets: &[usize], m: u32) -> Result<Vec<usize>> {
    if m == 0 || m >= usize::BITS {
        return Err(Error::IndexOutOfRange(format!("qubit count {m}")));
    }
    if u.dim() != 1usize << targets.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}×{} gate cannot target {} qubit(s)",
            u.dim(),
            u.dim(),
            targets.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &t in targets {
        if t as u32 >= m {
            return Err(Error::IndexOutOfRange(format!("target {t} of {m}")));
        }
        if !seen.insert(t) {
            return Err(Error::InvalidParameter(format!("duplicate target {t}")));
        }
    }
    Ok(targets.iter().map(|&t| (m as usize) - 1 - t).collect())
}
