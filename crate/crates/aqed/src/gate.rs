//! Dense gate matrices: Kronecker constructions, controlled-Z recursion,
//! rotations, and the qubit-reversal permutation.
//!
//! Gates may be deliberately unnormalized (the ±1 Hadamard); such matrices
//! carry a `scale` marker holding the factor that restores unitarity, and
//! engines account for it globally instead of scaling signals.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Square complex matrix of power-of-two dimension, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GateMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    /// `Some(s)` when `s·M` is the unitary this gate stands for.
    scale: Option<f64>,
}

impl GateMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch(format!(
                "gate dimension must be a power of two, got {dim}"
            )));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {dim}×{dim} gate, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self {
            dim,
            entries,
            scale: None,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self {
            dim,
            entries,
            scale: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Normalization factor for scaled (non-unitary) gates, if any.
    pub fn scale(&self) -> Option<f64> {
        self.scale
    }

    pub fn with_scale(mut self, scale: Option<f64>) -> Self {
        self.scale = scale;
        self
    }

    /// The unitary this gate stands for: entries times the scale marker.
    pub fn normalized(&self) -> Self {
        match self.scale {
            None => self.clone(),
            Some(s) => Self {
                dim: self.dim,
                entries: self.entries.iter().map(|e| e * s).collect(),
                scale: None,
            },
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.at(r1, c1);
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        let r = r1 * other.dim + r2;
                        let c = c1 * other.dim + c2;
                        entries[r * dim + c] = a * other.at(r2, c2);
                    }
                }
            }
        }
        let scale = match (self.scale, other.scale) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a * b),
        };
        Self {
            dim,
            entries,
            scale,
        }
    }

    /// Matrix sum; only defined for unscaled operands.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}×{} and {}×{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        if self.scale.is_some() || other.scale.is_some() {
            return Err(Error::InvalidParameter(
                "cannot add scaled gate matrices".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
            scale: None,
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.at(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * other.at(k, c);
                }
            }
        }
        let scale = match (self.scale, other.scale) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a * b),
        };
        Ok(Self {
            dim: d,
            entries,
            scale,
        })
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for c in 0..d {
                entries[c * d + r] = self.at(r, c).conj();
            }
        }
        Self {
            dim: d,
            entries,
            scale: self.scale,
        }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix dim {} vs vector length {}",
                self.dim,
                v.len()
            )));
        }
        Ok((0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| self.at(r, c) * v[c])
                    .sum::<Complex64>()
            })
            .collect())
    }

    /// Max-norm deviation of (scale-corrected) G†G from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let g = self.normalized();
        let gtg = g.adjoint().matmul(&g).expect("same dim");
        let mut worst = 0.0f64;
        for r in 0..g.dim {
            for c in 0..g.dim {
                let want = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((gtg.at(r, c) - Complex64::new(want, 0.0)).norm());
            }
        }
        worst
    }
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// diag(1, 0): the |0⟩⟨0| slot selector.
pub fn projector_zero() -> GateMatrix {
    GateMatrix::new(2, vec![real(1.0), real(0.0), real(0.0), real(0.0)]).unwrap()
}

/// diag(0, 1): the |1⟩⟨1| slot selector.
pub fn projector_one() -> GateMatrix {
    GateMatrix::new(2, vec![real(0.0), real(0.0), real(0.0), real(1.0)]).unwrap()
}

/// k-fold Hadamard. Unnormalized form has ±1 entries and carries the
/// 2^{−k/2} scale marker; normalized form is unitary outright.
pub fn hadamard_n(k: u32, normalized: bool) -> Result<GateMatrix> {
    if k < 1 {
        return Err(Error::InvalidParameter("hadamard_n needs k >= 1".into()));
    }
    let h1 = GateMatrix::new(2, vec![real(1.0), real(1.0), real(1.0), real(-1.0)])?;
    let mut g = h1.clone();
    for _ in 1..k {
        g = g.kron(&h1);
    }
    let factor = 2f64.powf(-(k as f64) / 2.0);
    if normalized {
        let entries = g.entries.iter().map(|e| e * factor).collect();
        GateMatrix::new(g.dim, entries)
    } else {
        Ok(g.with_scale(Some(factor)))
    }
}

/// k-fold X: the anti-diagonal permutation that reverses amplitude order.
pub fn x_n(k: u32) -> Result<GateMatrix> {
    if k < 1 {
        return Err(Error::InvalidParameter("x_n needs k >= 1".into()));
    }
    let dim = 1usize << k;
    let mut entries = vec![real(0.0); dim * dim];
    for r in 0..dim {
        entries[r * dim + (dim - 1 - r)] = real(1.0);
    }
    GateMatrix::new(dim, entries)
}

/// Z with `controls` control qubits, built by the recursion
/// C^c-Z = I1 ⊗ I^{⊗c} + I2 ⊗ C^{c−1}-Z, bottoming out at plain Z.
pub fn multi_controlled_z(controls: u32) -> GateMatrix {
    if controls == 0 {
        return GateMatrix::new(2, vec![real(1.0), real(0.0), real(0.0), real(-1.0)]).unwrap();
    }
    let inner = multi_controlled_z(controls - 1);
    let pass = projector_zero().kron(&GateMatrix::identity(inner.dim()));
    let act = projector_one().kron(&inner);
    pass.add(&act).expect("same dim")
}

/// Phase rotation diag(1, e^{j2π/2^k}).
pub fn rotation_gate(k: u32) -> Result<GateMatrix> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "rotation_gate needs k >= 1".into(),
        ));
    }
    let phase = Complex64::from_polar(1.0, 2.0 * PI / 2f64.powi(k as i32));
    GateMatrix::new(2, vec![real(1.0), real(0.0), real(0.0), phase])
}

/// Controlled rotation on the full m-qubit space: the identity term places
/// I1 at the control slot, the rotation term places I2 at the control slot
/// and R_k at the target slot.
pub fn controlled_rotation(k: u32, control: usize, target: usize, m: usize) -> Result<GateMatrix> {
    if control == target {
        return Err(Error::InvalidParameter(
            "control and target must differ".into(),
        ));
    }
    if control >= m || target >= m {
        return Err(Error::IndexOutOfRange(format!(
            "control {control} / target {target} for {m} qubit(s)"
        )));
    }
    let identity = GateMatrix::identity(2);
    let r = rotation_gate(k)?;
    let kron_slots = |slot_for: &dyn Fn(usize) -> GateMatrix| -> GateMatrix {
        let mut g = slot_for(0);
        for q in 1..m {
            g = g.kron(&slot_for(q));
        }
        g
    };
    let pass = kron_slots(&|q| {
        if q == control {
            projector_zero()
        } else {
            identity.clone()
        }
    });
    let act = kron_slots(&|q| {
        if q == control {
            projector_one()
        } else if q == target {
            r.clone()
        } else {
            identity.clone()
        }
    });
    pass.add(&act)
}

/// Permutation sending each basis index to its m-bit reversal
/// (|abc…⟩ → |…cba⟩).
pub fn reversal_permutation(m: u32) -> Result<GateMatrix> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "reversal_permutation needs m >= 1".into(),
        ));
    }
    let dim = 1usize << m;
    let mut entries = vec![real(0.0); dim * dim];
    for col in 0..dim {
        let mut rev = 0usize;
        for b in 0..m {
            if (col >> b) & 1 == 1 {
                rev |= 1 << (m - 1 - b);
            }
        }
        entries[rev * dim + col] = real(1.0);
    }
    GateMatrix::new(dim, entries)
}
