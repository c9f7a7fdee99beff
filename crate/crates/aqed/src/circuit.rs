//! Circuit programs: an ordered gate list with a JSON file format, builders
//! for Grover search and the quantum Fourier transform, and a runner that
//! executes circuits on the spatial engine, the spectral engine, or the
//! dense reference oracle.
//!
//! Circuit qubit 0 is the top wire and the most significant bit of an
//! amplitude index. Hadamards run unnormalized (±1 entries); the runner
//! accumulates the 2^{−1/2}-per-application factor so outputs can be
//! reported on the normalized scale.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gate::{
    hadamard_n, multi_controlled_z, projector_one, projector_zero, reversal_permutation,
    rotation_gate, x_n, GateMatrix,
};
use crate::oracle::StateVector;
use crate::signal::{BasisIndex, SignalConfig};
use crate::spatial::{lift_gate, SpatialState};
use crate::spectral::{Multiplier, SpectralState};

/// Gate vocabulary of the circuit file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    /// Hadamard on each target (unnormalized ±1 form).
    H,
    /// X on each target.
    X,
    /// Z on the target, controlled by every listed control.
    CZ,
    /// Phase rotation diag(1, e^{j2π/2^k}); optionally one control.
    R,
    /// Full-width qubit reversal |abc…⟩ → |…cba⟩.
    SWAPREV,
}

/// One program step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitOp {
    pub name: GateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default)]
    pub controls: Vec<usize>,
    pub targets: Vec<usize>,
}

impl CircuitOp {
    fn gate(name: GateKind, targets: Vec<usize>) -> Self {
        Self {
            name,
            k: None,
            controls: Vec::new(),
            targets,
        }
    }
}

/// An ordered gate program on `qubits` wires.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub qubits: usize,
    pub gates: Vec<CircuitOp>,
    #[serde(skip)]
    pub label: String,
}

impl Circuit {
    pub fn new(qubits: usize, label: impl Into<String>) -> Self {
        Self {
            qubits,
            gates: Vec::new(),
            label: label.into(),
        }
    }

    pub fn push(&mut self, op: CircuitOp) {
        self.gates.push(op);
    }

    /// Structural checks: indices in range, controls and targets disjoint,
    /// per-gate arity rules.
    pub fn validate(&self) -> Result<()> {
        if self.qubits == 0 || self.qubits >= usize::BITS as usize {
            return Err(Error::InvalidCircuit(format!(
                "qubit count {} out of range",
                self.qubits
            )));
        }
        for (i, op) in self.gates.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for &q in op.controls.iter().chain(&op.targets) {
                if q >= self.qubits {
                    return Err(Error::InvalidCircuit(format!(
                        "op {i}: qubit {q} out of range for {} wire(s)",
                        self.qubits
                    )));
                }
                if !seen.insert(q) {
                    return Err(Error::InvalidCircuit(format!(
                        "op {i}: qubit {q} appears twice"
                    )));
                }
            }
            if op.targets.is_empty() {
                return Err(Error::InvalidCircuit(format!("op {i}: no targets")));
            }
            match op.name {
                GateKind::H | GateKind::X => {
                    if !op.controls.is_empty() {
                        return Err(Error::InvalidCircuit(format!(
                            "op {i}: {:?} does not take controls",
                            op.name
                        )));
                    }
                }
                GateKind::CZ => {
                    if op.targets.len() != 1 {
                        return Err(Error::InvalidCircuit(format!(
                            "op {i}: CZ takes exactly one target"
                        )));
                    }
                }
                GateKind::R => {
                    if op.targets.len() != 1 || op.controls.len() > 1 {
                        return Err(Error::InvalidCircuit(format!(
                            "op {i}: R takes one target and at most one control"
                        )));
                    }
                    match op.k {
                        Some(k) if k >= 1 => {}
                        _ => {
                            return Err(Error::InvalidCircuit(format!(
                                "op {i}: R needs a rotation order k >= 1"
                            )))
                        }
                    }
                }
                GateKind::SWAPREV => {
                    let want: Vec<usize> = (0..self.qubits).collect();
                    if op.targets != want || !op.controls.is_empty() {
                        return Err(Error::InvalidCircuit(format!(
                            "op {i}: SWAPREV must target every qubit in order"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let circuit: Circuit = serde_json::from_str(text)?;
        circuit.validate()?;
        Ok(circuit)
    }

    /// Grover search: H layer, then per iteration the oracle for the
    /// searched index followed by the diffusion block.
    pub fn grover(spec: &GroverSpec) -> Self {
        let n = spec.qubits() as usize;
        let all: Vec<usize> = (0..n).collect();
        let mut circuit = Circuit::new(
            n,
            format!(
                "grover-n{}-t{}-k{}",
                n,
                spec.target().index(),
                spec.iterations()
            ),
        );
        circuit.push(CircuitOp::gate(GateKind::H, all.clone()));
        for _ in 0..spec.iterations() {
            circuit.extend_with_oracle(spec.target());
            // Diffusion: H, X, C^{n−1}-Z, X, H.
            circuit.push(CircuitOp::gate(GateKind::H, all.clone()));
            circuit.push(CircuitOp::gate(GateKind::X, all.clone()));
            circuit.push(phase_flip_all_ones(n));
            circuit.push(CircuitOp::gate(GateKind::X, all.clone()));
            circuit.push(CircuitOp::gate(GateKind::H, all.clone()));
        }
        circuit
    }

    /// Just the oracle block for one searched index: X on every qubit whose
    /// target bit is 0, a (n−1)-controlled Z, and the X layer again.
    pub fn grover_oracle(target: BasisIndex) -> Self {
        let n = target.qubits() as usize;
        let mut circuit = Circuit::new(n, format!("grover-oracle-t{}", target.index()));
        circuit.extend_with_oracle(target);
        circuit
    }

    fn extend_with_oracle(&mut self, target: BasisIndex) {
        let n = target.qubits() as usize;
        // Circuit qubit q reads the target's bit of weight 2^{n−1−q}.
        let zeros: Vec<usize> = (0..n)
            .filter(|q| (target.index() >> (n - 1 - q)) & 1 == 0)
            .collect();
        if !zeros.is_empty() {
            self.push(CircuitOp::gate(GateKind::X, zeros.clone()));
        }
        self.push(phase_flip_all_ones(n));
        if !zeros.is_empty() {
            self.push(CircuitOp::gate(GateKind::X, zeros));
        }
    }

    /// Quantum Fourier transform: per qubit a Hadamard then controlled
    /// rotations from every lower wire, and a final qubit reversal.
    pub fn qft(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidCircuit("qft needs at least one qubit".into()));
        }
        let mut circuit = Circuit::new(m, format!("qft-m{m}"));
        for i in 0..m {
            circuit.push(CircuitOp::gate(GateKind::H, vec![i]));
            for j in (i + 1)..m {
                circuit.push(CircuitOp {
                    name: GateKind::R,
                    k: Some((j - i + 1) as u32),
                    controls: vec![j],
                    targets: vec![i],
                });
            }
        }
        circuit.push(CircuitOp::gate(GateKind::SWAPREV, (0..m).collect()));
        Ok(circuit)
    }
}

fn phase_flip_all_ones(n: usize) -> CircuitOp {
    CircuitOp {
        name: GateKind::CZ,
        k: None,
        controls: (0..n.saturating_sub(1)).collect(),
        targets: vec![n - 1],
    }
}

/// Parameters of a Grover run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroverSpec {
    target: BasisIndex,
    iterations: u32,
}

impl GroverSpec {
    pub fn new(qubits: u32, target: usize, iterations: u32) -> Result<Self> {
        if iterations == 0 {
            return Err(Error::InvalidParameter(
                "grover needs at least one iteration".into(),
            ));
        }
        Ok(Self {
            target: BasisIndex::new(target, qubits)?,
            iterations,
        })
    }

    /// round(π/4·√2^n), never below one iteration.
    pub fn default_iterations(qubits: u32) -> u32 {
        let k = (std::f64::consts::FRAC_PI_4 * 2f64.powf(qubits as f64 / 2.0)).round() as u32;
        k.max(1)
    }

    pub fn qubits(&self) -> u32 {
        self.target.qubits()
    }

    pub fn target(&self) -> BasisIndex {
        self.target
    }

    pub fn iterations(&self) -> u32 {
        self.iterations
    }
}

/// Which machinery runs the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Spatial,
    Spectral,
    Oracle,
}

/// Execution backend: engine choice plus the signal grid it runs on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Engine {
    pub kind: EngineKind,
    pub multiplier: Multiplier,
    pub config: SignalConfig,
}

impl Engine {
    pub fn spatial() -> Self {
        Self {
            kind: EngineKind::Spatial,
            multiplier: Multiplier::Ideal,
            config: SignalConfig::default_1khz(),
        }
    }

    pub fn spectral() -> Self {
        Self {
            kind: EngineKind::Spectral,
            multiplier: Multiplier::Ideal,
            config: SignalConfig::default_1khz(),
        }
    }

    pub fn spectral_mixer() -> Self {
        Self {
            multiplier: Multiplier::Mixer,
            ..Self::spectral()
        }
    }

    pub fn oracle() -> Self {
        Self {
            kind: EngineKind::Oracle,
            multiplier: Multiplier::Ideal,
            config: SignalConfig::default_1khz(),
        }
    }

    pub fn with_config(mut self, config: SignalConfig) -> Self {
        self.config = config;
        self
    }

    pub fn id(&self) -> &'static str {
        match (self.kind, self.multiplier) {
            (EngineKind::Spatial, _) => "spatial",
            (EngineKind::Spectral, Multiplier::Ideal) => "spectral",
            (EngineKind::Spectral, Multiplier::Mixer) => "spectral-mixer",
            (EngineKind::Oracle, _) => "oracle",
        }
    }
}

/// Result of a circuit run: raw measured amplitudes plus the accumulated
/// normalization factor of scaled gates.
#[derive(Debug, Clone, PartialEq)]
pub struct ExecutionOutput {
    pub engine_id: &'static str,
    pub raw: Vec<Complex64>,
    pub scale: f64,
    pub trace: Option<Vec<Vec<Complex64>>>,
}

impl ExecutionOutput {
    /// Amplitudes on the unitary scale: raw × accumulated factor.
    pub fn normalized(&self) -> Vec<Complex64> {
        self.raw.iter().map(|a| a * self.scale).collect()
    }

    /// |normalized|², renormalized to sum to one.
    pub fn probabilities(&self) -> Vec<f64> {
        let normed = self.normalized();
        let total: f64 = normed.iter().map(|a| a.norm_sqr()).sum();
        if total == 0.0 {
            return vec![0.0; normed.len()];
        }
        normed.iter().map(|a| a.norm_sqr() / total).collect()
    }
}

enum EngineState {
    Spatial(SpatialState),
    Spectral(SpectralState),
    Oracle(StateVector),
}

impl EngineState {
    fn init(engine: &Engine, qubits: usize, initial: &[Complex64]) -> Result<Self> {
        if initial.len() != 1usize << qubits {
            return Err(Error::DimensionMismatch(format!(
                "initial vector length {} does not match {qubits} qubit(s)",
                initial.len()
            )));
        }
        match engine.kind {
            EngineKind::Spatial => Ok(Self::Spatial(SpatialState::with_square_carrier(
                initial.to_vec(),
                &engine.config,
            )?)),
            EngineKind::Spectral => Ok(Self::Spectral(
                SpectralState::encode(initial, &engine.config)?
                    .with_multiplier(engine.multiplier),
            )),
            EngineKind::Oracle => Ok(Self::Oracle(StateVector::from_amplitudes(
                initial.to_vec(),
            )?)),
        }
    }

    fn step(&mut self, matrix: &GateMatrix, support: &[usize], qubits: usize) -> Result<()> {
        match self {
            Self::Spatial(state) => {
                *state = state.apply_gate(matrix, support)?;
            }
            Self::Oracle(state) => {
                *state = state.apply(matrix, support)?;
            }
            Self::Spectral(state) => {
                let n = qubits as u32;
                if support.len() == 1 {
                    // Circuit wire q is lattice bit n−1−q.
                    let lattice_bit = n - 1 - support[0] as u32;
                    *state = state.apply_gate(matrix, lattice_bit)?;
                } else {
                    // Wider gates run on measured coefficients through the
                    // lifted matrix, then re-encode.
                    let coeffs = state.measure()?;
                    let lifted = lift_gate(matrix, support, n)?;
                    let mapped = lifted.mul_vec(&coeffs)?;
                    *state = SpectralState::encode(&mapped, state.config())?
                        .with_multiplier(state.multiplier());
                }
            }
        }
        Ok(())
    }

    fn snapshot(&self) -> Result<Vec<Complex64>> {
        match self {
            Self::Spatial(state) => state.measure(),
            Self::Spectral(state) => state.measure(),
            Self::Oracle(state) => Ok(state.amplitudes().to_vec()),
        }
    }
}

/// Expands one program step into primitive (matrix, support) applications.
/// Multi-target H/X layers become per-qubit gates so every engine sees the
/// same primitive sequence.
fn realize_op(op: &CircuitOp, qubits: usize) -> Result<Vec<(GateMatrix, Vec<usize>)>> {
    match op.name {
        GateKind::H => {
            let h = hadamard_n(1, false)?;
            Ok(op.targets.iter().map(|&q| (h.clone(), vec![q])).collect())
        }
        GateKind::X => {
            let x = x_n(1)?;
            Ok(op.targets.iter().map(|&q| (x.clone(), vec![q])).collect())
        }
        GateKind::CZ => {
            let gate = multi_controlled_z(op.controls.len() as u32);
            let mut support = op.controls.clone();
            support.push(op.targets[0]);
            Ok(vec![(gate, support)])
        }
        GateKind::R => {
            let k = op
                .k
                .ok_or_else(|| Error::InvalidCircuit("R without rotation order".into()))?;
            let r = rotation_gate(k)?;
            match op.controls.as_slice() {
                [] => Ok(vec![(r, vec![op.targets[0]])]),
                [control] => {
                    let gate = projector_zero()
                        .kron(&GateMatrix::identity(2))
                        .add(&projector_one().kron(&r))?;
                    Ok(vec![(gate, vec![*control, op.targets[0]])])
                }
                _ => Err(Error::Unsupported(
                    "R supports at most one control".into(),
                )),
            }
        }
        GateKind::SWAPREV => {
            let gate = reversal_permutation(qubits as u32)?;
            Ok(vec![(gate, (0..qubits).collect())])
        }
    }
}

/// Runs a circuit from an explicit initial amplitude vector.
pub fn run_circuit(
    circuit: &Circuit,
    initial: &[Complex64],
    engine: &Engine,
) -> Result<ExecutionOutput> {
    run_circuit_inner(circuit, initial, engine, false)
}

/// As `run_circuit`, also recording the measured amplitudes after each op.
pub fn run_circuit_traced(
    circuit: &Circuit,
    initial: &[Complex64],
    engine: &Engine,
) -> Result<ExecutionOutput> {
    run_circuit_inner(circuit, initial, engine, true)
}

fn run_circuit_inner(
    circuit: &Circuit,
    initial: &[Complex64],
    engine: &Engine,
    trace: bool,
) -> Result<ExecutionOutput> {
    circuit.validate()?;
    let mut state = EngineState::init(engine, circuit.qubits, initial)?;
    let mut scale = 1.0f64;
    let mut steps: Vec<Vec<Complex64>> = Vec::new();
    for op in &circuit.gates {
        for (matrix, support) in realize_op(op, circuit.qubits)? {
            // The oracle engine normalizes internally, so the factor only
            // accumulates for the signal engines.
            if !matches!(state, EngineState::Oracle(_)) {
                if let Some(s) = matrix.scale() {
                    scale *= s;
                }
            }
            state.step(&matrix, &support, circuit.qubits)?;
        }
        if trace {
            steps.push(state.snapshot()?);
        }
    }
    Ok(ExecutionOutput {
        engine_id: engine.id(),
        raw: state.snapshot()?,
        scale,
        trace: if trace { Some(steps) } else { None },
    })
}
