//! Command-line front end: run circuits on any engine, compare engines,
//! emit resource tables, and export channel waveforms.
//!
//! Output is JSON on stdout (schema-versioned); diagnostics go to stderr.
//! Exit codes: 0 success, 1 engine/runtime failure, 2 flag errors.
//! `AQED_SAMPLES` overrides the samples-per-window of the signal grid.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::{run_circuit, run_circuit_traced, Circuit, Engine, ExecutionOutput, GroverSpec};
use crate::error::Error;
use crate::resources::{stage_breakdown, EncodingKind};
use crate::signal::{SignalConfig, DEFAULT_OMEGA0, DEFAULT_SAMPLES};
use crate::spatial::SpatialState;

/// Version tag carried by every JSON document this tool prints.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "aqed",
    version,
    about = "Signal-level quantum circuit emulator: spectral/spatial engines, reference oracle, and hardware cost tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a circuit on one engine and print amplitudes as JSON
    Run(RunArgs),
    /// Run a circuit on two engines and report the amplitude deviation
    Compare(CompareArgs),
    /// Emit per-stage multiplication/addition/opamp counts
    Resources(ResourcesArgs),
    /// Run a circuit on the spatial engine and export channel CSVs
    Waveform(WaveformArgs),
}

#[derive(Args)]
struct CircuitArgs {
    /// Circuit to run: `grover`, `qft`, or `file:<path>`
    #[arg(long)]
    circuit: String,
    /// Wire count for builder circuits
    #[arg(long)]
    qubits: Option<u32>,
    /// Searched basis index (grover only; default 0)
    #[arg(long)]
    target: Option<usize>,
    /// Amplification rounds (grover only; default round(π/4·√2^n))
    #[arg(long)]
    iterations: Option<u32>,
    /// Initial basis state index
    #[arg(long, default_value_t = 0)]
    input: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Spatial,
    Spectral,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Table,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    circuit: CircuitArgs,
    #[arg(long, value_enum)]
    engine: EngineArg,
    /// Use the comparator/square-wave multiplier (spectral engine only)
    #[arg(long)]
    mixer: bool,
    /// Also write the JSON result to this path
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record measured amplitudes after every gate
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    circuit: CircuitArgs,
    #[arg(long = "engine-a", value_enum)]
    engine_a: EngineArg,
    #[arg(long = "engine-b", value_enum)]
    engine_b: EngineArg,
    /// Use the square-wave multiplier on any spectral side
    #[arg(long)]
    mixer: bool,
}

#[derive(Args)]
struct ResourcesArgs {
    /// frequency-recursive, frequency-parallel, spatial, or all
    #[arg(long, default_value = "all")]
    encoding: String,
    /// Inclusive qubit range, e.g. 1..6 (a bare integer means N..N)
    #[arg(long)]
    qubits: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Args)]
struct WaveformArgs {
    #[command(flatten)]
    circuit: CircuitArgs,
    #[arg(long, value_enum)]
    engine: EngineArg,
    /// Directory receiving the channel CSV files
    #[arg(long)]
    out: PathBuf,
    /// Write one wide `channels.csv` instead of one file per channel
    #[arg(long)]
    wide: bool,
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Entry point used by the `aqed` binary. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Resources(args) => cmd_resources(args),
        Command::Waveform(args) => cmd_waveform(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Result document printed by `run`.
#[derive(Serialize)]
pub struct RunResult {
    pub schema: u32,
    pub engine: String,
    pub circuit: String,
    pub qubits: usize,
    pub input: usize,
    pub scale: f64,
    pub amplitudes_raw: Vec<[f64; 2]>,
    pub amplitudes: Vec<[f64; 2]>,
    pub probabilities: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Vec<[f64; 2]>>>,
    pub timing_ms: f64,
}

#[derive(Serialize)]
struct CompareResult {
    schema: u32,
    circuit: String,
    qubits: usize,
    input: usize,
    engine_a: String,
    engine_b: String,
    max_abs_deviation: f64,
    max_rel_deviation: f64,
    timing_ms: f64,
}

#[derive(Serialize)]
struct WaveformResult {
    schema: u32,
    engine: String,
    circuit: String,
    channels: usize,
    samples_per_channel: usize,
    directory: String,
    files: Vec<String>,
    timing_ms: f64,
}

fn signal_config() -> CliResult<SignalConfig> {
    let samples = match std::env::var("AQED_SAMPLES") {
        Err(_) => DEFAULT_SAMPLES,
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("AQED_SAMPLES must be a positive integer, got '{text}'")))?,
    };
    SignalConfig::new(DEFAULT_OMEGA0, samples)
        .map_err(|e| usage(format!("AQED_SAMPLES rejected: {e}")))
}

fn make_engine(arg: EngineArg, mixer: bool, config: SignalConfig) -> CliResult<Engine> {
    let engine = match arg {
        EngineArg::Spatial => Engine::spatial(),
        EngineArg::Spectral => {
            if mixer {
                Engine::spectral_mixer()
            } else {
                Engine::spectral()
            }
        }
        EngineArg::Oracle => Engine::oracle(),
    };
    if mixer && arg != EngineArg::Spectral {
        return Err(usage("--mixer requires a spectral engine"));
    }
    Ok(engine.with_config(config))
}

fn build_circuit(args: &CircuitArgs) -> CliResult<Circuit> {
    if let Some(path) = args.circuit.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(Error::from)?;
        let circuit = Circuit::from_json(&text)?;
        if let Some(q) = args.qubits {
            if q as usize != circuit.qubits {
                return Err(usage(format!(
                    "--qubits {q} does not match the {}-qubit circuit in {path}",
                    circuit.qubits
                )));
            }
        }
        return Ok(circuit);
    }
    let qubits = args
        .qubits
        .ok_or_else(|| usage("--qubits is required for builder circuits"))?;
    match args.circuit.as_str() {
        "grover" => {
            let target = args.target.unwrap_or(0);
            let iterations = args
                .iterations
                .unwrap_or_else(|| GroverSpec::default_iterations(qubits));
            let spec = GroverSpec::new(qubits, target, iterations)
                .map_err(|e| usage(e.to_string()))?;
            Ok(Circuit::grover(&spec))
        }
        "qft" => Circuit::qft(qubits as usize).map_err(|e| usage(e.to_string())),
        other => Err(usage(format!(
            "unknown circuit '{other}' (expected grover, qft, or file:<path>)"
        ))),
    }
}

fn initial_vector(circuit: &Circuit, input: usize) -> CliResult<Vec<Complex64>> {
    let dim = 1usize << circuit.qubits;
    if input >= dim {
        return Err(usage(format!(
            "--input {input} out of range for {} qubit(s)",
            circuit.qubits
        )));
    }
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[input] = Complex64::new(1.0, 0.0);
    Ok(v)
}

fn pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|a| [a.re, a.im]).collect()
}

fn assemble_run_result(
    circuit: &Circuit,
    input: usize,
    output: &ExecutionOutput,
    timing_ms: f64,
) -> RunResult {
    RunResult {
        schema: SCHEMA_VERSION,
        engine: output.engine_id.to_string(),
        circuit: circuit.label.clone(),
        qubits: circuit.qubits,
        input,
        scale: output.scale,
        amplitudes_raw: pairs(&output.raw),
        amplitudes: pairs(&output.normalized()),
        probabilities: output.probabilities(),
        trace: output
            .trace
            .as_ref()
            .map(|steps| steps.iter().map(|s| pairs(s)).collect()),
        timing_ms,
    }
}

fn cmd_run(args: RunArgs) -> CliResult<()> {
    let config = signal_config()?;
    let engine = make_engine(args.engine, args.mixer, config)?;
    let circuit = build_circuit(&args.circuit)?;
    let initial = initial_vector(&circuit, args.circuit.input)?;
    let started = Instant::now();
    let output = if args.trace {
        run_circuit_traced(&circuit, &initial, &engine)?
    } else {
        run_circuit(&circuit, &initial, &engine)?
    };
    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    let result = assemble_run_result(&circuit, args.circuit.input, &output, timing_ms);
    let text = serde_json::to_string_pretty(&result).map_err(Error::from)?;
    if let Some(path) = &args.out {
        std::fs::write(path, &text).map_err(Error::from)?;
    }
    println!("{text}");
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> CliResult<()> {
    if args.mixer && args.engine_a != EngineArg::Spectral && args.engine_b != EngineArg::Spectral {
        return Err(usage("--mixer requires a spectral engine on one side"));
    }
    let config = signal_config()?;
    let engine_a = make_engine(args.engine_a, args.mixer && args.engine_a == EngineArg::Spectral, config)?;
    let engine_b = make_engine(args.engine_b, args.mixer && args.engine_b == EngineArg::Spectral, config)?;
    let circuit = build_circuit(&args.circuit)?;
    let initial = initial_vector(&circuit, args.circuit.input)?;
    let started = Instant::now();
    let out_a = run_circuit(&circuit, &initial, &engine_a)?;
    let out_b = run_circuit(&circuit, &initial, &engine_b)?;
    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    let a = out_a.normalized();
    let b = out_b.normalized();
    let max_abs = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    let b_peak = b.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let result = CompareResult {
        schema: SCHEMA_VERSION,
        circuit: circuit.label.clone(),
        qubits: circuit.qubits,
        input: args.circuit.input,
        engine_a: out_a.engine_id.to_string(),
        engine_b: out_b.engine_id.to_string(),
        max_abs_deviation: max_abs,
        max_rel_deviation: if b_peak > 0.0 { max_abs / b_peak } else { max_abs },
        timing_ms,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&result).map_err(Error::from)?
    );
    Ok(())
}

fn parse_qubit_range(text: &str) -> CliResult<(u32, u32)> {
    let parse_end = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| usage(format!("invalid qubit range '{text}'")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse_end(a)?, parse_end(b)?),
        None => {
            let n = parse_end(text)?;
            (n, n)
        }
    };
    if lo < 1 || hi < lo {
        return Err(usage(format!(
            "qubit range '{text}' is empty or starts below 1"
        )));
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct ResourceRow {
    kind: &'static str,
    n: u32,
    stage: &'static str,
    mults: u64,
    adds: u64,
    opamps: u64,
}

#[derive(Serialize)]
struct ResourcesResult {
    schema: u32,
    rows: Vec<ResourceRow>,
}

fn cmd_resources(args: ResourcesArgs) -> CliResult<()> {
    let kinds: Vec<EncodingKind> = match args.encoding.as_str() {
        "all" => EncodingKind::ALL.to_vec(),
        other => vec![EncodingKind::parse(other).map_err(|e| usage(e.to_string()))?],
    };
    let (lo, hi) = parse_qubit_range(&args.qubits)?;
    let mut rows = Vec::new();
    for kind in &kinds {
        for n in lo..=hi {
            let report = stage_breakdown(*kind, n).map_err(|e| usage(e.to_string()))?;
            for stage in &report.stages {
                rows.push(ResourceRow {
                    kind: kind.id(),
                    n,
                    stage: stage.stage.id(),
                    mults: stage.mults,
                    adds: stage.adds,
                    opamps: stage.opamps,
                });
            }
            rows.push(ResourceRow {
                kind: kind.id(),
                n,
                stage: "total",
                mults: report.total_mults,
                adds: report.total_adds,
                opamps: report.total_opamps,
            });
        }
    }
    match args.format {
        FormatArg::Csv => {
            println!("kind,n,stage,mults,adds,opamps");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.kind, r.n, r.stage, r.mults, r.adds, r.opamps
                );
            }
        }
        FormatArg::Json => {
            let doc = ResourcesResult {
                schema: SCHEMA_VERSION,
                rows,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).map_err(Error::from)?
            );
        }
        FormatArg::Table => {
            println!(
                "{:<22} {:>2} {:<14} {:>12} {:>12} {:>8}",
                "kind", "n", "stage", "mults", "adds", "opamps"
            );
            for r in &rows {
                println!(
                    "{:<22} {:>2} {:<14} {:>12} {:>12} {:>8}",
                    r.kind, r.n, r.stage, r.mults, r.adds, r.opamps
                );
            }
        }
    }
    Ok(())
}

fn cmd_waveform(args: WaveformArgs) -> CliResult<()> {
    if args.engine != EngineArg::Spatial {
        return Err(usage("waveform export requires --engine spatial"));
    }
    let config = signal_config()?;
    let engine = make_engine(args.engine, false, config)?;
    let circuit = build_circuit(&args.circuit)?;
    let initial = initial_vector(&circuit, args.circuit.input)?;
    let started = Instant::now();
    let output = run_circuit(&circuit, &initial, &engine)?;
    // Channels carry the normalized amplitudes over the square carrier, so
    // the CSVs are directly comparable across circuits and engines.
    let state = SpatialState::with_square_carrier(output.normalized(), &config)?;
    std::fs::create_dir_all(&args.out).map_err(Error::from)?;
    let files: Vec<String> = if args.wide {
        let path = args.out.join("channels.csv");
        let file = std::fs::File::create(&path).map_err(Error::from)?;
        state.write_wide_csv(std::io::BufWriter::new(file))?;
        vec![path.file_name().unwrap().to_string_lossy().into_owned()]
    } else {
        state
            .write_channel_csvs(&args.out)?
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect()
    };
    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    let result = WaveformResult {
        schema: SCHEMA_VERSION,
        engine: output.engine_id.to_string(),
        circuit: circuit.label.clone(),
        channels: output.raw.len(),
        samples_per_channel: config.samples_per_window,
        directory: args.out.to_string_lossy().into_owned(),
        files,
        timing_ms,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&result).map_err(Error::from)?
    );
    Ok(())
}
