//! Run Grover search on the spatial engine and export the final state's
//! channel waveforms as plot-ready CSV files.

use aqed::circuit::{run_circuit, Circuit, Engine, GroverSpec};
use aqed::signal::{SignalConfig, DEFAULT_OMEGA0};
use aqed::spatial::SpatialState;
use aqed::Complex64;

fn main() {
    // A short window keeps the CSVs small; the amplitudes are scale-free.
    let config = SignalConfig::new(DEFAULT_OMEGA0, 256).unwrap();
    let spec = GroverSpec::new(6, 0, 6).unwrap();
    let circuit = Circuit::grover(&spec);
    let mut input = vec![Complex64::new(0.0, 0.0); 64];
    input[0] = Complex64::new(1.0, 0.0);

    let out = run_circuit(&circuit, &input, &Engine::spatial().with_config(config)).unwrap();
    let state = SpatialState::with_square_carrier(out.normalized(), &config).unwrap();

    let dir = std::env::temp_dir().join("aqed_waveforms");
    let files = state.write_channel_csvs(&dir).unwrap();
    println!("wrote {} channel CSVs to {}", files.len(), dir.display());

    let wide = dir.join("channels.csv");
    let file = std::fs::File::create(&wide).unwrap();
    state.write_wide_csv(std::io::BufWriter::new(file)).unwrap();
    println!("wrote wide CSV to {}", wide.display());

    // The searched channel towers over the other 63.
    let ptp = state.peak_to_peak();
    println!("\nchannel peak-to-peak amplitudes (normalized scale):");
    println!("  channel 0 (searched): {:.4}", ptp[0]);
    let rest: Vec<f64> = ptp[1..].to_vec();
    let hi = rest.iter().cloned().fold(0.0f64, f64::max);
    let lo = rest.iter().cloned().fold(f64::INFINITY, f64::min);
    println!("  channels 1..63 span [{lo:.4}, {hi:.4}]");
}
