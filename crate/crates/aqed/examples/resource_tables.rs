//! Hardware cost tables: floating-point operations and opamp counts per
//! gate operation for each encoding, the 8N opamp gap, and the
//! quantum-volume metric.

use aqed::resources::{
    flop_counts, opamp_counts, quantum_volume, stage_breakdown, EncodingKind,
};

fn main() {
    println!("floating-point operations per gate operation");
    println!("{:>2}  {:>22}  {:>8}  {:>8}", "n", "encoding", "mults", "adds");
    for n in 1..=6 {
        for kind in EncodingKind::ALL {
            let f = flop_counts(kind, n).unwrap();
            println!("{n:>2}  {:>22}  {:>8}  {:>8}", kind.id(), f.mults, f.adds);
        }
    }

    println!("\nopamps per gate operation");
    println!("{:>2}  {:>22}  {:>8}", "n", "encoding", "opamps");
    for n in 1..=6 {
        for kind in EncodingKind::ALL {
            println!(
                "{n:>2}  {:>22}  {:>8}",
                kind.id(),
                opamp_counts(kind, n).unwrap()
            );
        }
    }

    println!("\nfrequency-parallel − spatial opamp gap (always 8N):");
    for n in 1..=8 {
        let gap = opamp_counts(EncodingKind::FrequencyParallel, n).unwrap()
            - opamp_counts(EncodingKind::Spatial, n).unwrap();
        println!("  n={n}: {gap} = 8·{}", 1u64 << n);
    }

    println!("\nstage breakdown, frequency-parallel, n=2:");
    let report = stage_breakdown(EncodingKind::FrequencyParallel, 2).unwrap();
    for s in &report.stages {
        println!(
            "  {:<14} mults={:<4} adds={:<4} opamps={}",
            s.stage.id(),
            s.mults,
            s.adds,
            s.opamps
        );
    }
    println!(
        "  {:<14} mults={:<4} adds={:<4} opamps={}",
        "total", report.total_mults, report.total_adds, report.total_opamps
    );

    // With gates limited only by the qubit count, a six-qubit device
    // reaches the maximal volume 2^6.
    println!(
        "\nquantum volume at n=6, unbounded depth: {}",
        quantum_volume(6, |_| u64::MAX).unwrap()
    );
    println!(
        "quantum volume at n=6, depth capped at 3: {}",
        quantum_volume(6, |_| 3).unwrap()
    );
}
