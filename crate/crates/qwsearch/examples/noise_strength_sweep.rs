//! Peak probability versus phase-noise strength.
//!
//! Scans the systematic and Gaussian phase models on the n=8 hypercube. Two
//! trends appear: the best strength is zero, and the contrast between the
//! marked vertex and the brightest unmarked vertex collapses as the noise
//! grows, which is what ultimately kills the search.
//!
//! Run with: cargo run --example noise_strength_sweep

use qwsearch::{run_sweep, Family, NoiseKind, SeriesSpec, SweepAxis, SweepPlan};

fn main() -> qwsearch::Result<()> {
    let grid: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    for kind in [NoiseKind::SystematicPhase, NoiseKind::GaussianPhase] {
        let plan = SweepPlan {
            figure: "strength-sweep".into(),
            family: Family::Hypercube,
            axis: SweepAxis::StrengthGrid(grid.clone()),
            series: vec![SeriesSpec {
                label: format!("n=8 {kind}"),
                kind,
                strength: 0.0,
                dim: 8,
            }],
            s_max: None,
            realizations: 50,
            seed: 42,
            marked: 0,
        };
        let table = run_sweep(&plan)?;
        let col = |name| table.column_index(name).unwrap();
        println!("{kind} phase on the marked coin:");
        println!("  {:>8} {:>10} {:>12} {:>10}", "strength", "p_marked", "p_unmarked", "contrast");
        for row in &table.rows {
            let g = row[col("strength")].as_f64().unwrap();
            let pm = row[col("max_p_marked")].as_f64().unwrap();
            let pu = row[col("max_p_unmarked")].as_f64().unwrap();
            println!("  {g:>8.1} {pm:>10.4} {pu:>12.4} {:>10.4}", pm - pu);
        }
        println!();
    }
    Ok(())
}
