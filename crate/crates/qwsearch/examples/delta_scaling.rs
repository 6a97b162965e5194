//! Scaled cost under size-coupled noise, sigma = N^(-delta).
//!
//! When the Gaussian phase width shrinks fast enough with the search space
//! (delta >= 1), the walk keeps its quadratic-speedup cost exponent near
//! 0.6 at these sizes. As delta drops toward zero the exponent climbs
//! toward 1, the cost of classically checking every vertex.
//!
//! Run with: cargo run --example delta_scaling

use qwsearch::{run_sweep, Family, NoiseKind, SeriesSpec, SweepAxis, SweepPlan};

fn main() -> qwsearch::Result<()> {
    let deltas: Vec<f64> = (-2..=12).step_by(2).map(|k| k as f64 / 10.0).collect();
    let plan = SweepPlan {
        figure: "delta-demo".into(),
        family: Family::Hypercube,
        axis: SweepAxis::DeltaGrid(deltas),
        series: [8, 9]
            .iter()
            .map(|&n| SeriesSpec {
                label: format!("n={n} gaussian"),
                kind: NoiseKind::GaussianPhase,
                strength: 0.0,
                dim: n,
            })
            .collect(),
        s_max: None,
        realizations: 50,
        seed: 42,
        marked: 0,
    };
    let table = run_sweep(&plan)?;
    let col = |name| table.column_index(name).unwrap();

    let mut current = String::new();
    for row in &table.rows {
        let series = row[col("series")].as_str().unwrap();
        if series != current {
            current = series.to_string();
            println!("\n{series}");
            println!("  {:>6} {:>10} {:>7} {:>12}", "delta", "sigma", "s*", "scaled cost");
        }
        println!(
            "  {:>6.1} {:>10.5} {:>7} {:>12.4}",
            row[col("delta")].as_f64().unwrap(),
            row[col("strength")].as_f64().unwrap(),
            row[col("s_star")].as_i64().unwrap(),
            row[col("scaled_cost")].as_f64().unwrap(),
        );
    }
    Ok(())
}
