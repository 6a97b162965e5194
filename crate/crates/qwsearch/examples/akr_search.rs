//! Search on the two-dimensional torus with the flip-flop walk.
//!
//! The four-direction coin walks a side x side grid with periodic edges.
//! Unlike the hypercube, the peak marked probability shrinks like
//! 1/sqrt(log N) as the grid grows, so the budget of 2 sqrt(N ln N) steps
//! and the amplification built into the cost matter more here.
//!
//! Run with: cargo run --example akr_search

use qwsearch::{akr_budget, cost_curve, peak_marked, run_walk, NoiseSpec, WalkSpec};

fn main() -> qwsearch::Result<()> {
    println!(
        "{:>5} {:>7} {:>7} {:>9} {:>9} {:>12}",
        "side", "N", "budget", "peak s", "peak p", "scaled cost"
    );
    for side in [8, 16, 32] {
        let spec = WalkSpec::grid(side, 0)?;
        let budget = akr_budget(side);
        let traj = run_walk(spec, &NoiseSpec::noiseless(0), budget, 0)?;
        let (s, p) = peak_marked(&traj);
        let cc = cost_curve(&traj.p_marked, spec.vertex_count())?;
        println!(
            "{side:>5} {:>7} {budget:>7} {s:>9} {p:>9.4} {:>12.4}",
            spec.vertex_count(),
            cc.scaled
        );
    }

    let spec = WalkSpec::grid(16, 0)?;
    let traj = run_walk(spec, &NoiseSpec::noiseless(0), akr_budget(16), 0)?;
    println!("\n16 x 16 marked probability:");
    for s in (0..=akr_budget(16)).step_by(8) {
        let bar = "#".repeat((traj.p_marked[s] * 150.0).round() as usize);
        println!("{s:>3}  {:.4} {bar}", traj.p_marked[s]);
    }
    Ok(())
}
