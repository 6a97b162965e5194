//! Noiseless search on the 8-dimensional hypercube.
//!
//! The walk starts in the uniform superposition and applies the marked-coin
//! step repeatedly. The marked probability climbs to about one half after
//! pi/2 sqrt(N/2) steps, and measuring there finds the marked vertex with
//! two quadratic speedup factors visible: the peak step scales as sqrt(N)
//! and the cost minimum sits well below N.
//!
//! Run with: cargo run --example skw_search

use qwsearch::{
    cost_curve, default_horizon, peak_marked, run_walk, theoretical_stop_skw, NoiseSpec, WalkSpec,
};

fn main() -> qwsearch::Result<()> {
    let spec = WalkSpec::hypercube(8, 0)?;
    let noise = NoiseSpec::noiseless(0);
    let horizon = default_horizon(spec);
    let traj = run_walk(spec, &noise, horizon, 0)?;

    let (s_peak, p_peak) = peak_marked(&traj);
    let predicted = theoretical_stop_skw(8);
    println!("hypercube n=8, N={} vertices", spec.vertex_count());
    println!("predicted stopping time: {predicted}");
    println!("observed peak:           s={s_peak}, p_marked={p_peak:.4}");
    println!("initial p_marked:        {:.6}", traj.p_marked[0]);
    println!("norm drift:              {:.2e}", traj.norm_err);

    let cc = cost_curve(&traj.p_marked, spec.vertex_count())?;
    println!(
        "cost minimum:            c={:.1} at s={}, scaled {:.4}",
        cc.c_star, cc.s_star, cc.scaled
    );

    println!("\n  s  p_marked");
    for s in (0..=horizon).step_by(4) {
        let bar = "#".repeat((traj.p_marked[s] * 80.0).round() as usize);
        println!("{s:>3}  {:.4} {bar}", traj.p_marked[s]);
    }
    Ok(())
}
