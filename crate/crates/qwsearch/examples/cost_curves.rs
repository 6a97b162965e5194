//! Why noisy walks are stopped early: the cost c(s) = s / p(s).
//!
//! One run of s steps succeeds with probability p(s), so the expected total
//! step count over repeated runs is s/p(s). The noiseless curve is almost
//! flat past its minimum; under a systematic phase error the curve develops
//! a sharp interior minimum well before the noiseless peak, which is where
//! the algorithm should be measured.
//!
//! Run with: cargo run --example cost_curves

use qwsearch::{cost_curve, run_walk, NoiseKind, NoiseSpec, WalkSpec};

fn main() -> qwsearch::Result<()> {
    let spec = WalkSpec::hypercube(8, 0)?;
    let horizon = 36;
    let cases = [
        ("ideal", NoiseKind::None, 0.0),
        ("systematic theta=0.3", NoiseKind::SystematicPhase, 0.3),
    ];

    let mut costs = Vec::new();
    for (label, kind, strength) in cases {
        let traj = run_walk(spec, &NoiseSpec::new(kind, strength, 0)?, horizon, 0)?;
        let cc = cost_curve(&traj.p_marked, spec.vertex_count())?;
        println!(
            "{label:<22} minimum c={:.1} at s={} (scaled {:.4})",
            cc.c_star, cc.s_star, cc.scaled
        );
        costs.push((label, cc));
    }

    println!("\n  s  {:>10} {:>12}", "ideal", "theta=0.3");
    for s in 1..=horizon {
        print!("{s:>3}");
        for (_, cc) in &costs {
            if cc.cost[s].is_finite() {
                print!("  {:>10.1}", cc.cost[s]);
            } else {
                print!("  {:>10}", "inf");
            }
        }
        println!();
    }
    Ok(())
}
