//! Damped revivals under link percolation.
//!
//! Each step, every edge of the n=8 hypercube breaks independently with
//! probability p=0.02; amplitudes on a broken edge stay put, which keeps
//! the step unitary. Averaged over realizations, the first probability peak
//! survives at nearly the noiseless step but lower, and each later revival
//! is weaker than the last.
//!
//! Run with: cargo run --example broken_links

use qwsearch::{local_maxima, monte_carlo, peak_marked_curve, NoiseKind, NoiseSpec, WalkSpec};

fn main() -> qwsearch::Result<()> {
    let spec = WalkSpec::hypercube(8, 0)?;
    let noise = NoiseSpec::new(NoiseKind::BrokenLinks, 0.02, 42)?;
    let horizon = 80;
    let agg = monte_carlo(spec, &noise, horizon, 100, 42)?;

    let ideal = monte_carlo(spec, &NoiseSpec::noiseless(0), horizon, 1, 0)?;
    let (s0, p0) = peak_marked_curve(&ideal.mean_marked);
    println!("noiseless peak: p={p0:.4} at s={s0}");

    println!("\nrevivals of the mean marked probability at p=0.02:");
    for (rank, (s, p)) in local_maxima(&agg.mean_marked, 2).iter().enumerate() {
        println!(
            "  peak {:>2}: s={s:<3} p={p:.4} ({:.0}% of noiseless)",
            rank + 1,
            100.0 * p / p0
        );
    }

    println!("\n  s  mean p_marked (stderr)");
    for s in (0..=horizon).step_by(8) {
        println!(
            "{s:>3}  {:.4} ({:.4})",
            agg.mean_marked[s], agg.stderr_marked[s]
        );
    }
    Ok(())
}
