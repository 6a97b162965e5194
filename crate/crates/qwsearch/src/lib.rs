//! Coined quantum walk search on hypercubes and 2D torus grids, with
//! decoherence.
//!
//! A walker state lives on coin x vertex amplitudes. One search step applies
//! a Grover diffusion coin everywhere except the marked vertex, whose coin is
//! phase-inverted, then moves amplitudes along lattice edges. On the
//! n-hypercube the peak marked probability arrives after about pi/2 sqrt(N/2)
//! steps; on the sqrt(N) x sqrt(N) torus a four-direction flip-flop walk peaks
//! within a budget of 2 sqrt(N ln N) steps. Three imperfections can be mixed
//! in: a systematic phase error on the marked coin, a Gaussian random phase
//! redrawn every step, and links that break independently each step (the walk
//! stays unitary; amplitudes on a broken link simply do not move). Variants
//! that put the phase error on the unmarked coins instead are also available.
//!
//! Everything is seeded and reproducible: a master seed fans out to one RNG
//! stream per Monte Carlo realization, so results do not depend on thread
//! count, and every emitted table carries enough metadata to rerun itself.
//!
//! Runnable examples, in suggested reading order:
//!
//! * `skw_search` walks the noiseless hypercube and compares the peak step
//!   against the spectral prediction.
//! * `grover_baseline` sanity-checks the simulator against the closed-form
//!   Grover success curve.
//! * `noisy_trajectories` overlays marked-probability curves for the three
//!   noise models at their reference strengths.
//! * `cost_curves` shows why noisy walks are stopped early: cost s/p(s)
//!   develops an interior minimum.
//! * `noise_strength_sweep` scans phase-noise strength and watches the
//!   marked/unmarked contrast collapse.
//! * `broken_links` follows the damped revivals left by link percolation.
//! * `delta_scaling` scans sigma = N^(-delta) and reads off the scaled cost
//!   plateau.
//! * `akr_search` runs the torus walk across grid sides.
//! * `dense_oracle` rebuilds small walks as explicit unitary matrices and
//!   extracts stopping times from eigenphases.
//!
//! The `qwsearch` binary exposes the same machinery as subcommands: `skw`,
//! `akr`, `grover`, `sweep`, `figure <id>`, and `verify`.

pub mod error;
pub mod experiments;
pub mod metrics;
pub mod noise;
pub mod operators;
pub mod oracle;
pub mod state;
pub mod walk;

pub use error::{Error, Result};
pub use experiments::{
    figure_plans, known_figures, noise_label, reproduce_from_metadata, run_figure, run_sweep,
    OutputFormat, ResultTable, SeriesSpec, SweepAxis, SweepPlan, Value,
};
pub use metrics::{
    cost_curve, first_local_max, local_maxima, max_unmarked, monte_carlo, peak_marked,
    peak_marked_curve, peak_steps, scaled_cost, CostCurve, McAggregate,
};
pub use noise::{derive_seed, strength_from_delta, NoiseKind, NoiseSpec};
pub use operators::{
    canonical_link, edge_index, link_at, marked_phase_factor, step, Link, LinkSet, StepNoise,
};
pub use oracle::{
    build_dense_search, build_dense_step, build_dense_unmarked, compare_structured_vs_dense,
    eigenvalue_one_multiplicity, run_verification_suite, smallest_eigenphase, unitarity_error,
    CheckOutcome, DENSE_LIMIT,
};
pub use state::{Family, Lattice, WalkSpec, WalkerState, NORM_TOL};
pub use walk::{
    akr_budget, default_horizon, grover_closed_form, grover_optimal_iterations,
    grover_success_curve, run_grover, run_walk, theoretical_stop_skw, verify_initial_eigenstate,
    Trajectory,
};
