//! Walk drivers: evolve a search walk under one noise realization, and the
//! Grover baseline it is compared against.
//!
//! A trajectory starts in the uniform superposition over coin and vertex
//! states and records the marked-vertex probability after every full step
//! (coin then shift). Entry s of a trajectory is the probability after s
//! steps, entry 0 is the initial state. The maximum probability over the
//! unmarked vertices is recorded alongside, which is what the marked signal
//! has to beat to be readable out of a measurement.
//!
//! Stopping-time conventions: the hypercube search peaks near
//! round(pi/2 sqrt(2^(n-1))) steps, the torus search runs against a budget of
//! ceil(2 sqrt(N ln N)) steps. Default horizons are twice the hypercube
//! stopping time and exactly the torus budget, which cover the first peak and
//! its first revival on both lattices.

use crate::error::{Error, Result};
use crate::noise::{realize_step_noise, stream_rng, NoiseSpec};
use crate::operators::{apply_grover_coin, apply_shift, step, LinkSet};
use crate::state::{WalkSpec, WalkerState, NORM_TOL};

/// Per-step probability record of one walk realization.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Probability at the marked vertex after s steps, indexed by s.
    pub p_marked: Vec<f64>,
    /// Largest probability over unmarked vertices after s steps.
    pub p_unmarked_max: Vec<f64>,
    /// Largest |norm - 1| seen along the trajectory.
    pub norm_err: f64,
}

impl Trajectory {
    /// Number of steps taken, one less than the record length.
    pub fn steps(&self) -> usize {
        self.p_marked.len() - 1
    }
}

/// Fill `probs` with the vertex probabilities of `state`, returning |norm - 1|.
fn record_probs(state: &WalkerState, probs: &mut [f64]) -> f64 {
    probs.fill(0.0);
    let vertices = probs.len();
    for chunk in state.amplitudes().chunks_exact(vertices) {
        for (p, a) in probs.iter_mut().zip(chunk) {
            *p += a.norm_sqr();
        }
    }
    (probs.iter().sum::<f64>().sqrt() - 1.0).abs()
}

fn max_unmarked_prob(probs: &[f64], marked: usize) -> f64 {
    probs
        .iter()
        .enumerate()
        .filter(|(v, _)| *v != marked)
        .map(|(_, p)| *p)
        .fold(0.0, f64::max)
}

/// Evolve one realization of the search walk for `s_max` steps.
///
/// `realization` selects the random stream for stochastic noise kinds, so a
/// Monte Carlo run over realizations 0..R is reproducible in any order. The
/// walk aborts with [`Error::CorruptedState`] if the norm drifts past
/// [`NORM_TOL`], which a correct unitary step never does.
pub fn run_walk(
    spec: WalkSpec,
    noise: &NoiseSpec,
    s_max: usize,
    realization: u64,
) -> Result<Trajectory> {
    noise.validate()?;
    let mut rng = stream_rng(noise, realization);
    let mut state = WalkerState::uniform(spec);
    let mut probs = vec![0.0; spec.vertex_count()];
    let mut p_marked = Vec::with_capacity(s_max + 1);
    let mut p_unmarked_max = Vec::with_capacity(s_max + 1);

    let mut norm_err = record_probs(&state, &mut probs);
    p_marked.push(probs[spec.marked]);
    p_unmarked_max.push(max_unmarked_prob(&probs, spec.marked));

    for _ in 0..s_max {
        let step_noise = realize_step_noise(spec.lattice, noise, &mut rng)?;
        step(&mut state, noise.kind, &step_noise)?;
        let err = record_probs(&state, &mut probs);
        if err > NORM_TOL {
            return Err(Error::CorruptedState(err));
        }
        norm_err = norm_err.max(err);
        p_marked.push(probs[spec.marked]);
        p_unmarked_max.push(max_unmarked_prob(&probs, spec.marked));
    }

    Ok(Trajectory {
        p_marked,
        p_unmarked_max,
        norm_err,
    })
}

/// Hypercube stopping time round(pi/2 sqrt(2^(n-1))).
pub fn theoretical_stop_skw(dim: usize) -> usize {
    (std::f64::consts::FRAC_PI_2 * ((1u64 << (dim - 1)) as f64).sqrt()).round() as usize
}

/// Torus step budget ceil(2 sqrt(N ln N)) with N = side^2.
pub fn akr_budget(side: usize) -> usize {
    let n = (side * side) as f64;
    (2.0 * (n * n.ln()).sqrt()).ceil() as usize
}

/// Default horizon for trajectories and sweeps: twice the stopping time on
/// the hypercube, the step budget on the torus.
pub fn default_horizon(spec: WalkSpec) -> usize {
    match spec.lattice {
        crate::state::Lattice::Hypercube { dim } => 2 * theoretical_stop_skw(dim),
        crate::state::Lattice::Grid { side } => akr_budget(side),
    }
}

/// Largest amplitude residual of one unmarked walk step applied to the
/// uniform state, which that walk fixes exactly.
pub fn verify_initial_eigenstate(spec: WalkSpec) -> Result<f64> {
    let reference = WalkerState::uniform(spec);
    let mut state = reference.clone();
    apply_grover_coin(&mut state);
    apply_shift(&mut state, &LinkSet::empty(spec.lattice))?;
    Ok(state
        .amplitudes()
        .iter()
        .zip(reference.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

/// Success probability of Grover search on 2^n_qubits items after each of
/// 0..=iterations oracle calls. Amplitudes stay real, the simulation is exact
/// up to rounding.
pub fn grover_success_curve(
    n_qubits: usize,
    marked: usize,
    iterations: usize,
) -> Result<Vec<f64>> {
    if !(1..=26).contains(&n_qubits) {
        return Err(Error::InvalidSpec(format!(
            "qubit count must be in 1..=26, got {n_qubits}"
        )));
    }
    let n = 1usize << n_qubits;
    if marked >= n {
        return Err(Error::VertexOutOfRange {
            vertex: marked,
            vertices: n,
        });
    }
    let mut amp = vec![1.0 / (n as f64).sqrt(); n];
    let mut curve = Vec::with_capacity(iterations + 1);
    curve.push(amp[marked] * amp[marked]);
    for _ in 0..iterations {
        amp[marked] = -amp[marked];
        let mean = amp.iter().sum::<f64>() / n as f64;
        for a in &mut amp {
            *a = 2.0 * mean - *a;
        }
        curve.push(amp[marked] * amp[marked]);
    }
    Ok(curve)
}

/// Success probability after `iterations` Grover iterations.
pub fn run_grover(n_qubits: usize, marked: usize, iterations: usize) -> Result<f64> {
    Ok(*grover_success_curve(n_qubits, marked, iterations)?
        .last()
        .expect("curve has iterations + 1 entries"))
}

/// Closed-form Grover success probability sin^2((2k+1) asin(1/sqrt(N))).
pub fn grover_closed_form(n_qubits: usize, k: usize) -> f64 {
    let n = (1u64 << n_qubits) as f64;
    let t = (1.0 / n.sqrt()).asin();
    ((2 * k + 1) as f64 * t).sin().powi(2)
}

/// The probability-optimal iteration count floor(pi / (4 asin(1/sqrt(N)))).
/// One more iteration already overshoots the rotation past pi/2.
pub fn grover_optimal_iterations(n_qubits: usize) -> usize {
    let n = (1u64 << n_qubits) as f64;
    (std::f64::consts::FRAC_PI_4 / (1.0 / n.sqrt()).asin()).floor() as usize
}
