//! Search metrics: peak finding, the cost functional, and Monte Carlo
//! aggregation over noise realizations.
//!
//! The figure of merit for a search run of s steps is the cost c(s) = s / p(s),
//! the expected number of walk steps until the marked vertex is actually
//! measured when the experiment is restarted after every measurement. Its
//! minimum c* over s defines the stopping time s*, and ln(c*) / ln(N) is the
//! scaled cost: 1/2 for ideal amplitude amplification, 1 at the classical
//! boundary.
//!
//! Peak finding has to respect two artifacts of the dynamics. Probabilities
//! advance in exact step pairs, so noisy mean curves carry a micro local
//! maximum at every other step; physical peaks are found with a +-2 step
//! dominance window. Exact ties from the same pairing make "the" peak step a
//! plateau, reported as its first and last step.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::noise::NoiseSpec;
use crate::state::WalkSpec;
use crate::walk::{run_walk, Trajectory};

/// Cost of a probability curve, c(s) = s / p(s).
#[derive(Debug, Clone)]
pub struct CostCurve {
    /// Cost at each step, infinite where p(s) = 0 and at s = 0.
    pub cost: Vec<f64>,
    /// First step attaining the minimum cost.
    pub s_star: usize,
    /// Minimum cost c* = c(s*).
    pub c_star: f64,
    /// ln(c*) / ln(N).
    pub scaled: f64,
}

/// Cost functional of a marked-probability curve on N vertices.
pub fn cost_curve(p_marked: &[f64], n_vertices: usize) -> Result<CostCurve> {
    let mut cost = Vec::with_capacity(p_marked.len());
    let mut s_star = 0;
    let mut c_star = f64::INFINITY;
    for (s, &p) in p_marked.iter().enumerate() {
        let c = if s == 0 || p <= 0.0 {
            f64::INFINITY
        } else {
            s as f64 / p
        };
        if c < c_star {
            (s_star, c_star) = (s, c);
        }
        cost.push(c);
    }
    if !c_star.is_finite() {
        return Err(Error::AllCostsInfinite);
    }
    Ok(CostCurve {
        cost,
        s_star,
        c_star,
        scaled: scaled_cost(c_star, n_vertices),
    })
}

/// ln(cost) / ln(N).
pub fn scaled_cost(cost: f64, n_vertices: usize) -> f64 {
    cost.ln() / (n_vertices as f64).ln()
}

/// First-attaining argmax of a probability curve over steps s >= 1.
pub fn peak_marked_curve(p_marked: &[f64]) -> (usize, f64) {
    let mut best = (1, p_marked[1]);
    for (s, &p) in p_marked.iter().enumerate().skip(2) {
        if p > best.1 {
            best = (s, p);
        }
    }
    best
}

/// First-attaining argmax of the marked probability over steps s >= 1.
pub fn peak_marked(traj: &Trajectory) -> (usize, f64) {
    peak_marked_curve(&traj.p_marked)
}

/// First-attaining argmax of the unmarked-background probability, including
/// the initial state.
pub fn max_unmarked(traj: &Trajectory) -> (usize, f64) {
    let mut best = (0, traj.p_unmarked_max[0]);
    for (s, &p) in traj.p_unmarked_max.iter().enumerate().skip(1) {
        if p > best.1 {
            best = (s, p);
        }
    }
    best
}

///// All local maxima under a dominance window: step s qualifies when values[s]
/// is >= every value within `window` steps on both sides, and qualifying runs
/// closer than `window` are merged into the plateau of their first step.
pub fn local_maxima(values: &[f64], window: usize) -> Vec<(usize, f64)> {
    let mut out = Vec::new();
    let mut last_qualifying: Option<usize> = None;
    let upper = values.len().saturating_sub(window);
    for s in window..upper {
        let v = values[s];
        if ((s - window)..=(s + window)).all(|t| values[t] <= v) {
            if !matches!(last_qualifying, Some(prev) if s - prev <= window) {
                out.push((s, v));
            }
            last_qualifying = Some(s);
        }
    }
    out
}

/// First local maximum under a dominance window.
pub fn first_local_max(values: &[f64], window: usize) -> Option<(usize, f64)> {
    local_maxima(values, window).first().copied()
}

/// Plateau of the global maximum over s >= 1: first and last step whose value
/// is within `tol` of the maximum.
pub fn peak_steps(values: &[f64], tol: f64) -> Option<(usize, usize)> {
    if values.len() < 2 {
        return None;
    }
    let max = values[1..].iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut first = None;
    let mut last = 0;
    for (s, &v) in values.iter().enumerate().skip(1) {
        if (max - v).abs() <= tol {
            first.get_or_insert(s);
            last = s;
        }
    }
    first.map(|f| (f, last))
}

/// Mean and stderr curves over Monte Carlo realizations.
#[derive(Debug, Clone)]
pub struct McAggregate {
    pub mean_marked: Vec<f64>,
    pub stderr_marked: Vec<f64>,
    pub mean_unmarked_max: Vec<f64>,
    pub stderr_unmarked_max: Vec<f64>,
    /// Realizations actually run; 1 for deterministic noise kinds.
    pub realizations: usize,
}

fn mean_stderr(samples: &[f64]) -> (f64, f64) {
    let r = samples.len();
    let mean = samples.iter().sum::<f64>() / r as f64;
    if r < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (r - 1) as f64;
    (mean, (var / r as f64).sqrt())
}

/// Average `realizations` walk realizations, seeded from `master_seed` (which
/// replaces the seed inside `noise`). Realization r always uses stream r, so
/// results do not depend on thread count. Deterministic noise kinds are run
/// once.
pub fn monte_carlo(
    spec: WalkSpec,
    noise: &NoiseSpec,
    s_max: usize,
    realizations: usize,
    master_seed: u64,
) -> Result<McAggregate> {
    if realizations == 0 {
        return Err(Error::InvalidSpec(
            "at least one realization is required".into(),
        ));
    }
    let effective = NoiseSpec {
        seed: master_seed,
        ..*noise
    };
    effective.validate()?;
    // A single realization suffices whenever every run is identical.
    let r_eff = if effective.kind.is_stochastic() && effective.strength != 0.0 {
        realizations
    } else {
        1
    };
    let trajectories: Vec<Trajectory> = (0..r_eff)
        .into_par_iter()
        .map(|r| run_walk(spec, &effective, s_max, r as u64))
        .collect::<Result<Vec<_>>>()?;

    // sequential reduction in realization order, independent of the schedule
    let len = s_max + 1;
    let mut agg = McAggregate {
        mean_marked: Vec::with_capacity(len),
        stderr_marked: Vec::with_capacity(len),
        mean_unmarked_max: Vec::with_capacity(len),
        stderr_unmarked_max: Vec::with_capacity(len),
        realizations: r_eff,
    };
    let mut column = vec![0.0; r_eff];
    for s in 0..len {
        for (c, t) in column.iter_mut().zip(&trajectories) {
            *c = t.p_marked[s];
        }
        let (m, e) = mean_stderr(&column);
        agg.mean_marked.push(m);
        agg.stderr_marked.push(e);
        for (c, t) in column.iter_mut().zip(&trajectories) {
            *c = t.p_unmarked_max[s];
        }
        let (m, e) = mean_stderr(&column);
        agg.mean_unmarked_max.push(m);
        agg.stderr_unmarked_max.push(e);
    }
    Ok(agg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::NoiseKind;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cost_curve_basics() {
        let c = cost_curve(&[0.25, 0.5, 0.25], 4).unwrap();
        assert_eq!(c.cost[0], f64::INFINITY);
        assert_abs_diff_eq!(c.cost[1], 2.0, epsilon = 0.0);
        assert_abs_diff_eq!(c.cost[2], 8.0, epsilon = 0.0);
        assert_eq!(c.s_star, 1);
        assert_abs_diff_eq!(c.c_star, 2.0, epsilon = 0.0);
        assert_abs_diff_eq!(c.scaled, 2.0f64.ln() / 4.0f64.ln(), epsilon = 1e-15);
    }

    #[test]
    fn zero_probability_steps_cost_infinity() {
        let c = cost_curve(&[0.1, 0.0, 0.5], 8).unwrap();
        assert_eq!(c.cost[1], f64::INFINITY);
        assert_eq!(c.s_star, 2);
        assert!(matches!(
            cost_curve(&[0.5, 0.0, 0.0], 8),
            Err(Error::AllCostsInfinite)
        ));
    }

    #[test]
    fn cost_ties_resolve_to_the_first_step() {
        let c = cost_curve(&[0.0, 0.25, 0.5], 8).unwrap();
        assert_eq!(c.cost[1], c.cost[2]);
        assert_eq!(c.s_star, 1);
    }

    #[test]
    fn scaled_cost_of_n_is_one() {
        assert_eq!(scaled_cost(256.0, 256), 1.0);
        assert_abs_diff_eq!(scaled_cost(16.0, 256), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn peak_finding_skips_the_initial_state() {
        let traj = Trajectory {
            p_marked: vec![0.9, 0.1, 0.5],
            p_unmarked_max: vec![0.9, 0.2, 0.1],
            norm_err: 0.0,
        };
        assert_eq!(peak_marked(&traj), (2, 0.5));
        assert_eq!(max_unmarked(&traj), (0, 0.9));
    }

    #[test]
    fn windowed_maxima_merge_plateaus() {
        let staircase = [0.0, 0.1, 0.3, 0.3, 0.5, 0.5, 0.4, 0.4, 0.2, 0.2];
        assert_eq!(local_maxima(&staircase, 2), vec![(4, 0.5)]);
        assert_eq!(first_local_max(&staircase, 2), Some((4, 0.5)));
    }

    #[test]
    fn windowed_maxima_separate_distinct_peaks() {
        let two = [0.0, 1.0, 2.0, 3.0, 2.0, 1.0, 0.0, 1.0, 2.0, 3.0, 4.0, 0.0, 0.0];
        assert_eq!(local_maxima(&two, 2), vec![(3, 3.0), (10, 4.0)]);
    }

    #[test]
    fn peak_plateau_bounds() {
        let values = [9.0, 1.0, 2.0, 2.0, 1.0];
        assert_eq!(peak_steps(&values, 1e-12), Some((2, 3)));
        assert_eq!(peak_steps(&[1.0], 1e-12), None);
    }

    #[test]
    fn monte_carlo_is_reproducible_and_overrides_the_seed() {
        let spec = WalkSpec::hypercube(5, 0).unwrap();
        let noise = NoiseSpec::new(NoiseKind::GaussianPhase, 0.4, 1).unwrap();
        let a = monte_carlo(spec, &noise, 15, 6, 99).unwrap();
        let b = monte_carlo(spec, &noise, 15, 6, 99).unwrap();
        assert_eq!(a.mean_marked, b.mean_marked);
        assert_eq!(a.stderr_marked, b.stderr_marked);
        assert!(a.stderr_marked.iter().skip(2).any(|&e| e > 0.0));

        // the master seed is the one that matters, realization r uses stream r
        let reseeded = NoiseSpec::new(NoiseKind::GaussianPhase, 0.4, 99).unwrap();
        let manual: Vec<_> = (0..6)
            .map(|r| run_walk(spec, &reseeded, 15, r).unwrap())
            .collect();
        let mean5: f64 = manual.iter().map(|t| t.p_marked[5]).sum::<f64>() / 6.0;
        assert_abs_diff_eq!(a.mean_marked[5], mean5, epsilon = 1e-15);
    }

    #[test]
    fn deterministic_kinds_collapse_to_one_realization() {
        let spec = WalkSpec::hypercube(5, 0).unwrap();
        let noise = NoiseSpec::new(NoiseKind::SystematicPhase, 0.3, 1).unwrap();
        let agg = monte_carlo(spec, &noise, 10, 50, 42).unwrap();
        assert_eq!(agg.realizations, 1);
        assert!(agg.stderr_marked.iter().all(|&e| e == 0.0));
        assert!(monte_carlo(spec, &noise, 10, 0, 42).is_err());
    }
}
