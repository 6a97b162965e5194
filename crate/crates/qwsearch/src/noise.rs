//! Decoherence models and their per-step realization.
//!
//! Three mechanisms perturb the search walk, each controlled by one strength
//! parameter:
//!
//! * systematic phase (theta): the perturbed reflection factor exp(i(pi+theta))
//!   is applied every step with the same theta,
//! * Gaussian phase (sigma): a fresh phase is drawn each step from N(0, sigma^2)
//!   and wrapped to [-pi, pi),
//! * broken links (p): each lattice edge is independently absent for the
//!   duration of one step with probability p, resampled every step.
//!
//! The phase mechanisms come in two placements, on the marked coin or on the
//! reflecting part of the unmarked coin. At strength zero every model reduces
//! bit-exactly to the noiseless walk: no distribution is sampled, phases are
//! exactly 0.0 and link sets are exactly empty.
//!
//! Randomness is reproducible by construction. A master seed plus a stream
//! index (the Monte Carlo realization number) is mixed through the SplitMix64
//! finalizer into a ChaCha8 stream, so realization r of a run is the same
//! regardless of thread count or execution order.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Normal};

use crate::error::{Error, Result};
use crate::operators::{LinkSet, StepNoise};
use crate::state::Lattice;

/// Which decoherence mechanism perturbs the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoiseKind {
    /// Ideal search walk.
    None,
    /// Constant phase theta on the marked coin, every step.
    SystematicPhase,
    /// Per-step Gaussian phase of width sigma on the marked coin.
    GaussianPhase,
    /// Each edge independently broken with probability p, per step.
    BrokenLinks,
    /// Constant phase theta on the unmarked coin reflection.
    UnmarkedSystematicPhase,
    /// Per-step Gaussian phase of width sigma on the unmarked coin reflection.
    UnmarkedGaussianPhase,
}

impl NoiseKind {
    /// Whether realizations differ across the random stream. Deterministic
    /// kinds collapse a Monte Carlo run to a single realization.
    pub fn is_stochastic(&self) -> bool {
        matches!(
            self,
            NoiseKind::GaussianPhase | NoiseKind::BrokenLinks | NoiseKind::UnmarkedGaussianPhase
        )
    }

    /// Conventional name of the strength parameter.
    pub fn strength_label(&self) -> &'static str {
        match self {
            NoiseKind::None => "strength",
            NoiseKind::SystematicPhase | NoiseKind::UnmarkedSystematicPhase => "theta",
            NoiseKind::GaussianPhase | NoiseKind::UnmarkedGaussianPhase => "sigma",
            NoiseKind::BrokenLinks => "p",
        }
    }
}

impl std::fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            NoiseKind::None => "none",
            NoiseKind::SystematicPhase => "systematic",
            NoiseKind::GaussianPhase => "gaussian",
            NoiseKind::BrokenLinks => "broken-link",
            NoiseKind::UnmarkedSystematicPhase => "unmarked-systematic",
            NoiseKind::UnmarkedGaussianPhase => "unmarked-gaussian",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(NoiseKind::None),
            "systematic" => Ok(NoiseKind::SystematicPhase),
            "gaussian" => Ok(NoiseKind::GaussianPhase),
            "broken-link" => Ok(NoiseKind::BrokenLinks),
            "unmarked-systematic" => Ok(NoiseKind::UnmarkedSystematicPhase),
            "unmarked-gaussian" => Ok(NoiseKind::UnmarkedGaussianPhase),
            _ => Err(Error::InvalidNoise(format!("unknown noise kind {s:?}"))),
        }
    }
}

/// A noise mechanism with its strength and the master seed of its random
/// stream. The seed is ignored by deterministic kinds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub strength: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn new(kind: NoiseKind, strength: f64, seed: u64) -> Result<Self> {
        let spec = NoiseSpec {
            kind,
            strength,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The ideal walk.
    pub fn noiseless(seed: u64) -> Self {
        NoiseSpec {
            kind: NoiseKind::None,
            strength: 0.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.strength.is_finite() {
            return Err(Error::InvalidNoise(format!(
                "strength must be finite, got {}",
                self.strength
            )));
        }
        match self.kind {
            NoiseKind::None => {
                if self.strength != 0.0 {
                    return Err(Error::InvalidNoise(format!(
                        "noiseless walk takes strength 0, got {}",
                        self.strength
                    )));
                }
            }
            NoiseKind::GaussianPhase | NoiseKind::UnmarkedGaussianPhase => {
                if self.strength < 0.0 {
                    return Err(Error::InvalidNoise(format!(
                        "sigma must be nonnegative, got {}",
                        self.strength
                    )));
                }
            }
            NoiseKind::BrokenLinks => {
                if !(0.0..=1.0).contains(&self.strength) {
                    return Err(Error::InvalidNoise(format!(
                        "break probability must be in [0, 1], got {}",
                        self.strength
                    )));
                }
            }
            NoiseKind::SystematicPhase | NoiseKind::UnmarkedSystematicPhase => {}
        }
        Ok(())
    }
}

/// SplitMix64 finalizer over `master + GOLDEN * (index + 1)`. Decorrelates
/// consecutive stream indices and nearby master seeds.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(0x9E3779B97F4A7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Random stream for one Monte Carlo realization of a noise spec.
pub fn stream_rng(noise: &NoiseSpec, realization: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(noise.seed, realization))
}

/// Wrap a phase into [-pi, pi).
fn wrap_phase(phi: f64) -> f64 {
    use std::f64::consts::PI;
    (phi + PI).rem_euclid(2.0 * PI) - PI
}

/// Draw the noise realization for one step.
pub fn realize_step_noise(
    lattice: Lattice,
    noise: &NoiseSpec,
    rng: &mut ChaCha8Rng,
) -> Result<StepNoise> {
    noise.validate()?;
    match noise.kind {
        NoiseKind::None => Ok(StepNoise::quiet(lattice)),
        NoiseKind::SystematicPhase | NoiseKind::UnmarkedSystematicPhase => Ok(StepNoise {
            phase: noise.strength,
            links: LinkSet::empty(lattice),
        }),
        NoiseKind::GaussianPhase | NoiseKind::UnmarkedGaussianPhase => {
            let phase = if noise.strength == 0.0 {
                0.0
            } else {
                let normal = Normal::new(0.0, noise.strength)
                    .map_err(|e| Error::InvalidNoise(e.to_string()))?;
                wrap_phase(normal.sample(rng))
            };
            Ok(StepNoise {
                phase,
                links: LinkSet::empty(lattice),
            })
        }
        NoiseKind::BrokenLinks => {
            let edges = lattice.edge_count();
            let links = if noise.strength == 0.0 {
                LinkSet::empty(lattice)
            } else {
                let binom = Binomial::new(edges as u64, noise.strength)
                    .map_err(|e| Error::InvalidNoise(e.to_string()))?;
                let count = binom.sample(rng) as usize;
                let chosen = rand::seq::index::sample(rng, edges, count).into_vec();
                LinkSet::from_indices(lattice, chosen)?
            };
            Ok(StepNoise { phase: 0.0, links })
        }
    }
}

/// Strength that scales with lattice size as N^(-delta).
pub fn strength_from_delta(n_vertices: usize, delta: f64) -> f64 {
    (n_vertices as f64).powf(-delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn kind_names_round_trip() {
        for kind in [
            NoiseKind::None,
            NoiseKind::SystematicPhase,
            NoiseKind::GaussianPhase,
            NoiseKind::BrokenLinks,
            NoiseKind::UnmarkedSystematicPhase,
            NoiseKind::UnmarkedGaussianPhase,
        ] {
            assert_eq!(kind.to_string().parse::<NoiseKind>().unwrap(), kind);
        }
        assert!("grover".parse::<NoiseKind>().is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(NoiseSpec::new(NoiseKind::None, 0.1, 0).is_err());
        assert!(NoiseSpec::new(NoiseKind::GaussianPhase, -0.1, 0).is_err());
        assert!(NoiseSpec::new(NoiseKind::BrokenLinks, 1.1, 0).is_err());
        assert!(NoiseSpec::new(NoiseKind::BrokenLinks, f64::NAN, 0).is_err());
        assert!(NoiseSpec::new(NoiseKind::SystematicPhase, 0.3, 0).is_ok());
        assert!(NoiseSpec::new(NoiseKind::BrokenLinks, 1.0, 0).is_ok());
    }

    #[test]
    fn seed_derivation_follows_the_documented_finalizer() {
        let finalize = |master: u64, index: u64| {
            let mut z =
                master.wrapping_add(0x9E3779B97F4A7C15u64.wrapping_mul(index.wrapping_add(1)));
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            z ^ (z >> 31)
        };
        for (m, i) in [(0u64, 0u64), (42, 0), (42, 1), (u64::MAX, 7)] {
            assert_eq!(derive_seed(m, i), finalize(m, i));
        }
        assert_ne!(derive_seed(42, 0), derive_seed(42, 1));
        assert_ne!(derive_seed(42, 0), derive_seed(43, 0));
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let noise = NoiseSpec::new(NoiseKind::GaussianPhase, 0.5, 42).unwrap();
        let a: u64 = stream_rng(&noise, 3).random();
        let b: u64 = stream_rng(&noise, 3).random();
        let c: u64 = stream_rng(&noise, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn zero_strength_realizations_are_exact() {
        let lattice = Lattice::Hypercube { dim: 4 };
        for kind in [
            NoiseKind::None,
            NoiseKind::GaussianPhase,
            NoiseKind::UnmarkedGaussianPhase,
            NoiseKind::BrokenLinks,
        ] {
            let noise = NoiseSpec::new(kind, 0.0, 99).unwrap();
            let mut rng = stream_rng(&noise, 0);
            let sn = realize_step_noise(lattice, &noise, &mut rng).unwrap();
            assert_eq!(sn.phase, 0.0);
            assert!(sn.links.is_empty());
        }
    }

    #[test]
    fn systematic_phase_is_the_strength_itself() {
        let lattice = Lattice::Grid { side: 4 };
        let noise = NoiseSpec::new(NoiseKind::SystematicPhase, 0.3, 0).unwrap();
        let mut rng = stream_rng(&noise, 0);
        for _ in 0..5 {
            let sn = realize_step_noise(lattice, &noise, &mut rng).unwrap();
            assert_eq!(sn.phase, 0.3);
            assert!(sn.links.is_empty());
        }
    }

    #[test]
    fn gaussian_phases_are_wrapped_and_vary() {
        let lattice = Lattice::Hypercube { dim: 4 };
        let noise = NoiseSpec::new(NoiseKind::GaussianPhase, 8.0, 17).unwrap();
        let mut rng = stream_rng(&noise, 0);
        let phases: Vec<f64> = (0..50)
            .map(|_| {
                realize_step_noise(lattice, &noise, &mut rng)
                    .unwrap()
                    .phase
            })
            .collect();
        use std::f64::consts::PI;
        assert!(phases.iter().all(|p| (-PI..PI).contains(p)));
        assert!(phases.windows(2).any(|w| w[0] != w[1]));
    }

    #[test]
    fn broken_links_sample_within_the_edge_set() {
        let lattice = Lattice::Hypercube { dim: 5 };
        let noise = NoiseSpec::new(NoiseKind::BrokenLinks, 0.25, 7).unwrap();
        let mut rng = stream_rng(&noise, 0);
        let mut total = 0;
        for _ in 0..40 {
            let sn = realize_step_noise(lattice, &noise, &mut rng).unwrap();
            assert_eq!(sn.phase, 0.0);
            assert!(sn.links.indices().iter().all(|&i| i < lattice.edge_count()));
            total += sn.links.len();
        }
        // mean count is 0.25 * 80 = 20 per step, 800 over 40 steps
        assert!(total > 400 && total < 1200, "total broken {total}");
    }

    #[test]
    fn break_probability_one_breaks_everything() {
        let lattice = Lattice::Grid { side: 3 };
        let noise = NoiseSpec::new(NoiseKind::BrokenLinks, 1.0, 0).unwrap();
        let mut rng = stream_rng(&noise, 0);
        let sn = realize_step_noise(lattice, &noise, &mut rng).unwrap();
        assert_eq!(sn.links.len(), lattice.edge_count());
    }

    #[test]
    fn delta_strength_values() {
        assert_eq!(strength_from_delta(256, 1.0), 1.0 / 256.0);
        assert_eq!(strength_from_delta(256, 0.0), 1.0);
        assert_abs_diff_eq!(
            strength_from_delta(256, -0.1),
            1.741101126592248,
            epsilon = 1e-15
        );
        assert_eq!(strength_from_delta(1024, 0.5), 1.0 / 32.0);
    }
}
