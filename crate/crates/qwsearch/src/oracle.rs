//! Dense-matrix cross-checks for the structured walk kernels.
//!
//! Everything here rebuilds the walk operators as explicit matrices from their
//! closed forms: coin blocks placed on the diagonal per vertex, the shift as a
//! pairing permutation with broken pairs replaced by identity entries. The
//! structured kernels and the dense operators are two implementations of the
//! same definitions, so driving both with the same realized noise sequence and
//! comparing amplitudes catches indexing and sign mistakes in either one.
//!
//! The dense form also exposes spectra. The search operator rotates the
//! initial state in a two-dimensional subspace spanned by eigenvectors with
//! phases +-alpha, so the smallest nonzero eigenphase predicts the stopping
//! time ceil(pi / (2 alpha)). The +1 eigenspace of the unmarked walk is
//! degenerate, but the marked perturbation has rank one, which keeps the
//! spectator eigenvectors at phase exactly zero; excluding a small window
//! around zero therefore isolates alpha.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::metrics::peak_steps;
use crate::noise::{realize_step_noise, stream_rng, NoiseKind, NoiseSpec};
use crate::operators::{marked_phase_factor, step, LinkSet, StepNoise};
use crate::state::{grid_coords, grid_site, Lattice, WalkSpec, WalkerState};
use crate::walk::{
    grover_closed_form, grover_success_curve, run_walk, theoretical_stop_skw,
    verify_initial_eigenstate,
};

/// Largest Hilbert space dimension dense routines will materialize.
pub const DENSE_LIMIT: usize = 4096;

fn check_dense_size(spec: WalkSpec) -> Result<usize> {
    let d = spec.total_dim();
    if d > DENSE_LIMIT {
        return Err(Error::DenseTooLarge(d, DENSE_LIMIT));
    }
    Ok(d)
}

fn forward_site(side: usize, site: usize, axis: usize) -> usize {
    let (n0, n1) = grid_coords(side, site);
    match axis {
        0 => grid_site(side, (n0 + 1) % side, n1),
        _ => grid_site(side, n0, (n1 + 1) % side),
    }
}

/// Shift as an explicit pairing permutation; broken pairs become identity
/// entries, the unique unitary completion that acts locally.
pub fn dense_shift(spec: WalkSpec, broken: &LinkSet) -> Result<DMatrix<Complex64>> {
    let d = check_dense_size(spec)?;
    if broken.lattice() != spec.lattice {
        return Err(Error::LatticeMismatch);
    }
    let v = spec.vertex_count();
    let one = Complex64::ONE;
    let mut m = DMatrix::zeros(d, d);
    match spec.lattice {
        Lattice::Hypercube { dim } => {
            for axis in 0..dim {
                let bit = 1 << axis;
                for x in 0..v {
                    if x & bit != 0 {
                        continue;
                    }
                    let a = axis * v + x;
                    let b = axis * v + (x | bit);
                    if broken.contains(x, axis) {
                        m[(a, a)] = one;
                        m[(b, b)] = one;
                    } else {
                        m[(a, b)] = one;
                        m[(b, a)] = one;
                    }
                }
            }
        }
        Lattice::Grid { side } => {
            for axis in 0..2 {
                for site in 0..v {
                    let a = (2 * axis) * v + site;
                    let b = (2 * axis + 1) * v + forward_site(side, site, axis);
                    if broken.contains(site, axis) {
                        m[(a, a)] = one;
                        m[(b, b)] = one;
                    } else {
                        m[(a, b)] = one;
                        m[(b, a)] = one;
                    }
                }
            }
        }
    }
    Ok(m)
}

fn coin_block_grover(dc: usize) -> DMatrix<Complex64> {
    let g = Complex64::new(2.0 / dc as f64, 0.0);
    DMatrix::from_fn(dc, dc, |i, j| if i == j { g - Complex64::ONE } else { g })
}

fn coin_block_scaled_identity(dc: usize, factor: Complex64) -> DMatrix<Complex64> {
    DMatrix::from_fn(dc, dc, |i, j| if i == j { factor } else { Complex64::ZERO })
}

fn coin_block_unmarked_phase(dc: usize, ph: Complex64) -> DMatrix<Complex64> {
    let f = (Complex64::ONE - ph) / dc as f64;
    DMatrix::from_fn(dc, dc, |i, j| if i == j { ph + f } else { f })
}

/// Coin operator for one step as a vertex-block-diagonal matrix.
pub fn build_dense_coin(spec: WalkSpec, kind: NoiseKind, phase: f64) -> Result<DMatrix<Complex64>> {
    let d = check_dense_size(spec)?;
    let v = spec.vertex_count();
    let dc = spec.coin_dim();
    let ph = marked_phase_factor(phase);
    let (unmarked, marked) = match kind {
        NoiseKind::UnmarkedSystematicPhase | NoiseKind::UnmarkedGaussianPhase => (
            coin_block_unmarked_phase(dc, ph),
            coin_block_scaled_identity(dc, Complex64::new(-1.0, 0.0)),
        ),
        _ => (coin_block_grover(dc), coin_block_scaled_identity(dc, ph)),
    };
    let mut m = DMatrix::zeros(d, d);
    for vert in 0..v {
        let block = if vert == spec.marked { &marked } else { &unmarked };
        for d1 in 0..dc {
            for d2 in 0..dc {
                m[(d1 * v + vert, d2 * v + vert)] = block[(d1, d2)];
            }
        }
    }
    Ok(m)
}

/// One full step (shift times coin) under a realized noise draw.
pub fn build_dense_step(
    spec: WalkSpec,
    kind: NoiseKind,
    noise: &StepNoise,
) -> Result<DMatrix<Complex64>> {
    let shift = dense_shift(spec, &noise.links)?;
    let coin = build_dense_coin(spec, kind, noise.phase)?;
    Ok(shift * coin)
}

/// The ideal search step, shift times the marked-vertex coin.
pub fn build_dense_search(spec: WalkSpec) -> Result<DMatrix<Complex64>> {
    build_dense_step(spec, NoiseKind::None, &StepNoise::quiet(spec.lattice))
}

/// The walk without a marked vertex, Grover coin everywhere.
pub fn build_dense_unmarked(spec: WalkSpec) -> Result<DMatrix<Complex64>> {
    let d = check_dense_size(spec)?;
    let v = spec.vertex_count();
    let dc = spec.coin_dim();
    let block = coin_block_grover(dc);
    let mut coin = DMatrix::zeros(d, d);
    for vert in 0..v {
        for d1 in 0..dc {
            for d2 in 0..dc {
                coin[(d1 * v + vert, d2 * v + vert)] = block[(d1, d2)];
            }
        }
    }
    Ok(dense_shift(spec, &LinkSet::empty(spec.lattice))? * coin)
}

/// Max-norm deviation of m from a unitary.
pub fn unitarity_error(m: &DMatrix<Complex64>) -> f64 {
    let g = m.adjoint() * m;
    let mut max = 0.0f64;
    for i in 0..g.nrows() {
        for j in 0..g.ncols() {
            let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
            max = max.max((g[(i, j)] - expect).norm());
        }
    }
    max
}

/// Largest imaginary part over all entries.
pub fn max_imag(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
}

fn eigenvalues(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    // the Schur form of a complex matrix is upper triangular, its diagonal
    // carries the eigenvalues
    let (_, t) = m.clone().schur().unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Smallest nonzero eigenphase alpha of a unitary and the stopping-time
/// prediction ceil(pi / (2 alpha)). Phases within 1e-9 of zero are the
/// unperturbed +1 eigenspace and are excluded.
pub fn smallest_eigenphase(m: &DMatrix<Complex64>) -> Result<(f64, usize)> {
    let u_err = unitarity_error(m);
    if u_err > 1e-8 {
        return Err(Error::NotUnitary(u_err));
    }
    let alpha = eigenvalues(m)
        .iter()
        .map(|l| l.arg().abs())
        .filter(|a| *a > 1e-9)
        .fold(f64::INFINITY, f64::min);
    if !alpha.is_finite() {
        return Err(Error::NoEigenphase);
    }
    let stop = (std::f64::consts::FRAC_PI_2 / alpha).ceil() as usize;
    Ok((alpha, stop))
}

/// Number of eigenvalues within `tol` of +1.
pub fn eigenvalue_one_multiplicity(m: &DMatrix<Complex64>, tol: f64) -> Result<usize> {
    let u_err = unitarity_error(m);
    if u_err > 1e-8 {
        return Err(Error::NotUnitary(u_err));
    }
    Ok(eigenvalues(m)
        .iter()
        .filter(|l| (*l - Complex64::ONE).norm() <= tol)
        .count())
}

fn random_probe_amplitudes(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut amp: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amp {
        *a /= norm;
    }
    amp
}

/// Evolve the same random probe state with the structured kernels and with
/// dense matrices built from the same realized noise sequence, returning the
/// largest amplitude deviation seen over `steps` steps.
///
/// The probe state is drawn from stream index u64::MAX, which Monte Carlo
/// realizations never use, so it cannot alias the step-noise stream.
pub fn compare_structured_vs_dense(
    spec: WalkSpec,
    noise: &NoiseSpec,
    steps: usize,
) -> Result<f64> {
    check_dense_size(spec)?;
    noise.validate()?;
    let mut probe_rng = stream_rng(noise, u64::MAX);
    let amp = random_probe_amplitudes(spec.total_dim(), &mut probe_rng);
    let mut structured = WalkerState::from_amplitudes(spec, amp.clone())?;
    let mut dense = DVector::from_vec(amp);
    let mut rng = stream_rng(noise, 0);
    let mut max_dev = 0.0f64;
    for _ in 0..steps {
        let step_noise = realize_step_noise(spec.lattice, noise, &mut rng)?;
        let m = build_dense_step(spec, noise.kind, &step_noise)?;
        dense = &m * &dense;
        step(&mut structured, noise.kind, &step_noise)?;
        let dev = structured
            .amplitudes()
            .iter()
            .zip(dense.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        max_dev = max_dev.max(dev);
    }
    Ok(max_dev)
}

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

fn random_link_set(lattice: Lattice, rng: &mut ChaCha8Rng) -> Result<LinkSet> {
    let indices: Vec<usize> = (0..lattice.edge_count())
        .filter(|_| rng.random::<f64>() < 0.3)
        .collect();
    LinkSet::from_indices(lattice, indices)
}

/// Run the implementation cross-checks and report one outcome per check.
///
/// These are correctness checks of the simulator itself (kernel vs dense
/// agreement, unitarity, spectra, Grover baseline), kept fast enough to run
/// before trusting any sweep.
pub fn run_verification_suite() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();

    {
        let mut worst = 0.0f64;
        for spec in [WalkSpec::hypercube(6, 0)?, WalkSpec::grid(8, 0)?] {
            worst = worst.max(verify_initial_eigenstate(spec)?);
        }
        out.push(CheckOutcome {
            label: "uniform state fixed by the unmarked walk".into(),
            passed: worst <= 1e-12,
            detail: format!("largest residual {worst:.3e}"),
        });
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
        let mut exact = true;
        let mut tried = 0;
        for spec in [WalkSpec::hypercube(5, 0)?, WalkSpec::grid(6, 0)?] {
            for _ in 0..20 {
                let links = random_link_set(spec.lattice, &mut rng)?;
                let mut probe_rng = ChaCha8Rng::seed_from_u64(rng.random());
                let amp = random_probe_amplitudes(spec.total_dim(), &mut probe_rng);
                let reference = WalkerState::from_amplitudes(spec, amp)?;
                let mut state = reference.clone();
                crate::operators::apply_shift(&mut state, &links)?;
                crate::operators::apply_shift(&mut state, &links)?;
                exact &= state.amplitudes() == reference.amplitudes();
                tried += 1;
            }
        }
        out.push(CheckOutcome {
            label: "shift squared is the identity under broken links".into(),
            passed: exact,
            detail: format!("{tried} random link sets, bit-exact"),
        });
    }

    {
        let noise = NoiseSpec::new(NoiseKind::BrokenLinks, 0.1, 20260814)?;
        let mut worst = 0.0f64;
        for spec in [WalkSpec::hypercube(6, 0)?, WalkSpec::grid(8, 0)?] {
            worst = worst.max(run_walk(spec, &noise, 1000, 0)?.norm_err);
        }
        out.push(CheckOutcome {
            label: "norm preserved over 1000 broken-link steps".into(),
            passed: worst <= 1e-10,
            detail: format!("largest |norm - 1| {worst:.3e}"),
        });
    }

    {
        let kinds = [
            (NoiseKind::None, 0.0),
            (NoiseKind::SystematicPhase, 0.3),
            (NoiseKind::GaussianPhase, 0.3),
            (NoiseKind::BrokenLinks, 0.1),
            (NoiseKind::UnmarkedSystematicPhase, 0.3),
            (NoiseKind::UnmarkedGaussianPhase, 0.3),
        ];
        let mut worst = 0.0f64;
        for spec in [WalkSpec::hypercube(3, 1)?, WalkSpec::grid(3, 4)?] {
            for (kind, strength) in kinds {
                let noise = NoiseSpec::new(kind, strength, 42)?;
                worst = worst.max(compare_structured_vs_dense(spec, &noise, 50)?);
            }
        }
        out.push(CheckOutcome {
            label: "structured kernels match dense operators".into(),
            passed: worst <= 1e-12,
            detail: format!("largest amplitude deviation {worst:.3e} over 50 steps"),
        });
    }

    {
        let mut worst_im = 0.0f64;
        let mut worst_u = 0.0f64;
        let mut worst_fix = 0.0f64;
        for spec in [WalkSpec::hypercube(3, 0)?, WalkSpec::grid(3, 0)?] {
            let m = build_dense_unmarked(spec)?;
            worst_im = worst_im.max(max_imag(&m));
            worst_u = worst_u.max(unitarity_error(&m));
            let psi = DVector::from_element(
                spec.total_dim(),
                Complex64::new(1.0 / (spec.total_dim() as f64).sqrt(), 0.0),
            );
            let r = &m * &psi - &psi;
            worst_fix = worst_fix.max(r.iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
        out.push(CheckOutcome {
            label: "dense unmarked walk is real, unitary, fixes uniform".into(),
            passed: worst_im <= 1e-12 && worst_u <= 1e-12 && worst_fix <= 1e-12,
            detail: format!(
                "max imag {worst_im:.3e}, unitarity {worst_u:.3e}, residual {worst_fix:.3e}"
            ),
        });
    }

    {
        let mh = eigenvalue_one_multiplicity(
            &build_dense_unmarked(WalkSpec::hypercube(3, 0)?)?,
            1e-8,
        )?;
        let mg =
            eigenvalue_one_multiplicity(&build_dense_unmarked(WalkSpec::grid(3, 0)?)?, 1e-8)?;
        out.push(CheckOutcome {
            label: "+1 eigenspace of the unmarked walk (informational)".into(),
            passed: true,
            detail: format!(
                "multiplicity {mh} (hypercube n=3), {mg} (grid 3x3); the space is \
                 degenerate but dynamically inert, the marked perturbation has rank one"
            ),
        });
    }

    {
        let spec = WalkSpec::hypercube(6, 0)?;
        let (alpha, predicted) = smallest_eigenphase(&build_dense_search(spec)?)?;
        let traj = run_walk(spec, &NoiseSpec::noiseless(0), 2 * theoretical_stop_skw(6), 0)?;
        let (first, last) =
            peak_steps(&traj.p_marked, 1e-12).expect("trajectory has steps");
        let ok = predicted + 1 >= first && predicted <= last + 1;
        out.push(CheckOutcome {
            label: "eigenphase stopping time matches the empirical peak".into(),
            passed: ok,
            detail: format!(
                "alpha {alpha:.6}, predicted stop {predicted}, peak plateau {first}..{last}"
            ),
        });
    }

    {
        let curve = grover_success_curve(10, 0, 25)?;
        let dev = curve
            .iter()
            .enumerate()
            .map(|(k, &p)| (p - grover_closed_form(10, k)).abs())
            .fold(0.0, f64::max);
        let p_end = *curve.last().expect("curve is nonempty");
        out.push(CheckOutcome {
            label: "Grover baseline matches its closed form".into(),
            passed: dev <= 1e-10 && p_end >= 0.999,
            detail: format!("max deviation {dev:.3e}, success {p_end:.6} after 25 iterations"),
        });
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;

    #[test]
    fn dense_shift_matches_structured_shift_bit_exactly() {
        for spec in [
            WalkSpec::hypercube(3, 0).unwrap(),
            WalkSpec::grid(3, 0).unwrap(),
        ] {
            let links = LinkSet::from_indices(spec.lattice, [0, 2, 5]).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            let amp = random_probe_amplitudes(spec.total_dim(), &mut rng);
            let mut state = WalkerState::from_amplitudes(spec, amp.clone()).unwrap();
            crate::operators::apply_shift(&mut state, &links).unwrap();
            let dense = dense_shift(spec, &links).unwrap() * DVector::from_vec(amp);
            for (a, b) in state.amplitudes().iter().zip(dense.iter()) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn dense_steps_are_unitary_for_every_kind() {
        let spec = WalkSpec::hypercube(3, 2).unwrap();
        let links = LinkSet::from_indices(spec.lattice, [1, 4]).unwrap();
        for kind in [
            NoiseKind::None,
            NoiseKind::SystematicPhase,
            NoiseKind::GaussianPhase,
            NoiseKind::BrokenLinks,
            NoiseKind::UnmarkedSystematicPhase,
            NoiseKind::UnmarkedGaussianPhase,
        ] {
            let noise = StepNoise {
                phase: 0.4,
                links: links.clone(),
            };
            let m = build_dense_step(spec, kind, &noise).unwrap();
            assert!(unitarity_error(&m) <= 1e-12, "kind {kind}");
        }
    }

    #[test]
    fn structured_and_dense_evolutions_agree() {
        for spec in [
            WalkSpec::hypercube(3, 1).unwrap(),
            WalkSpec::grid(3, 4).unwrap(),
        ] {
            let noise = NoiseSpec::new(NoiseKind::BrokenLinks, 0.15, 5).unwrap();
            let dev = compare_structured_vs_dense(spec, &noise, 25).unwrap();
            assert!(dev <= 1e-12, "deviation {dev}");
        }
    }

    #[test]
    fn dense_size_guard() {
        let spec = WalkSpec::hypercube(9, 0).unwrap();
        assert!(matches!(
            build_dense_unmarked(spec),
            Err(Error::DenseTooLarge(4608, DENSE_LIMIT))
        ));
    }

    #[test]
    fn eigenphases_of_a_known_unitary() {
        let eigs = [
            Complex64::ONE,
            Complex64::from_polar(1.0, 0.3),
            Complex64::from_polar(1.0, -0.2),
        ];
        let m = DMatrix::from_fn(3, 3, |i, j| if i == j { eigs[i] } else { Complex64::ZERO });
        let (alpha, stop) = smallest_eigenphase(&m).unwrap();
        assert_abs_diff_eq!(alpha, 0.2, epsilon = 1e-12);
        assert_eq!(stop, 8);

        let identity = DMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        });
        assert!(matches!(
            smallest_eigenphase(&identity),
            Err(Error::NoEigenphase)
        ));

        let skew = DMatrix::from_element(2, 2, Complex64::ONE);
        assert!(matches!(smallest_eigenphase(&skew), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn unmarked_walk_one_eigenspace_multiplicities() {
        let cases = [
            (WalkSpec::hypercube(2, 0).unwrap(), 2),
            (WalkSpec::hypercube(3, 0).unwrap(), 6),
            (WalkSpec::grid(2, 0).unwrap(), 6),
            (WalkSpec::grid(3, 0).unwrap(), 11),
        ];
        for (spec, expected) in cases {
            let m = build_dense_unmarked(spec).unwrap();
            assert_eq!(
                eigenvalue_one_multiplicity(&m, 1e-8).unwrap(),
                expected,
                "{:?}",
                spec.lattice
            );
        }
    }

    #[test]
    fn ideal_dense_search_is_real() {
        let spec = WalkSpec::hypercube(4, 0).unwrap();
        let m = build_dense_search(spec).unwrap();
        assert_eq!(max_imag(&m), 0.0);
        assert!(unitarity_error(&m) <= 1e-12);
    }

    #[test]
    fn verification_suite_passes() {
        let outcomes = run_verification_suite().unwrap();
        assert!(!outcomes.is_empty());
        for o in &outcomes {
            assert!(o.passed, "{}: {}", o.label, o.detail);
        }
    }
}
