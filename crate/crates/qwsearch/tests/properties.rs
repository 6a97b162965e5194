//! Randomized invariants of the walk operators and the table codecs.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qwsearch::operators::apply_shift;
use qwsearch::{
    cost_curve, derive_seed, local_maxima, run_walk, Error, Lattice, LinkSet, NoiseKind,
    NoiseSpec, ResultTable, Value, WalkSpec, WalkerState,
};

fn random_state(spec: WalkSpec, seed: u64) -> WalkerState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut amp: Vec<Complex64> = (0..spec.total_dim())
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amp {
        *a /= norm;
    }
    WalkerState::from_amplitudes(spec, amp).unwrap()
}

fn random_links(lattice: Lattice, seed: u64, density: f64) -> LinkSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = (0..lattice.edge_count()).filter(|_| rng.random::<f64>() < density);
    LinkSet::from_indices(lattice, picked).unwrap()
}

fn spec_from(family_grid: bool, size_pick: usize, marked_pick: usize) -> WalkSpec {
    if family_grid {
        let side = 2 + size_pick % 7;
        WalkSpec::grid(side, marked_pick % (side * side)).unwrap()
    } else {
        let dim = 2 + size_pick % 5;
        WalkSpec::hypercube(dim, marked_pick % (1 << dim)).unwrap()
    }
}

proptest! {
    /// The shift is an involution for every broken-link pattern: amplitudes
    /// come back bit for bit.
    #[test]
    fn shift_is_an_involution(
        family_grid: bool,
        size_pick in 0usize..100,
        marked_pick in 0usize..10_000,
        seed: u64,
        density in 0.0f64..1.0,
    ) {
        let spec = spec_from(family_grid, size_pick, marked_pick);
        let links = random_links(spec.lattice, seed, density);
        let mut state = random_state(spec, seed ^ 0xABCD);
        let before = state.amplitudes().to_vec();
        apply_shift(&mut state, &links).unwrap();
        apply_shift(&mut state, &links).unwrap();
        prop_assert_eq!(state.amplitudes(), &before[..]);
    }

    /// Every noise model keeps the evolution unitary.
    #[test]
    fn walks_preserve_the_norm(
        family_grid: bool,
        size_pick in 0usize..100,
        kind_pick in 0usize..6,
        strength in 0.0f64..1.0,
        seed: u64,
    ) {
        let spec = spec_from(family_grid, size_pick, 0);
        let kind = [
            NoiseKind::None,
            NoiseKind::SystematicPhase,
            NoiseKind::GaussianPhase,
            NoiseKind::BrokenLinks,
            NoiseKind::UnmarkedSystematicPhase,
            NoiseKind::UnmarkedGaussianPhase,
        ][kind_pick];
        let strength = if kind == NoiseKind::None { 0.0 } else { strength };
        let noise = NoiseSpec::new(kind, strength, seed).unwrap();
        let traj = run_walk(spec, &noise, 25, 0).unwrap();
        prop_assert!(traj.norm_err <= 1e-10, "norm drift {}", traj.norm_err);
    }

    /// Costs are bounded below by the step count and the minimum is genuine.
    #[test]
    fn cost_curves_are_consistent(
        probs in proptest::collection::vec(0.0f64..1.0, 2..40),
    ) {
        let n_vertices = 64;
        match cost_curve(&probs, n_vertices) {
            Ok(cc) => {
                prop_assert!(cc.s_star >= 1);
                prop_assert_eq!(cc.cost[cc.s_star], cc.c_star);
                for (s, &c) in cc.cost.iter().enumerate().skip(1) {
                    prop_assert!(c >= s as f64);
                    prop_assert!(c >= cc.c_star);
                }
            }
            Err(Error::AllCostsInfinite) => {
                prop_assert!(probs.iter().skip(1).all(|&p| p <= 0.0));
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    /// Every reported local maximum dominates its window.
    #[test]
    fn local_maxima_dominate_their_window(
        values in proptest::collection::vec(0.0f64..1.0, 5..60),
        window in 1usize..4,
    ) {
        for (s, p) in local_maxima(&values, window) {
            let lo = s.saturating_sub(window);
            let hi = (s + window).min(values.len() - 1);
            for v in &values[lo..=hi] {
                prop_assert!(p >= *v);
            }
        }
    }

    /// Realization seed streams never collide for neighbouring indices.
    #[test]
    fn derived_seeds_are_distinct(master: u64, index in 0u64..1_000_000) {
        prop_assert_ne!(derive_seed(master, index), derive_seed(master, index + 1));
    }

    /// Tables survive both serialization formats unchanged.
    #[test]
    fn tables_round_trip_through_both_codecs(
        ints in proptest::collection::vec(-1_000_000i64..1_000_000, 1..12),
        floats in proptest::collection::vec(-1.0e12f64..1.0e12, 1..12),
        labels in proptest::collection::vec("[a-z][a-z0-9 =._-]{0,12}", 1..12),
    ) {
        let n = ints.len().min(floats.len()).min(labels.len());
        let mut table = ResultTable::new(
            vec![("figure".into(), "prop".into()), ("seed".into(), "7".into())],
            vec!["series".into(), "s".into(), "value".into()],
        );
        for i in 0..n {
            table.push_row(vec![
                Value::Text(labels[i].trim().to_string()),
                Value::Int(ints[i]),
                Value::Float(floats[i]),
            ]);
        }
        let csv = ResultTable::parse_csv(&table.to_csv_string().unwrap()).unwrap();
        prop_assert_eq!(&csv, &table);
        let jsonl = ResultTable::parse_jsonl(&table.to_jsonl_string().unwrap()).unwrap();
        prop_assert_eq!(jsonl.rows, table.rows);
    }
}
