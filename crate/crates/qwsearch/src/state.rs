//! Walker states on the two supported lattices.
//!
//! A coined walker lives in the tensor product of a coin space and a vertex space.
//! Supported lattices: the n-dimensional hypercube (2^n vertices, coin dimension n,
//! one coin direction per axis) and the side x side torus (coin dimension 4, one
//! direction per signed axis). Amplitudes are stored coin-major: the amplitude of
//! coin d at vertex v sits at index d * vertex_count + v, so the shift and coin
//! kernels stream contiguous slices.
//!
//! Grid conventions: vertex (n0, n1) is site n1 * side + n0, axis 0 is the n0
//! direction, and coin (axis d, sign j) packs to 2 * d + j with j = 0 forward.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on |norm - 1| before a state is considered corrupted.
pub const NORM_TOL: f64 = 1e-6;

/// Lattice family, used for dispatch and mismatch reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercube,
    Grid,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Hypercube => write!(f, "hypercube"),
            Family::Grid => write!(f, "grid"),
        }
    }
}

/// Finite lattice the walker moves on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// n-dimensional hypercube on bit strings of length `dim`.
    Hypercube { dim: usize },
    /// Two-dimensional torus with `side` vertices per axis.
    Grid { side: usize },
}

impl Lattice {
    pub fn family(&self) -> Family {
        match self {
            Lattice::Hypercube { .. } => Family::Hypercube,
            Lattice::Grid { .. } => Family::Grid,
        }
    }

    /// Dimension of the coin space.
    pub fn coin_dim(&self) -> usize {
        match self {
            Lattice::Hypercube { dim } => *dim,
            Lattice::Grid { .. } => 4,
        }
    }

    /// Number of vertices N.
    pub fn vertex_count(&self) -> usize {
        match self {
            Lattice::Hypercube { dim } => 1 << dim,
            Lattice::Grid { side } => side * side,
        }
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        match self {
            Lattice::Hypercube { dim } => dim << (dim - 1),
            Lattice::Grid { side } => 2 * side * side,
        }
    }

    /// Total Hilbert space dimension coin_dim * vertex_count.
    pub fn total_dim(&self) -> usize {
        self.coin_dim() * self.vertex_count()
    }

    /// Amplitude index of coin `d` at vertex `v`.
    #[inline]
    pub fn index(&self, coin: usize, vertex: usize) -> usize {
        coin * self.vertex_count() + vertex
    }
}

/// Grid site of coordinates (n0, n1).
#[inline]
pub fn grid_site(side: usize, n0: usize, n1: usize) -> usize {
    n1 * side + n0
}

/// Coordinates (n0, n1) of a grid site.
#[inline]
pub fn grid_coords(side: usize, site: usize) -> (usize, usize) {
    (site % side, site / side)
}

/// Packed grid coin index for axis `d` and sign `j` (0 forward, 1 backward).
#[inline]
pub fn grid_coin(axis: usize, j: usize) -> usize {
    2 * axis + j
}

/// A lattice together with the single marked vertex searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkSpec {
    pub lattice: Lattice,
    pub marked: usize,
}

impl WalkSpec {
    /// Search on the `dim`-dimensional hypercube. Coin dimension equals `dim`.
    pub fn hypercube(dim: usize, marked: usize) -> Result<Self> {
        if !(2..=20).contains(&dim) {
            return Err(Error::InvalidSpec(format!(
                "hypercube dimension must be in 2..=20, got {dim}"
            )));
        }
        let lattice = Lattice::Hypercube { dim };
        Self::checked(lattice, marked)
    }

    /// Search on the side x side torus with the four-dimensional coin.
    pub fn grid(side: usize, marked: usize) -> Result<Self> {
        if !(2..=1024).contains(&side) {
            return Err(Error::InvalidSpec(format!(
                "grid side must be in 2..=1024, got {side}"
            )));
        }
        let lattice = Lattice::Grid { side };
        Self::checked(lattice, marked)
    }

    fn checked(lattice: Lattice, marked: usize) -> Result<Self> {
        let vertices = lattice.vertex_count();
        if marked >= vertices {
            return Err(Error::VertexOutOfRange {
                vertex: marked,
                vertices,
            });
        }
        Ok(WalkSpec { lattice, marked })
    }

    pub fn coin_dim(&self) -> usize {
        self.lattice.coin_dim()
    }

    pub fn vertex_count(&self) -> usize {
        self.lattice.vertex_count()
    }

    pub fn total_dim(&self) -> usize {
        self.lattice.total_dim()
    }
}

/// Pure state of the walker, a complex amplitude per (coin, vertex) pair.
#[derive(Debug, Clone)]
pub struct WalkerState {
    spec: WalkSpec,
    pub(crate) amp: Vec<Complex64>,
}

impl WalkerState {
    /// Uniform superposition over all coin and vertex states, the standard
    /// initial state of both search walks.
    pub fn uniform(spec: WalkSpec) -> Self {
        let dim = spec.total_dim();
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        WalkerState {
            spec,
            amp: vec![a; dim],
        }
    }

    /// Basis state with coin `d` at vertex `v`.
    pub fn basis(spec: WalkSpec, coin: usize, vertex: usize) -> Result<Self> {
        if coin >= spec.coin_dim() {
            return Err(Error::InvalidSpec(format!(
                "coin {coin} out of range for coin dimension {}",
                spec.coin_dim()
            )));
        }
        if vertex >= spec.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex,
                vertices: spec.vertex_count(),
            });
        }
        let mut amp = vec![Complex64::ZERO; spec.total_dim()];
        amp[spec.lattice.index(coin, vertex)] = Complex64::ONE;
        Ok(WalkerState { spec, amp })
    }

    /// Wrap an explicit amplitude vector. The length must be `spec.total_dim()`.
    pub fn from_amplitudes(spec: WalkSpec, amp: Vec<Complex64>) -> Result<Self> {
        if amp.len() != spec.total_dim() {
            return Err(Error::InvalidSpec(format!(
                "amplitude vector has length {}, spec needs {}",
                amp.len(),
                spec.total_dim()
            )));
        }
        Ok(WalkerState { spec, amp })
    }

    pub fn spec(&self) -> WalkSpec {
        self.spec
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    /// Euclidean norm, 1 for any physical state.
    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// |norm - 1|, the drift accumulated by floating point error.
    pub fn norm_error(&self) -> f64 {
        (self.norm() - 1.0).abs()
    }

    /// Probability of finding the walker at each vertex, coin traced out.
    pub fn position_distribution(&self) -> Result<Vec<f64>> {
        let err = self.norm_error();
        if err > NORM_TOL {
            return Err(Error::CorruptedState(err));
        }
        let n = self.spec.vertex_count();
        let mut p = vec![0.0; n];
        for (d, chunk) in self.amp.chunks_exact(n).enumerate() {
            debug_assert!(d < self.spec.coin_dim());
            for (pv, a) in p.iter_mut().zip(chunk) {
                *pv += a.norm_sqr();
            }
        }
        Ok(p)
    }

    /// Probability of measuring the walker at vertex `v`.
    pub fn vertex_probability(&self, vertex: usize) -> Result<f64> {
        let n = self.spec.vertex_count();
        if vertex >= n {
            return Err(Error::VertexOutOfRange {
                vertex,
                vertices: n,
            });
        }
        Ok(self
            .amp
            .iter()
            .skip(vertex)
            .step_by(n)
            .map(|a| a.norm_sqr())
            .sum())
    }

    /// Probability of measuring the walker at the marked vertex.
    pub fn marked_probability(&self) -> f64 {
        self.vertex_probability(self.spec.marked)
            .expect("marked vertex is validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lattice_sizes() {
        let h = Lattice::Hypercube { dim: 8 };
        assert_eq!(h.coin_dim(), 8);
        assert_eq!(h.vertex_count(), 256);
        assert_eq!(h.edge_count(), 1024);
        assert_eq!(h.total_dim(), 2048);

        let g = Lattice::Grid { side: 16 };
        assert_eq!(g.coin_dim(), 4);
        assert_eq!(g.vertex_count(), 256);
        assert_eq!(g.edge_count(), 512);
        assert_eq!(g.total_dim(), 1024);
    }

    #[test]
    fn spec_validation() {
        assert!(WalkSpec::hypercube(1, 0).is_err());
        assert!(WalkSpec::hypercube(21, 0).is_err());
        assert!(WalkSpec::hypercube(8, 256).is_err());
        assert!(WalkSpec::hypercube(8, 255).is_ok());
        assert!(WalkSpec::grid(1, 0).is_err());
        assert!(WalkSpec::grid(16, 256).is_err());
        assert!(WalkSpec::grid(16, 255).is_ok());
    }

    #[test]
    fn grid_layout_round_trip() {
        let side = 5;
        for n1 in 0..side {
            for n0 in 0..side {
                let s = grid_site(side, n0, n1);
                assert_eq!(grid_coords(side, s), (n0, n1));
            }
        }
        assert_eq!(grid_coin(0, 0), 0);
        assert_eq!(grid_coin(0, 1), 1);
        assert_eq!(grid_coin(1, 0), 2);
        assert_eq!(grid_coin(1, 1), 3);
    }

    #[test]
    fn uniform_state_is_normalized() {
        let spec = WalkSpec::hypercube(6, 0).unwrap();
        let psi = WalkerState::uniform(spec);
        assert_abs_diff_eq!(psi.norm(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            psi.marked_probability(),
            1.0 / 64.0,
            epsilon = 1e-14
        );
        let p = psi.position_distribution().unwrap();
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn basis_state_probabilities() {
        let spec = WalkSpec::grid(4, 5).unwrap();
        let psi = WalkerState::basis(spec, 3, 5).unwrap();
        assert_abs_diff_eq!(psi.norm(), 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(psi.marked_probability(), 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(psi.vertex_probability(4).unwrap(), 0.0, epsilon = 0.0);
        assert!(WalkerState::basis(spec, 4, 0).is_err());
        assert!(WalkerState::basis(spec, 0, 16).is_err());
    }

    #[test]
    fn corrupted_state_is_rejected() {
        let spec = WalkSpec::hypercube(2, 0).unwrap();
        let mut amp = vec![Complex64::ZERO; spec.total_dim()];
        amp[0] = Complex64::new(0.5, 0.0);
        let psi = WalkerState::from_amplitudes(spec, amp).unwrap();
        assert!(matches!(
            psi.position_distribution(),
            Err(Error::CorruptedState(_))
        ));
    }
}
