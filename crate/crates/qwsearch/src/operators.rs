//! Coin and shift operators, and the combined walk step.
//!
//! One step of the search walk applies a coin operator followed by the shift.
//! The coin acts per vertex on the coin space: unmarked vertices get the Grover
//! diffusion coin (reflection about the uniform coin state), the marked vertex
//! gets -I. Phase noise replaces one of those -1 factors by exp(i(pi+phase)),
//! either on the marked coin (the marked-phase models) or on the reflecting part
//! of the unmarked coin (the unmarked-phase models). Both reduce bit-exactly to
//! the ideal coin at phase 0.
//!
//! The shift exchanges amplitude across edges. On the hypercube, coin direction
//! d moves ket(d, x) to ket(d, x xor e_d). On the torus the shift is flip-flop:
//! ket(d, 0; n) pairs with ket(d, 1; n + e_d), so the sign coin flips on every
//! hop. Broken links remove individual pairings for one step: the completion of
//! a broken 2-cycle into a unitary is the identity on both paired states, which
//! is implemented exactly by undoing those swaps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::noise::NoiseKind;
use crate::state::{grid_coords, grid_site, Family, Lattice, WalkerState};

/// One undirected lattice edge, named from one endpoint.
///
/// Hypercube: the edge between `vertex` and `vertex xor (1 << axis)`; the
/// canonical form has bit `axis` of `vertex` clear. Grid: the edge from
/// `vertex` to its forward neighbour along `axis`, already canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    pub vertex: usize,
    pub axis: usize,
}

/// Validate and canonicalize a link on `lattice`.
pub fn canonical_link(lattice: Lattice, vertex: usize, axis: usize) -> Result<Link> {
    let vertices = lattice.vertex_count();
    if vertex >= vertices {
        return Err(Error::VertexOutOfRange { vertex, vertices });
    }
    let axes = match lattice {
        Lattice::Hypercube { dim } => dim,
        Lattice::Grid { .. } => 2,
    };
    if axis >= axes {
        return Err(Error::InvalidLink { vertex, axis });
    }
    let vertex = match lattice {
        Lattice::Hypercube { .. } => vertex & !(1 << axis),
        Lattice::Grid { .. } => vertex,
    };
    Ok(Link { vertex, axis })
}

/// Position of a canonical link in the edge enumeration, a bijection onto
/// `0..edge_count`.
pub fn edge_index(lattice: Lattice, link: Link) -> Result<usize> {
    let link = canonical_link(lattice, link.vertex, link.axis)?;
    match lattice {
        Lattice::Hypercube { dim } => {
            Ok((link.axis << (dim - 1)) | compress_vertex(link.vertex, link.axis))
        }
        Lattice::Grid { side } => Ok(link.axis * side * side + link.vertex),
    }
}

/// Canonical link at position `index` of the edge enumeration.
pub fn link_at(lattice: Lattice, index: usize) -> Result<Link> {
    if index >= lattice.edge_count() {
        return Err(Error::InvalidLink {
            vertex: index,
            axis: usize::MAX,
        });
    }
    match lattice {
        Lattice::Hypercube { dim } => {
            let axis = index >> (dim - 1);
            let vertex = decompress_vertex(index & ((1 << (dim - 1)) - 1), axis);
            Ok(Link { vertex, axis })
        }
        Lattice::Grid { side } => Ok(Link {
            vertex: index % (side * side),
            axis: index / (side * side),
        }),
    }
}

/// Drop bit `axis` from `vertex`, shifting higher bits down.
fn compress_vertex(vertex: usize, axis: usize) -> usize {
    (vertex & ((1 << axis) - 1)) | ((vertex >> (axis + 1)) << axis)
}

fn decompress_vertex(compressed: usize, axis: usize) -> usize {
    (compressed & ((1 << axis) - 1)) | ((compressed >> axis) << (axis + 1))
}

/// Set of broken links, stored as sorted unique edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkSet {
    lattice: Lattice,
    indices: Vec<usize>,
}

impl LinkSet {
    pub fn empty(lattice: Lattice) -> Self {
        LinkSet {
            lattice,
            indices: Vec::new(),
        }
    }

    pub fn new(lattice: Lattice, links: &[Link]) -> Result<Self> {
        let indices = links
            .iter()
            .map(|l| edge_index(lattice, *l))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(lattice, indices)
    }

    pub fn from_indices(lattice: Lattice, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if let Some(&last) = indices.last() {
            if last >= lattice.edge_count() {
                return Err(Error::InvalidLink {
                    vertex: last,
                    axis: usize::MAX,
                });
            }
        }
        Ok(LinkSet { lattice, indices })
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Sorted edge indices of the broken links.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Whether the edge named by (vertex, axis) is broken. Either endpoint
    /// names the same hypercube edge.
    pub fn contains(&self, vertex: usize, axis: usize) -> bool {
        match canonical_link(self.lattice, vertex, axis)
            .and_then(|l| edge_index(self.lattice, l))
        {
            Ok(idx) => self.indices.binary_search(&idx).is_ok(),
            Err(_) => false,
        }
    }

    pub fn links(&self) -> impl Iterator<Item = Link> + '_ {
        self.indices
            .iter()
            .map(move |&i| link_at(self.lattice, i).expect("indices validated at construction"))
    }
}

/// Noise realized for a single step: the coin phase for that step and the set
/// of links broken during that step.
#[derive(Debug, Clone)]
pub struct StepNoise {
    pub phase: f64,
    pub links: LinkSet,
}

impl StepNoise {
    /// The noiseless realization: phase 0, nothing broken.
    pub fn quiet(lattice: Lattice) -> Self {
        StepNoise {
            phase: 0.0,
            links: LinkSet::empty(lattice),
        }
    }
}

/// exp(i(pi+phase)), the perturbed reflection factor. Exactly -1 at phase 0.
pub fn marked_phase_factor(phase: f64) -> Complex64 {
    if phase == 0.0 {
        Complex64::new(-1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, std::f64::consts::PI + phase)
    }
}

/// Per-vertex amplitude sums over the coin index, the shared kernel of all
/// coin operators.
fn vertex_sums(amp: &[Complex64], vertices: usize) -> Vec<Complex64> {
    let mut sums = vec![Complex64::ZERO; vertices];
    for chunk in amp.chunks_exact(vertices) {
        for (s, a) in sums.iter_mut().zip(chunk) {
            *s += a;
        }
    }
    sums
}

/// Grover diffusion coin at every vertex: c maps to 2 mean(c) - c.
pub fn apply_grover_coin(state: &mut WalkerState) {
    let vertices = state.spec().vertex_count();
    let g = 2.0 / state.spec().coin_dim() as f64;
    let sums = vertex_sums(&state.amp, vertices);
    for chunk in state.amp.chunks_exact_mut(vertices) {
        for (a, s) in chunk.iter_mut().zip(&sums) {
            *a = s * g - *a;
        }
    }
}

/// Search coin with a phase-perturbed marked vertex: Grover coin at unmarked
/// vertices, exp(i(pi+phase)) times the identity at the marked vertex.
pub fn apply_modified_coin(state: &mut WalkerState, phase: f64) {
    let spec = state.spec();
    let vertices = spec.vertex_count();
    let marked = spec.marked;
    let ph = marked_phase_factor(phase);
    let saved: Vec<Complex64> = (0..spec.coin_dim())
        .map(|d| state.amp[d * vertices + marked])
        .collect();
    apply_grover_coin(state);
    for (d, c) in saved.into_iter().enumerate() {
        state.amp[d * vertices + marked] = ph * c;
    }
}

/// Search coin with a phase-perturbed unmarked coin: the reflecting part of
/// the Grover coin carries exp(i(pi+phase)) while the mean component is kept
/// fixed, and the marked vertex keeps the ideal -I. The unmarked action is
/// c maps to ph c + (1 - ph) mean(c), with ph the perturbed factor.
pub fn apply_unmarked_phase_coin(state: &mut WalkerState, phase: f64) {
    let spec = state.spec();
    let vertices = spec.vertex_count();
    let marked = spec.marked;
    let ph = marked_phase_factor(phase);
    let f = (Complex64::ONE - ph) / spec.coin_dim() as f64;
    let saved: Vec<Complex64> = (0..spec.coin_dim())
        .map(|d| state.amp[d * vertices + marked])
        .collect();
    let sums = vertex_sums(&state.amp, vertices);
    for chunk in state.amp.chunks_exact_mut(vertices) {
        for (a, s) in chunk.iter_mut().zip(&sums) {
            *a = ph * *a + s * f;
        }
    }
    for (d, c) in saved.into_iter().enumerate() {
        state.amp[d * vertices + marked] = -c;
    }
}

/// Hypercube shift: swap ket(d, x) with ket(d, x xor e_d), except across
/// broken links where both states are left untouched.
pub fn apply_shift_hypercube(state: &mut WalkerState, broken: &LinkSet) -> Result<()> {
    let lattice = state.spec().lattice;
    let Lattice::Hypercube { dim } = lattice else {
        return Err(Error::FamilyMismatch {
            expected: Family::Hypercube.to_string(),
            found: lattice.family().to_string(),
        });
    };
    if broken.lattice() != lattice {
        return Err(Error::LatticeMismatch);
    }
    let vertices = lattice.vertex_count();
    for axis in 0..dim {
        let bit = 1 << axis;
        let base = axis * vertices;
        for x in 0..vertices {
            if x & bit == 0 {
                state.amp.swap(base + x, base + (x | bit));
            }
        }
    }
    // undoing the swap is the exact unitary completion of a broken 2-cycle
    for link in broken.links() {
        let base = link.axis * vertices;
        state.amp.swap(base + link.vertex, base + (link.vertex | (1 << link.axis)));
    }
    Ok(())
}

/// Forward neighbour of `site` along `axis` on the torus.
#[inline]
fn grid_forward(side: usize, site: usize, axis: usize) -> usize {
    let (n0, n1) = grid_coords(side, site);
    match axis {
        0 => grid_site(side, (n0 + 1) % side, n1),
        _ => grid_site(side, n0, (n1 + 1) % side),
    }
}

/// Flip-flop torus shift: swap ket(d, 0; n) with ket(d, 1; n + e_d), except
/// across broken links where both states are left untouched.
pub fn apply_shift_grid(state: &mut WalkerState, broken: &LinkSet) -> Result<()> {
    let lattice = state.spec().lattice;
    let Lattice::Grid { side } = lattice else {
        return Err(Error::FamilyMismatch {
            expected: Family::Grid.to_string(),
            found: lattice.family().to_string(),
        });
    };
    if broken.lattice() != lattice {
        return Err(Error::LatticeMismatch);
    }
    let vertices = lattice.vertex_count();
    for axis in 0..2 {
        let fwd = (2 * axis) * vertices;
        let bwd = (2 * axis + 1) * vertices;
        for site in 0..vertices {
            state.amp.swap(fwd + site, bwd + grid_forward(side, site, axis));
        }
    }
    for link in broken.links() {
        let fwd = (2 * link.axis) * vertices;
        let bwd = (2 * link.axis + 1) * vertices;
        state
            .amp
            .swap(fwd + link.vertex, bwd + grid_forward(side, link.vertex, link.axis));
    }
    Ok(())
}

/// Shift for whichever lattice the state lives on.
pub fn apply_shift(state: &mut WalkerState, broken: &LinkSet) -> Result<()> {
    match state.spec().lattice.family() {
        Family::Hypercube => apply_shift_hypercube(state, broken),
        Family::Grid => apply_shift_grid(state, broken),
    }
}

/// One full step of the search walk under the given noise realization:
/// the coin selected by `kind`, then the shift with `noise.links` broken.
pub fn step(state: &mut WalkerState, kind: NoiseKind, noise: &StepNoise) -> Result<()> {
    match kind {
        NoiseKind::UnmarkedSystematicPhase | NoiseKind::UnmarkedGaussianPhase => {
            apply_unmarked_phase_coin(state, noise.phase)
        }
        _ => apply_modified_coin(state, noise.phase),
    }
    apply_shift(state, &noise.links)
}
