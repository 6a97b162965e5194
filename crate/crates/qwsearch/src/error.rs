//! Error type shared across the crate.
//!
//! Everything fallible returns [`Result`]. Numerical guards (norm drift, unitarity,
//! missing eigenphases) carry the measured quantity so callers can report how far
//! off a run was, not just that it failed.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A walk specification that cannot describe a valid lattice or marked vertex.
    #[error("invalid walk specification: {0}")]
    InvalidSpec(String),

    /// Vertex index outside the lattice.
    #[error("vertex {vertex} out of range for lattice with {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    /// Link coordinates outside the lattice edge set.
    #[error("link (vertex {vertex}, axis {axis}) not on the lattice")]
    InvalidLink { vertex: usize, axis: usize },

    /// An operation mixed objects built for different lattice families.
    #[error("lattice family mismatch: expected {expected}, found {found}")]
    FamilyMismatch { expected: String, found: String },

    /// An operation mixed objects built for different lattices of the same family.
    #[error("lattice mismatch between state and operator")]
    LatticeMismatch,

    /// Noise parameters outside their admissible range.
    #[error("invalid noise specification: {0}")]
    InvalidNoise(String),

    /// State norm drifted past tolerance, the trajectory is unusable.
    #[error("state norm drifted by {0:.3e}, exceeds tolerance")]
    CorruptedState(f64),

    /// A dense operator failed its unitarity check.
    #[error("operator is not unitary, max deviation {0:.3e}")]
    NotUnitary(f64),

    /// No eigenphase survived the zero-phase exclusion window.
    #[error("no nonzero eigenphase found")]
    NoEigenphase,

    /// Every step of a probability curve had zero success probability.
    #[error("cost is infinite at every step")]
    AllCostsInfinite,

    /// Dense-matrix routines refuse to build operators past the size guard.
    #[error("dense operator dimension {0} exceeds limit {1}")]
    DenseTooLarge(usize, usize),

    /// A sweep plan that cannot be executed as stated.
    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),

    /// Unknown figure preset identifier.
    #[error("unknown figure preset {0:?}")]
    UnknownFigure(String),

    /// A results file that does not parse back into a table.
    #[error("malformed results: {0}")]
    MalformedResults(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_carry_measured_quantities() {
        let e = Error::CorruptedState(3.5e-4);
        assert!(e.to_string().contains("3.500e-4"));
        let e = Error::DenseTooLarge(8192, 4096);
        assert!(e.to_string().contains("8192"));
        assert!(e.to_string().contains("4096"));
    }
}
