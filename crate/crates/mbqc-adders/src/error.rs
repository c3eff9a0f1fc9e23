//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Adder constructors require a bit-width of at least 1.
    #[error("invalid width: bit-width must be >= 1, got {0}")]
    InvalidWidth(usize),

    /// Operand out of range for the circuit's declared width.
    #[error("domain error: {0}")]
    Domain(String),

    /// A gate failed its structural invariants.
    #[error("invalid gate: {0}")]
    InvalidGate(String),

    /// Catalog file could not be parsed.
    #[error("catalog parse error: {0}")]
    CatalogParse(String),

    /// Catalog lacks an entry for a gate kind.
    #[error("catalog missing entry for gate kind {0}")]
    MissingEntry(String),

    /// A fragment port does not sit on the fragment boundary.
    #[error("port off fragment boundary: {0}")]
    PortOffBoundary(String),

    /// A fragment edge connects sites that are not lattice-adjacent.
    #[error("edge adjacency error: {0}")]
    Adjacency(String),

    /// Structural invariant of a fragment is broken.
    #[error("invalid fragment: {0}")]
    InvalidFragment(String),

    /// Compilation was asked to run against a catalog that did not pass
    /// verification.
    #[error("catalog is not verified: {0}")]
    UnverifiedCatalog(String),

    /// Operand routing could not be realized on the chosen track assignment.
    #[error("routing error: {0}")]
    Routing(String),

    /// Two placed fragments overlap. This is an internal bug, never silent.
    #[error("placement overlap: {0}")]
    Overlap(String),

    /// Simulation would exceed the configured resource limits.
    #[error("capacity exceeded: {0} (largest feasible bit-width here is n = {1})")]
    Capacity(String, usize),

    /// JSON (de)serialization failure.
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),

    /// I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Internal invariant violation.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
