use crate::cotree::P4Witness;

/// Errors produced by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A vertex index is not below the vertex count.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// An edge joins a vertex to itself.
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    /// A brute-force routine was asked to work beyond its size guard.
    #[error("{operation} is limited to n <= {limit}, got {got}")]
    SizeGuard {
        operation: &'static str,
        limit: usize,
        got: usize,
    },

    /// A cotree violates a structural invariant.
    #[error("invalid cotree: {0}")]
    InvalidCotree(&'static str),

    /// The graph contains an induced P4.
    #[error("not a cograph: induced P4 on {0}")]
    NotCograph(P4Witness),

    /// The extremal characterization only covers n = 3k - a with a in {0, 1}.
    #[error("extremal characterization does not apply to n = {n} (a = 2)")]
    CharacterizationUndefined { n: usize },

    /// A generator parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    /// Gluing requires a simplicial (free) vertex on both sides.
    #[error("gluing vertex {vertex} of graph {side} is not simplicial")]
    NotSimplicial { side: u8, vertex: usize },

    /// Gluing Hilbert series needs a combined denominator exponent of at least 2.
    #[error("denominator exponents {0} + {1} < 2")]
    DenominatorUnderflow(usize, usize),
}
