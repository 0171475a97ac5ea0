//! Crate-wide error type.

/// Errors raised by graph construction, matrix kernels, and enumeration.
///
/// Errors split into two broad kinds: invalid input (malformed graphs,
/// unknown vertices, bad queries) and capability limits (guards that stop
/// well-formed but out-of-scope or explosive requests). The CLI maps the
/// two kinds to distinct exit codes.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("edge {edge}: endpoints must be distinct (loops are not supported)")]
    LoopEdge { edge: String },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),

    #[error("duplicate edge id {0:?}")]
    DuplicateEdge(String),

    #[error("edge {edge}: sign/sigma must be +1 or -1, got {value}")]
    InvalidSign { edge: String, value: i64 },

    #[error("edge {edge}: needs at least 2 incidences, got {got}")]
    EdgeTooSmall { edge: String, got: usize },

    #[error("invalid graph document: {0}")]
    Format(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix index out of range: {0}")]
    BadIndex(String),

    #[error("row or column collision: {0}")]
    IndexCollision(String),

    #[error("ordered vertex lists must have equal lengths ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },

    #[error("source and sink must be distinct vertices")]
    SourceSinkEqual,

    #[error("permanent is limited to {max}x{max} matrices, got {got}x{got}")]
    PermanentTooLarge { got: usize, max: usize },

    #[error("enumeration exceeded the cap of {cap} items")]
    CapacityExceeded { cap: usize },

    #[error("edge {edge} has {arity} incidences; this operation needs a signed graph (all edges of size 2)")]
    NotTwoUniform { edge: String, arity: usize },

    #[error("method `{method}` is unavailable here: {requirement}")]
    MethodUnsupported { method: String, requirement: String },

    #[error("contributor does not match the query: {0}")]
    InvalidContributor(String),

    #[error("unsupported output format: {0}")]
    UnsupportedFormat(String),
}

impl Error {
    /// True when the error is a capability limit rather than bad input.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::PermanentTooLarge { .. }
                | Error::CapacityExceeded { .. }
                | Error::NotTwoUniform { .. }
                | Error::MethodUnsupported { .. }
                | Error::UnsupportedFormat(_)
        )
    }
}
