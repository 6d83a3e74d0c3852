use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A record of an instance (edge list entry or file line) is unusable.
    #[error("line {line}: {reason}")]
    Ingest { line: usize, reason: String },

    #[error("graph is disconnected: vertex {first} and vertex {second} lie in different components ({components} components)")]
    Disconnected {
        first: Vertex,
        second: Vertex,
        components: usize,
    },

    #[error("{what} supports at most {max} vertices, got {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} has odd degree {degree} in the multigraph")]
    OddDegree { vertex: Vertex, degree: usize },

    #[error("multigraph support is disconnected: vertex {vertex} is not reachable from vertex {start}")]
    EulerDisconnected { start: Vertex, vertex: Vertex },

    #[error("walk does not visit vertex {0}")]
    MissingVertex(Vertex),

    #[error("no perfect matching exists: {0}")]
    NoPerfectMatching(String),

    #[error("terminal set has odd size {0}")]
    OddTerminalSet(usize),

    #[error("terminals {a} and {b} lie in different components")]
    TerminalsDisconnected { a: Vertex, b: Vertex },

    #[error("input point is infeasible: minimum cut {value} < {threshold}")]
    InfeasiblePoint { value: f64, threshold: f64 },

    #[error("sparsification failed posterior checks in all {attempts} attempts: {diagnostics}")]
    SamplingFailed { attempts: usize, diagnostics: String },

    /// A posterior self-check of a computed result did not hold.
    #[error("internal check failed: {0}")]
    CheckFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether the error means the input instance itself admits no solution.
    pub fn is_infeasible_input(&self) -> bool {
        matches!(
            self,
            Error::Disconnected { .. }
                | Error::NoPerfectMatching(_)
                | Error::OddTerminalSet(_)
                | Error::TerminalsDisconnected { .. }
                | Error::InfeasiblePoint { .. }
        )
    }

    /// Whether the error is a failed posterior check of a computed result.
    pub fn is_check_failure(&self) -> bool {
        matches!(self, Error::CheckFailed(_) | Error::SamplingFailed { .. })
    }
}
