use std::fmt;

/// Errors shared across construction, evaluation, ordering and oracle paths.
///
/// All exact arithmetic is checked 128-bit; anything that would wrap is
/// reported as `Overflow` instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Uniformity k < 2.
    UniformityTooSmall { k: usize },
    /// An edge does not consist of exactly k distinct vertices.
    WrongEdgeArity {
        edge_index: usize,
        expected: usize,
        found: usize,
    },
    VertexOutOfRange { vertex: u32, n: usize },
    /// Two edges are equal as vertex sets.
    DuplicateEdge { edge: Vec<u32> },
    VertexAlreadyDeleted { vertex: u32 },
    /// A result or intermediate exceeds the 128-bit signed width.
    Overflow,
    /// Edge count m exceeds the number of possible k-sets.
    InvalidContext { m: usize, max_edges: i128 },
    NotAPermutation,
    /// A step-invariant check was asked of a trace not produced by the
    /// proof-rule variant.
    WrongVariant,
    EmptyGraph,
    InstanceTooLarge { n: usize, cap: usize },
    MemoryBudgetExceeded { required_bytes: u128, budget_bytes: u128 },
    TooManyEdges { m: usize, max_edges: i128 },
    UniformityMismatch { expected: usize, found: usize },
    /// Requested family parameters are not realizable; the message carries
    /// a nearest-feasible suggestion when one exists.
    InfeasibleParameters(String),
    NegativeCount(String),
    /// The capped edge enumeration ran out of candidates before reaching
    /// the target edge count.
    FillerInfeasible {
        target: usize,
        accepted: usize,
        cap: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UniformityTooSmall { k } => {
                write!(f, "uniformity k must be at least 2, got {k}")
            }
            Error::WrongEdgeArity {
                edge_index,
                expected,
                found,
            } => write!(
                f,
                "edge {edge_index} has {found} distinct vertices, expected {expected}"
            ),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            Error::DuplicateEdge { edge } => write!(f, "duplicate edge {edge:?}"),
            Error::VertexAlreadyDeleted { vertex } => {
                write!(f, "vertex {vertex} already deleted")
            }
            Error::Overflow => write!(f, "exact integer overflow (128-bit width exceeded)"),
            Error::InvalidContext { m, max_edges } => {
                write!(f, "edge count {m} exceeds C(n,k) = {max_edges}")
            }
            Error::NotAPermutation => write!(f, "ordering is not a permutation of the vertices"),
            Error::WrongVariant => write!(f, "step trace was not produced by the proof-rule variant"),
            Error::EmptyGraph => write!(f, "operation requires at least one live vertex"),
            Error::InstanceTooLarge { n, cap } => {
                write!(f, "instance has n={n} vertices, exceeding the cap of {cap}")
            }
            Error::MemoryBudgetExceeded {
                required_bytes,
                budget_bytes,
            } => write!(
                f,
                "subset tables need {required_bytes} bytes, budget is {budget_bytes}"
            ),
            Error::TooManyEdges { m, max_edges } => {
                write!(f, "requested {m} edges but only {max_edges} distinct k-sets exist")
            }
            Error::UniformityMismatch { expected, found } => {
                write!(f, "cannot combine uniformity {found} with {expected}")
            }
            Error::InfeasibleParameters(msg) => write!(f, "infeasible parameters: {msg}"),
            Error::NegativeCount(msg) => write!(f, "negative derived count: {msg}"),
            Error::FillerInfeasible {
                target,
                accepted,
                cap,
            } => write!(
                f,
                "filler enumeration exhausted at {accepted}/{target} edges under degree cap {cap}"
            ),
        }
    }
}

impl std::error::Error for Error {}
