use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-domain input.
    Input,
    /// The request exceeds a hard size cap of an algorithm.
    Capability,
    /// No detector set of the requested level exists.
    NoSolution,
    /// A constructed certificate failed verification.
    Certification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    UnsupportedTrailLength(usize),
    IdenticalPair(usize),
    NotCubic { vertex: usize, degree: usize },
    NotC4Free,
    TooLarge { what: &'static str, n: usize, cap: usize },
    NoSolution,
    Formula(String),
    Gadget(String),
    Certification(String),
    Pattern(String),
    Input(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::TooLarge { .. } => ErrorKind::Capability,
            Error::NoSolution => ErrorKind::NoSolution,
            Error::Certification(_) | Error::Gadget(_) => ErrorKind::Certification,
            _ => ErrorKind::Input,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::UnsupportedTrailLength(k) => {
                write!(f, "trail length {k} unsupported (expected 0, 2 or 4)")
            }
            Error::IdenticalPair(v) => write!(f, "pair query needs distinct vertices, got {v} twice"),
            Error::NotCubic { vertex, degree } => {
                write!(f, "graph is not cubic: vertex {vertex} has degree {degree}")
            }
            Error::NotC4Free => write!(f, "graph contains a 4-cycle"),
            Error::TooLarge { what, n, cap } => {
                write!(f, "{what} supports at most {cap} vertices, got {n}")
            }
            Error::NoSolution => write!(f, "no detector set of the requested level exists"),
            Error::Formula(msg) => write!(f, "invalid formula: {msg}"),
            Error::Gadget(msg) => write!(f, "gadget construction failed: {msg}"),
            Error::Certification(msg) => write!(f, "certification failed: {msg}"),
            Error::Pattern(msg) => write!(f, "invalid pattern: {msg}"),
            Error::Input(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
