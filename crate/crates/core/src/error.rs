use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable name, see [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("scalars from different fields")]
    FieldMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("enumeration cap exceeded after {0} elements")]
    CapExceeded(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("poset has no {0} element")]
    NotBounded(&'static str),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("not a subrepresentation: {0}")]
    NotASubrep(String),
    #[error("incompatible representations: {0}")]
    Incompatible(String),
    #[error("vertex set {0:?} is not closed under outgoing arrows")]
    NotSinking(Vec<usize>),
    #[error("non-thin representation over an infinite field: the lattice may be infinite")]
    InfiniteModeNonThin,
    #[error("the submodule lattice is infinite")]
    InfiniteLattice,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("validation failed: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier used in JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::FieldMismatch => "FieldMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::CapExceeded(_) => "CapExceeded",
            Error::Domain(_) => "DomainError",
            Error::NotComparable(..) => "NotComparable",
            Error::NotBounded(_) => "NotBounded",
            Error::InvalidPoset(_) => "InvalidPoset",
            Error::InvalidQuiver(_) => "InvalidQuiver",
            Error::InvalidRelation(_) => "InvalidRelation",
            Error::NotASubrep(_) => "NotASubrep",
            Error::Incompatible(_) => "Incompatible",
            Error::NotSinking(_) => "NotSinking",
            Error::InfiniteModeNonThin => "InfiniteModeNonThin",
            Error::InfiniteLattice => "InfiniteLattice",
            Error::NotApplicable(_) => "NotApplicable",
            Error::Syntax { .. } => "SyntaxError",
            Error::Validation(_) => "ValidationError",
            Error::Io(_) => "IoError",
        }
    }
}
