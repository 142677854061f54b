use core::fmt;

/// Errors raised by the deciders and their kernels.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A basis (or the input to orthonormalization) lost numerical rank.
    RankDeficient { expected: usize, found: usize },
    /// Operand shapes do not fit the operation.
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    /// Two tuples that must be compared have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Tuples live in different ambient dimensions where a common one is required.
    DimensionMismatch { left: usize, right: usize },
    /// Tuples over different scalar fields.
    FieldMismatch,
    /// Index outside `0..n`.
    IndexOutOfRange { index: usize, len: usize },
    /// A 2×2 block that must be invertible is numerically singular.
    Singular,
    /// Input to the SO(2) square root is not a rotation.
    NotSO2,
    /// Some cross Gramian between two planes is singular.
    NotNowhereOrthogonal { pair: (usize, usize) },
    /// The first line is orthogonal to line `index`, so the normalized Gramian is undefined.
    StarConditionViolated { index: usize },
    /// `a_i^*` is not `a_{pi(i)}` for the given involution.
    StarClosureViolated { index: usize },
    /// Diagonal blocks of a Gramian are not the identity.
    InvalidGramian,
    /// The GL decision procedure needs a trivially stabilized first tuple.
    PreconditionFailed(&'static str),
    /// The chosen method does not apply to these tuples.
    MethodNotApplicable(&'static str),
    /// Graph reductions need at least one edge.
    EmptyGraph,
    /// The GL reduction needs a regular graph.
    NotRegular,
    /// The adversarial line family needs `d >= 3`.
    DimensionTooSmall { min: usize, found: usize },
    /// Brute-force permutation search is capped.
    TooLarge { n: usize, max: usize },
    /// Malformed argument not covered by the variants above.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankDeficient { expected, found } => {
                write!(f, "rank deficient: expected rank {expected}, found {found}")
            }
            Error::ShapeMismatch { expected, found } => {
                write!(f, "shape mismatch: expected {}x{}, found {}x{}", expected.0, expected.1, found.0, found.1)
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "tuple lengths differ ({left} vs {right})")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "ambient dimensions differ ({left} vs {right})")
            }
            Error::FieldMismatch => write!(f, "tuples are over different fields"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::Singular => write!(f, "matrix is numerically singular"),
            Error::NotSO2 => write!(f, "matrix is not a rotation"),
            Error::NotNowhereOrthogonal { pair } => {
                write!(f, "subspaces {} and {} are not nowhere orthogonal", pair.0 + 1, pair.1 + 1)
            }
            Error::StarConditionViolated { index } => {
                write!(f, "line 1 is orthogonal to line {}; normalized Gramian undefined", index + 1)
            }
            Error::StarClosureViolated { index } => {
                write!(f, "generator {} is not closed under adjoint for the given involution", index + 1)
            }
            Error::InvalidGramian => write!(f, "diagonal Gramian blocks are not the identity"),
            Error::PreconditionFailed(why) => write!(f, "precondition failed: {why}"),
            Error::MethodNotApplicable(why) => write!(f, "method not applicable: {why}"),
            Error::EmptyGraph => write!(f, "graph has no edges"),
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::DimensionTooSmall { min, found } => {
                write!(f, "dimension {found} too small (need at least {min})")
            }
            Error::TooLarge { n, max } => {
                write!(f, "brute-force search over S_{n} refused (cap is n = {max})")
            }
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
