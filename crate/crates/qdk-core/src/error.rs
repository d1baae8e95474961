use core::fmt;

/// Errors shared by every module in the crate.
///
/// Each variant corresponds to one machine-readable kind (see
/// [`Error::kind`]); the CLI maps kinds straight into its JSON error
/// envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic passed to a field constructor is not prime.
    NotPrime(u64),
    /// An enumeration or construction would exceed its cap.
    CapExceeded { what: &'static str, cap: u64 },
    /// Two elements belong to different fields.
    SpecMismatch,
    /// Inversion or division by zero.
    DivisionByZero,
    /// The requested subfield degree does not divide the extension degree.
    NotASubfield,
    /// gcd of two zero polynomials.
    BothZero,
    /// `gcd(n, q) != 1` where coprimality is required.
    NotCoprime { n: u64, q: u64 },
    /// Stirling index `k > n`.
    IndexOutOfRange,
    /// Two subspaces live in different ambient spaces.
    AmbientMismatch,
    /// A group element matrix is singular.
    NotInvertible,
    /// A 2x2 matrix was expected.
    WrongDimension,
    /// Matrix/subspace dimensions do not match.
    DimensionMismatch,
    /// A group operation requires an enumerated (closed) group.
    GroupNotClosed,
    /// The ambient space has dimension zero.
    EmptyAmbient,
    /// Splitting parameters with `r = 0` or `s = 0`.
    BadFactorization,
    /// A root-exponent set is not closed under multiplication by q.
    NotCosetClosed,
    /// Parameters outside an operation's documented range.
    BadParameters(&'static str),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::SpecMismatch => "SpecMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotASubfield => "NotASubfield",
            Error::BothZero => "BothZero",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::IndexOutOfRange => "IndexOutOfRange",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::WrongDimension => "WrongDimension",
            Error::DimensionMismatch => "DimensionMismatch",
            Error::GroupNotClosed => "GroupNotClosed",
            Error::EmptyAmbient => "EmptyAmbient",
            Error::BadFactorization => "BadFactorization",
            Error::NotCosetClosed => "NotCosetClosed",
            Error::BadParameters(_) => "BadParameters",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::CapExceeded { what, cap } => write!(f, "{what} exceeds cap {cap}"),
            Error::SpecMismatch => write!(f, "elements belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotASubfield => write!(f, "subfield degree does not divide extension degree"),
            Error::BothZero => write!(f, "gcd of two zero polynomials"),
            Error::NotCoprime { n, q } => write!(f, "n = {n} and q = {q} are not coprime"),
            Error::IndexOutOfRange => write!(f, "index out of range"),
            Error::AmbientMismatch => write!(f, "subspaces live in different ambient spaces"),
            Error::NotInvertible => write!(f, "matrix is not invertible"),
            Error::WrongDimension => write!(f, "expected a 2x2 matrix"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::GroupNotClosed => write!(f, "group has not been enumerated; run closure first"),
            Error::EmptyAmbient => write!(f, "ambient space has dimension zero"),
            Error::BadFactorization => write!(f, "splitting parameters must satisfy r >= 1, s >= 1"),
            Error::NotCosetClosed => {
                write!(f, "exponent set is not a union of cyclotomic cosets")
            }
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
