use std::fmt;

use num_bigint::BigUint;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The star product pairs monomials of one common degree.
    StarDegreeMismatch { left: u32, right: u32 },
    /// Two values were expected to share a degree (or variable count).
    DegreeMismatch { expected: u32, found: u32 },
    /// An operation required an ambient degree (or variable count) >= 1.
    PositiveDegreeRequired,
    /// `max_index` is undefined for the unit monomial.
    MaxIndexUndefined,
    /// A monomial or ideal text/JSON form could not be parsed.
    Parse(String),
    /// A generator mentions a variable outside the declared variable range.
    IndexOutOfRange { index: u32, vars: u32 },
    /// The operation requires a stable ideal.
    NotStable,
    /// The operation requires a strongly stable space or ideal.
    NotStronglyStable,
    /// The operation requires squarefree monomials.
    NotSquarefree(String),
    /// The operation requires an ideal generated in a single degree.
    NotSingleDegree,
    /// The given modulus is not prime.
    NotPrime(u64),
    /// A sequence failed the Macaulay growth condition at the given index.
    OsequenceViolated { index: usize },
    /// `w_1` exceeds the ambient degree cap.
    DegreeCapExceeded { w1: BigUint, degree: u32 },
    /// A requested segment size exceeds the number of available monomials.
    CountExceeded {
        index: usize,
        requested: BigUint,
        available: BigUint,
    },
    /// An enumeration would exceed the configured cap.
    EnumerationCap { required: BigUint, cap: u64 },
    /// A monomial ideal in `vars` variables misses a pure power of some
    /// variable, so its quotient is not finite.
    HeightDeficient { vars: u32 },
    /// A member's maximal variable index exceeds the allowed bound.
    MaxIndexBound { max_index: u32, bound: u32 },
    /// The ideal does not carry the basis convention the operation expects.
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::StarDegreeMismatch { left, right } => {
                write!(f, "star requires equal degrees: got {left} and {right}")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::PositiveDegreeRequired => write!(f, "ambient degree must be positive"),
            Error::MaxIndexUndefined => write!(f, "max_index undefined for the unit"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::IndexOutOfRange { index, vars } => {
                write!(
                    f,
                    "variable index {index} out of range for {vars} variables"
                )
            }
            Error::NotStable => write!(f, "Eliahou-Kervaire requires a stable ideal"),
            Error::NotStronglyStable => write!(f, "operation requires a strongly stable input"),
            Error::NotSquarefree(m) => write!(f, "monomial {m} is not squarefree"),
            Error::NotSingleDegree => {
                write!(
                    f,
                    "operation requires an ideal generated in a single degree"
                )
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::OsequenceViolated { index } => {
                write!(f, "not an O-sequence: violated at index {index}")
            }
            Error::DegreeCapExceeded { w1, degree } => {
                write!(f, "w_1={w1} exceeds the ambient degree {degree}")
            }
            Error::CountExceeded {
                index,
                requested,
                available,
            } => write!(
                f,
                "entry {index} requests {requested} monomials but only {available} exist"
            ),
            Error::EnumerationCap { required, cap } => {
                write!(
                    f,
                    "enumeration of size {required} exceeds the cap {cap}; use smaller parameters"
                )
            }
            Error::HeightDeficient { vars } => {
                write!(f, "ideal does not have height {vars}")
            }
            Error::MaxIndexBound { max_index, bound } => {
                write!(f, "member max index {max_index} exceeds the bound {bound}")
            }
            Error::BasisMismatch { expected, found } => {
                write!(f, "expected a {expected}-side ideal, found {found}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
