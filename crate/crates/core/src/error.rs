use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Configuration length differs from the number of variables.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// `values[index]` lies outside `0..bound`.
    DomainViolation {
        index: usize,
        value: usize,
        bound: usize,
    },
    /// An enumeration or search exceeded its configured limit.
    BudgetExceeded {
        what: &'static str,
        limit: u64,
    },
    /// The instance has no feasible configuration.
    Infeasible,
    /// Instance data violates the invariants of its problem type.
    InvalidInstance(String),
    /// Operation requires a different aggregation kind.
    KindMismatch {
        expected: &'static str,
        found: String,
    },
    UnknownVariable(String),
    UnboundVariable(String),
    Parse(String),
    UnknownProblem(String),
    DuplicateRegistration(String),
    InvalidRegistration(String),
    DuplicateRule(String),
    TypeMismatch {
        expected: String,
        found: String,
    },
    NotWitnessCapable(String),
    NoValueMap(String),
    NoExample {
        name: String,
        available: Vec<String>,
    },
    /// A step of a chained reduction failed.
    Step {
        index: usize,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "configuration has {found} values, expected {expected}")
            }
            Error::DomainViolation { index, value, bound } => {
                write!(f, "value {value} at position {index} is outside 0..{bound}")
            }
            Error::BudgetExceeded { what, limit } => write!(f, "{what} limit of {limit} exceeded"),
            Error::Infeasible => f.write_str("instance has no feasible solution"),
            Error::InvalidInstance(msg) => write!(f, "invalid instance: {msg}"),
            Error::KindMismatch { expected, found } => {
                write!(f, "expected a {expected} problem, found {found}")
            }
            Error::UnknownVariable(name) => write!(f, "unknown size measure `{name}`"),
            Error::UnboundVariable(name) => write!(f, "variable `{name}` has no binding"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::UnknownProblem(name) => write!(f, "unknown problem `{name}`"),
            Error::DuplicateRegistration(name) => write!(f, "`{name}` is already registered"),
            Error::InvalidRegistration(msg) => write!(f, "invalid registration: {msg}"),
            Error::DuplicateRule(name) => write!(f, "duplicate reduction rule `{name}`"),
            Error::TypeMismatch { expected, found } => {
                write!(f, "expected an instance of {expected}, found {found}")
            }
            Error::NotWitnessCapable(rule) => {
                write!(f, "rule `{rule}` cannot map configurations back")
            }
            Error::NoValueMap(rule) => write!(f, "rule `{rule}` carries no value map"),
            Error::NoExample { name, available } => {
                write!(f, "no canonical example for `{name}`; available: {}", available.join(", "))
            }
            Error::Step { index, source } => write!(f, "reduction step {index} failed: {source}"),
        }
    }
}

impl core::error::Error for Error {}
