use thiserror::Error;

/// Errors shared across the whole crate.
///
/// Precondition violations that a caller could reasonably hit are reported
/// through this type; internal arithmetic invariants use assertions instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid curve exponents (a, b) = ({a}, {b}); both must be at least 2")]
    InvalidCurve { a: u32, b: u32 },

    #[error("Hurwitz numbers are indexed by positive multiples of 4, got {0}")]
    HurwitzIndex(u64),

    #[error("index must be even and at least 2, got {0}")]
    EvenIndexRequired(u64),

    #[error("index must be odd and at least 3, got {0}")]
    OddIndexRequired(u64),

    #[error("Kummer precondition violated: {0}")]
    KummerPrecondition(String),

    #[error("no assignment for variable c{0}")]
    MissingAssignment(u32),

    #[error("composition requires the inner series to have zero constant term, got {0}")]
    ComposeConstantTerm(String),

    #[error("reversion requires zero constant term, got {0} at t^0")]
    RevertConstantTerm(String),

    #[error("reversion requires leading coefficient 1, got {0} at t^1")]
    RevertLeadingCoefficient(String),

    #[error("coefficient {requested} requested from a series of truncation order {order}")]
    PrecisionExceeded { requested: usize, order: usize },

    #[error("shift by t^-{shift} hits a nonzero coefficient at t^{index}")]
    InexactShift { shift: usize, index: usize },

    #[error("constant term {0} is not invertible in the coefficient ring")]
    NotInvertible(String),

    #[error("prime factor {0} does not fit in 64 bits")]
    PrimeOverflow(String),

    #[error("cannot parse {0:?} as a rational")]
    ParseRat(String),

    #[error("invalid template: {0}")]
    Template(String),

    #[error("{0}")]
    InvalidRequest(String),
}
