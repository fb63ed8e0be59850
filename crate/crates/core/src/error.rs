use thiserror::Error;

/// Everything that can go wrong in the toolkit.
///
/// The variants are grouped by how a caller should react: malformed input
/// (`Parse`), a mathematically invalid request (most variants), and a broken
/// internal invariant (`Invariant`), which always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclotomic order {order} exceeds the configured cap {cap} (set REALFORMS_MAX_ORDER to raise it)")]
    OrderTooLarge { order: u64, cap: u32 },

    #[error("coefficient {0} is not rational")]
    NotRational(String),

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooSmall { found: usize, required: usize },

    #[error("ambient polynomial is not real")]
    NotReal,

    #[error("ambient polynomial is not in reduced form")]
    NotReduced,

    #[error("element is not in the group: {0}")]
    NotInGroup(String),

    #[error("element is not a 1-cocycle")]
    NotACocycle,

    #[error("matrix is not an involution")]
    NotAnInvolution,

    #[error("value is not representable in the cyclotomic tower: {0}")]
    NotRepresentable(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
