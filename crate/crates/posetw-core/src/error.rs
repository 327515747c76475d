use core::fmt;

/// Errors for precondition violations and guard refusals.
///
/// `InvariantViolation` is reserved for situations that would contradict a
/// proved statement (e.g. a fully compressed family matching none of the
/// known fixed-point classes); it is surfaced loudly instead of being
/// classified silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground-set size outside `1..=32`.
    GroundSize(u32),
    /// Two arguments live on different ground sizes.
    MismatchedGround(u32, u32),
    /// A mask has bits at or above position `n`.
    BitsOutOfRange { bits: u32, n: u32 },
    /// A rank or segment size outside `0..=2^n`.
    RankOutOfRange { rank: u64, n: u32 },
    /// An element outside `1..=n`.
    ElementOutOfRange { element: u32, n: u32 },
    /// The given set is not a member of the family.
    NotAMember,
    /// The operation requires a convex family.
    NotConvex,
    /// The operation requires a downset.
    NotADownset,
    /// Inserting a set that is already present.
    AlreadyMember,
    /// A family of `r`-sets was expected but cardinalities differ.
    MixedCardinalities,
    /// A nonempty family of `r`-sets with `r >= 1` was expected.
    EmptyGenerators,
    /// The requested construction does not fit in a 32-element ground set.
    GroundOverflow { needed: u32 },
    /// An enumeration guard was exceeded; pass `force` to override.
    SearchGuardExceeded { estimate: u128, limit: u128 },
    /// Exhaustive enumeration is only supported up to the stated bound.
    EnumerationGuard { n: u32, max: u32 },
    /// `classify_fixed_point` called on a family that is not i-compressed
    /// for all i.
    NotFullyCompressed,
    /// Unknown statement identifier for a verifier.
    UnknownStatement,
    /// Text that does not parse as a subset.
    ParseSet,
    /// A contradiction with a proved statement.
    InvariantViolation(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundSize(n) => write!(f, "ground size {n} outside 1..=32"),
            Error::MismatchedGround(a, b) => write!(f, "mismatched ground sizes {a} and {b}"),
            Error::BitsOutOfRange { bits, n } => {
                write!(f, "mask {bits:#x} has bits above position {n}")
            }
            Error::RankOutOfRange { rank, n } => write!(f, "rank {rank} out of range for n={n}"),
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} outside 1..={n}")
            }
            Error::NotAMember => write!(f, "set is not a member of the family"),
            Error::NotConvex => write!(f, "family is not convex"),
            Error::NotADownset => write!(f, "family is not a downset"),
            Error::AlreadyMember => write!(f, "set is already a member of the family"),
            Error::MixedCardinalities => write!(f, "members do not all have the same cardinality"),
            Error::EmptyGenerators => write!(f, "expected a nonempty family of r-sets"),
            Error::GroundOverflow { needed } => {
                write!(f, "construction needs ground size {needed} > 32")
            }
            Error::SearchGuardExceeded { estimate, limit } => write!(
                f,
                "search space estimate {estimate} exceeds guard {limit}; use force to override"
            ),
            Error::EnumerationGuard { n, max } => {
                write!(f, "exhaustive enumeration refused for n={n} (max {max})")
            }
            Error::NotFullyCompressed => write!(f, "family is not i-compressed for every i"),
            Error::UnknownStatement => write!(f, "unknown statement identifier"),
            Error::ParseSet => write!(f, "cannot parse subset text"),
            Error::InvariantViolation(what) => write!(f, "invariant violation: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
