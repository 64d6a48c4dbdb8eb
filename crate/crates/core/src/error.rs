use alloc::string::String;
use core::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A cyclotomic conductor of zero (or one too large to represent).
    InvalidConductor(u64),
    /// Division by the zero element.
    DivByZero,
    /// Binary operation on values from different cyclotomic fields.
    ConductorMismatch {
        /// Conductor of the left operand.
        left: u32,
        /// Conductor of the right operand.
        right: u32,
    },
    /// Embedding into a field whose conductor is not a multiple.
    Embed {
        /// Source conductor.
        from: u32,
        /// Requested target conductor.
        to: u32,
    },
    /// A cyclotomic literal failed to parse.
    Literal {
        /// Byte offset into the literal.
        position: usize,
        /// What went wrong.
        message: String,
    },
    /// Matrices or polynomials of incompatible shapes.
    Shape(String),
    /// Group closure exceeded the element cap.
    NotFiniteOrCapTooSmall {
        /// The cap that was hit.
        cap: usize,
    },
    /// A generator with zero determinant.
    SingularGenerator {
        /// Position in the generator list.
        index: usize,
    },
    /// Element order search exceeded its cap.
    OrderOverflow {
        /// The cap that was hit.
        cap: usize,
    },
    /// An exact computation produced a value that violates a mathematical
    /// invariant (a non-integer multiplicity, a basis that does not split).
    InternalArithmetic(String),
    /// Explicit polynomial bases would exceed the configured work bound.
    DegreeTooLarge {
        /// Requested degree.
        degree: usize,
        /// Estimated elementary products.
        work: u128,
        /// The configured bound.
        bound: u128,
    },
    /// The group contains pseudo-reflections.
    ReflectionsPresent,
    /// The operation needs a nontrivial group.
    TrivialGroup,
    /// Unknown catalog entry name.
    NoSuchEntry(String),
    /// A catalog group could not be assembled as described.
    CatalogConstruction(String),
}

impl Error {
    /// Stable kebab-case identifier, used by the CLI in machine-readable
    /// error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidConductor(_) => "invalid-conductor",
            Error::DivByZero => "div-by-zero",
            Error::ConductorMismatch { .. } => "conductor-mismatch",
            Error::Embed { .. } => "embed-error",
            Error::Literal { .. } => "literal-error",
            Error::Shape(_) => "shape-error",
            Error::NotFiniteOrCapTooSmall { .. } => "not-finite-or-cap-too-small",
            Error::SingularGenerator { .. } => "singular-generator",
            Error::OrderOverflow { .. } => "order-overflow",
            Error::InternalArithmetic(_) => "internal-arithmetic-error",
            Error::DegreeTooLarge { .. } => "degree-too-large",
            Error::ReflectionsPresent => "reflections-present",
            Error::TrivialGroup => "trivial-group",
            Error::NoSuchEntry(_) => "no-such-entry",
            Error::CatalogConstruction(_) => "catalog-construction-error",
        }
    }

    /// True for failures caused by resource caps rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::NotFiniteOrCapTooSmall { .. }
                | Error::OrderOverflow { .. }
                | Error::DegreeTooLarge { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConductor(n) => write!(f, "invalid conductor {n}"),
            Error::DivByZero => f.write_str("division by zero"),
            Error::ConductorMismatch { left, right } => {
                write!(f, "conductor mismatch: {left} vs {right}")
            }
            Error::Embed { from, to } => {
                write!(f, "cannot embed conductor {from} into conductor {to}")
            }
            Error::Literal { position, message } => {
                write!(f, "bad cyclotomic literal at column {}: {message}", position + 1)
            }
            Error::Shape(msg) => write!(f, "shape error: {msg}"),
            Error::NotFiniteOrCapTooSmall { cap } => {
                write!(f, "group closure exceeded {cap} elements (infinite group or cap too small)")
            }
            Error::SingularGenerator { index } => write!(f, "generator {index} is singular"),
            Error::OrderOverflow { cap } => write!(f, "element order exceeds {cap}"),
            Error::InternalArithmetic(msg) => write!(f, "internal arithmetic error: {msg}"),
            Error::DegreeTooLarge { degree, work, bound } => write!(
                f,
                "degree {degree} needs about {work} products, above the work bound {bound}"
            ),
            Error::ReflectionsPresent => f.write_str("group contains reflections"),
            Error::TrivialGroup => f.write_str("group is trivial"),
            Error::NoSuchEntry(name) => write!(f, "no catalog entry named `{name}`"),
            Error::CatalogConstruction(msg) => write!(f, "catalog construction failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
