use thiserror::Error;

/// Every domain error the library can produce. Each variant carries its
/// witness data and maps to a stable machine-readable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry at ({x},{y}) is {value}, outside 0..{size}")]
    OutOfRangeEntry { x: usize, y: usize, value: usize, size: usize },

    #[error("idempotence fails at {x}: table[{x}][{x}] != {x}")]
    IdempotenceViolation { x: usize },

    #[error("column {y} is not a bijection")]
    ColumnNotBijective { y: usize },

    #[error("self-distributivity fails at ({x},{y},{z})")]
    DistributivityViolation { x: usize, y: usize, z: usize },

    #[error("element {value} out of range for quandle of size {size}")]
    OutOfRange { value: usize, size: usize },

    #[error("quandle must have at least one element")]
    EmptyQuandle,

    #[error("{what} of size {size} exceeds cap {cap}")]
    SizeCapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("expected {expected} basepoints, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("tuple lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("in the recursion d(m,n,k), m = {m} exceeds k = {k}")]
    FixedEntriesExceedDomain { m: u64, k: u64 },

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("crossing {id} appears {count} time(s), expected exactly 2")]
    CrossingParity { id: String, count: usize },

    #[error("crossing {id} does not appear once over and once under")]
    RoleConflict { id: String },

    #[error("the two passages of crossing {id} carry different signs")]
    SignConflict { id: String },

    #[error("component {index} is not open")]
    NotOpenComponent { index: usize },

    #[error("no arc named {id}")]
    UnknownArc { id: String },

    #[error("position {pos} is not a valid gap (component has {len} passages)")]
    InvalidPosition { pos: usize, len: usize },

    #[error("generator {gen} is not declared in the presentation")]
    UnknownGenerator { gen: String },

    #[error("word references unassigned generator {gen}")]
    UnassignedGenerator { gen: String },

    #[error("pinned generator {gen} is not in the presentation")]
    UnknownPinnedGenerator { gen: String },

    #[error("pin {gen} -> {value} is outside the target quandle of size {size}")]
    PinOutOfRange { gen: String, value: usize, size: usize },
}

impl Error {
    /// Stable machine-readable code, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OutOfRangeEntry { .. } => "out_of_range_entry",
            Error::IdempotenceViolation { .. } => "idempotence_violation",
            Error::ColumnNotBijective { .. } => "column_not_bijective",
            Error::DistributivityViolation { .. } => "distributivity_violation",
            Error::OutOfRange { .. } => "out_of_range",
            Error::EmptyQuandle => "empty_quandle",
            Error::SizeCapExceeded { .. } => "size_cap_exceeded",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::FixedEntriesExceedDomain { .. } => "fixed_entries_exceed_domain",
            Error::Syntax { .. } => "syntax_error",
            Error::CrossingParity { .. } => "crossing_parity",
            Error::RoleConflict { .. } => "role_conflict",
            Error::SignConflict { .. } => "sign_conflict",
            Error::NotOpenComponent { .. } => "not_open_component",
            Error::UnknownArc { .. } => "unknown_arc",
            Error::InvalidPosition { .. } => "invalid_position",
            Error::UnknownGenerator { .. } => "unknown_generator",
            Error::UnassignedGenerator { .. } => "unassigned_generator",
            Error::UnknownPinnedGenerator { .. } => "unknown_pinned_generator",
            Error::PinOutOfRange { .. } => "pin_out_of_range",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
