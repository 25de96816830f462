//! Error type shared by every module of the crate.

/// Crate-wide error enum. Exit-code mapping for the CLI lives in `trl-cli`:
/// invariant violations map to 1, invalid input to 2, budget refusals to 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("enumeration budget exceeded: needs {required_bits} bits, budget is {budget_bits} (set TRL_BUDGET_BITS or --budget)")]
    BudgetExceeded { required_bits: u32, budget_bits: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed at stage `{stage}`: {detail}")]
    ConstructionFailure { stage: String, detail: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
