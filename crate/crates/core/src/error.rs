use thiserror::Error;

/// Errors raised by decoration construction and the link operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("codimension must be at least 2, got {0}")]
    CodimTooSmall(u32),
    #[error("negative part {0} in partition input")]
    NegativePart(i64),
    #[error("sum identity violated: |lambda| = {lambda_sum} but (c-1)|mu|+1 = {expected}")]
    SumIdentityViolated { lambda_sum: u64, expected: u64 },
    #[error("decorations have different codimensions ({0} vs {1})")]
    CodimMismatch(u32, u32),
    #[error("invalid link choice: {0}")]
    InvalidChoice(String),
    #[error("link would produce a negative part ({0})")]
    NegativePartProduced(i64),
    #[error("decoration has fewer than c positive parts in lambda")]
    TooFewParts,
    #[error("operation requires codimension {expected}, got {got}")]
    WrongCodim { expected: u32, got: u32 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unknown diagram vertex index {0}")]
    UnknownVertex(usize),
    #[error("weight is not dominant away from z1 (negative coefficient at vertex {0})")]
    NotCosetDominant(usize),
    #[error("orbit search touched the truncated arm boundary; enlarge the arms and retry")]
    ArmTooShort,
    #[error("reflection budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("enumeration exceeded its resource cap ({0} vertices)")]
    BudgetOverflow(usize),
    #[error("format {0:?} is not Dynkin; supply an explicit level cap")]
    NeedsKCap((usize, usize)),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
