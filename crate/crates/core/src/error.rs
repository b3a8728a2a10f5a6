use thiserror::Error;

/// Errors shared by every module in this crate.
///
/// All arithmetic on counts is checked; overflow is reported, never wrapped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input sequence is too short for the requested operation.
    #[error("input needs at least {required} entries, got {actual}")]
    Size { required: usize, actual: usize },

    /// A shift would push a multiset entry below zero.
    #[error("shifting part {part} by {shift} gives a negative entry")]
    NegativePart { part: u64, shift: i64 },

    /// A query or argument combination is malformed.
    #[error("invalid parameters: {0}")]
    Param(String),

    /// A map was applied outside its stated domain.
    #[error("domain precondition failed: {0}")]
    Domain(String),

    /// Checked 64-bit arithmetic overflowed.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
