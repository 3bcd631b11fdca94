use thiserror::Error;

/// Errors surfaced by the exact-arithmetic pipelines.
///
/// Most operations in this crate are total; the fallible ones signal either a
/// misuse (dividing by a polynomial that is not an exact factor, squaring a
/// virtual class) or an internal cross-check that failed and should never
/// fail on a correct build.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Exact division left a nonzero remainder. For fiber-space quotients
    /// this means the claimed bundle structure does not hold.
    #[error("exact division left a remainder: ({num}) / ({den})")]
    DivisionNotExact { num: String, den: String },

    /// An operation that requires an honest (nonnegative) cohomology
    /// polynomial was given a virtual class with a negative coefficient.
    #[error("operand has a negative coefficient: {poly}")]
    NegativeInput { poly: String },

    /// A piecewise Betti-number branch disagreed with the coefficient of the
    /// closed-form polynomial. Indicates a transcription error in a branch.
    #[error("Betti branch mismatch at r={r}, j={j}: branch `{branch}` gave {got}, coefficient is {expected}")]
    BranchMismatch {
        r: u32,
        j: i64,
        branch: &'static str,
        got: u64,
        expected: u64,
    },

    /// Tree enumeration was asked for parameters outside the supported range.
    #[error("stable-tree enumeration supports n <= 4 and d <= 3, got (n={n}, d={d})")]
    BoundExceeded { n: u32, d: u32 },

    /// Two independent computation routes disagreed.
    #[error("internal consistency violation in {context}: {detail}")]
    Inconsistency {
        context: &'static str,
        detail: String,
    },
}
