use thiserror::Error;

/// Errors surfaced by the symbolic engine.
///
/// `ConjectureViolation` is deliberately separate from the other variants:
/// it signals that a computed decomposition falsifies one of the published
/// conjectures, which is a reportable discovery rather than a tool failure.
#[derive(Debug, Error)]
pub enum MolienError {
    /// Division by (1-t^2) ran out of cancellable leading terms (or exceeded
    /// the step budget) before the caller's stopping predicate held.
    #[error(
        "division by (1-t^2) stalled after {steps} steps without satisfying the stopping rule"
    )]
    DivisionStalled { steps: usize },

    /// The iterated-division algorithm could not produce an all-nonnegative
    /// presentation within the allowed denominator exponents.
    #[error("conjecture violation: {0}")]
    ConjectureViolation(String),

    /// A closed-form family was evaluated outside its recorded validity range.
    #[error("L={l} is outside the validity range [{min}, {max}] of family g{variant} for N={n}")]
    FamilyOutOfRange {
        n: u32,
        variant: u32,
        l: u32,
        min: u32,
        max: u32,
    },

    /// A fraction could not be re-expanded over the requested denominator.
    #[error("fraction cannot be presented over (1-t^2)^{requested}: {reason}")]
    NotPresentable { requested: u32, reason: String },

    /// Unknown irreducible representation label in a finite group query.
    #[error("unknown irrep label: {0}")]
    UnknownIrrep(String),

    /// A finite-group Molien sum did not reduce to the canonical
    /// (1-t)^a (1-t^2)^b denominator form.
    #[error("group average does not reduce to a canonical denominator: {0}")]
    NonCanonicalGroupAverage(String),

    /// Malformed group definition file.
    #[error("group file: {0}")]
    GroupFile(String),
}
