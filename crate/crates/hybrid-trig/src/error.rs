//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure mode of the pipeline, one variant per typed error.
///
/// [`Error::name`] returns the stable diagnostic name; the CLI maps each name
/// to a distinct exit code.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("trigonometric argument is not linear in a single parameter: {message}")]
    NonlinearTrigArgument { message: String },

    #[error("parameter used with clashing kinds: {message}")]
    KindClash { message: String },

    #[error("declared parameter t{index} never appears in the parametrization")]
    AbsentParameter { index: usize },

    #[error("invalid phase: {message}")]
    InvalidPhase { message: String },

    #[error("operands belong to different variable registries: {context}")]
    RegistryMismatch { context: String },

    #[error("substitution produced an identically zero denominator")]
    SubstitutionDenominatorVanishes,

    #[error("denominator vanishes at the evaluation point (|den| = {den_abs:e})")]
    PoleAtPoint { den_abs: f64 },

    #[error("operation does not support named-constant phases")]
    NamedConstantUnsupported,

    #[error(
        "pair-reduction budget exhausted after {reductions} reductions \
         (basis size {basis_size}, {pairs_pending} pairs pending)"
    )]
    ResourceBudgetExceeded {
        reductions: usize,
        basis_size: usize,
        pairs_pending: usize,
    },

    #[error("composed map is identically undefined on the torus")]
    IdenticallyUndefined,

    #[error("radius must be positive")]
    NonpositiveRadius,

    #[error("radius order violated: require r < R for hypocycloids, r <= R for epicycloids")]
    RadiusOrderViolated,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable diagnostic name of the error variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::NonlinearTrigArgument { .. } => "NonlinearTrigArgument",
            Error::KindClash { .. } => "KindClash",
            Error::AbsentParameter { .. } => "AbsentParameter",
            Error::InvalidPhase { .. } => "InvalidPhase",
            Error::RegistryMismatch { .. } => "RegistryMismatch",
            Error::SubstitutionDenominatorVanishes => "SubstitutionDenominatorVanishes",
            Error::PoleAtPoint { .. } => "PoleAtPoint",
            Error::NamedConstantUnsupported => "NamedConstantUnsupported",
            Error::ResourceBudgetExceeded { .. } => "ResourceBudgetExceeded",
            Error::IdenticallyUndefined => "IdenticallyUndefined",
            Error::NonpositiveRadius => "NonpositiveRadius",
            Error::RadiusOrderViolated => "RadiusOrderViolated",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
