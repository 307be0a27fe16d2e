use thiserror::Error;

use twistkit_core::diagram::DiagramError;
use twistkit_core::matrix::MatrixError;
use twistkit_core::product::ProductError;
use twistkit_core::semigroup::SemigroupError;
use twistkit_core::transform::TransformError;
use twistkit_core::twisting::TwistingError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or specs, or a request the inputs cannot support.
    #[error("{0}")]
    Usage(String),
    /// A size guard was hit.
    #[error("{0}")]
    Bound(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Bound(_) => 3,
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::TooLarge { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<TwistingError> for CliError {
    fn from(e: TwistingError) -> Self {
        match e {
            TwistingError::Diagram(d) => d.into(),
            TwistingError::Semigroup(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ProductError> for CliError {
    fn from(e: ProductError) -> Self {
        match e {
            ProductError::TooLarge { .. } => CliError::Bound(e.to_string()),
            ProductError::Semigroup(s) => s.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
