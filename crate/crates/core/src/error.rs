use crate::hopf::StructureReport;
use crate::scalar::{FieldSpec, ScalarError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operator is not invertible")]
    NotInvertible,
    #[error("integral space has dimension {0}, expected 1")]
    IntegralSpaceNotOneDimensional(usize),
    #[error("algebra has no R-matrix")]
    MissingRMatrix,
    #[error("algebra has no ribbon element")]
    MissingRibbon,
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("left and right actions do not commute")]
    ActionsDoNotCommute,
    #[error("the relative-center model needs genus at least 1")]
    ModelRequiresPositiveGenus,
    #[error("handle {handle} out of range for genus {genus}")]
    HandleOutOfRange { handle: usize, genus: usize },
    #[error("theorem requires a factorizable ribbon Hopf algebra")]
    FactorizableRequired,
    #[error("ribbon element has infinite order")]
    InfiniteRibbonOrder,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("no ribbon element found")]
    NoRibbonFound,
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation failed: {}", .0.failures_summary())]
    ValidationFailed(Box<StructureReport>),
    #[error("post-check failed: {0}")]
    PostCheckFailed(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code, printed by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Scalar(ScalarError::DivisionByZero) => "DivisionByZero",
            Error::Scalar(ScalarError::FieldMismatch(..)) | Error::FieldMismatch(..) => "FieldMismatch",
            Error::Scalar(ScalarError::InvalidField(_)) => "InvalidField",
            Error::Scalar(ScalarError::Parse(_)) | Error::Parse { .. } => "ParseError",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::IntegralSpaceNotOneDimensional(_) => "IntegralSpaceNotOneDimensional",
            Error::MissingRMatrix => "MissingRMatrix",
            Error::MissingRibbon => "MissingRibbon",
            Error::AntipodeNotInvertible => "AntipodeNotInvertible",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::ActionsDoNotCommute => "ActionsDoNotCommute",
            Error::ModelRequiresPositiveGenus => "ModelRequiresPositiveGenus",
            Error::HandleOutOfRange { .. } => "HandleOutOfRange",
            Error::FactorizableRequired => "FactorizableRequired",
            Error::InfiniteRibbonOrder => "InfiniteRibbonOrder",
            Error::NotAGroup(_) => "NotAGroup",
            Error::NoRibbonFound => "NoRibbonFound",
            Error::ValidationFailed(_) => "ValidationFailed",
            Error::PostCheckFailed(_) => "PostCheckFailed",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::Io(_) => "IoError",
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
