//! Structured diagnostics and the exit-code discipline:
//! 0 success, 1 input/validation error, 2 resource limit, 3 internal
//! invariant violation.

use grplane_core::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Code {
    IoError,
    JsonError,
    ShapeError,
    SyntaxError,
    UnknownVariable,
    DegreeMismatch,
    CommonZero,
    DependentSections,
    NonSpanningSections,
    NotGenerating,
    NotOnSecantMinusV,
    InvalidSecantLine,
    ResourceLimit,
    UnstableFiber,
    VerificationFailed,
    Internal,
}

impl Code {
    pub fn as_str(&self) -> &'static str {
        match self {
            Code::IoError => "IO_ERROR",
            Code::JsonError => "JSON_ERROR",
            Code::ShapeError => "SHAPE_ERROR",
            Code::SyntaxError => "SYNTAX_ERROR",
            Code::UnknownVariable => "UNKNOWN_VARIABLE",
            Code::DegreeMismatch => "DEGREE_MISMATCH",
            Code::CommonZero => "COMMON_ZERO",
            Code::DependentSections => "DEPENDENT_SECTIONS",
            Code::NonSpanningSections => "NON_SPANNING_SECTIONS",
            Code::NotGenerating => "NOT_GENERATING",
            Code::NotOnSecantMinusV => "NOT_ON_SECANT_MINUS_V",
            Code::InvalidSecantLine => "INVALID_SECANT_LINE",
            Code::ResourceLimit => "RESOURCE_LIMIT",
            Code::UnstableFiber => "UNSTABLE_FIBER",
            Code::VerificationFailed => "VERIFICATION_FAILED",
            Code::Internal => "INTERNAL",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Code::ResourceLimit | Code::UnstableFiber => 2,
            Code::Internal | Code::VerificationFailed => 3,
            _ => 1,
        }
    }

    pub fn from_core(e: &Error) -> Code {
        match e {
            Error::Parse { .. } => Code::SyntaxError,
            Error::UnknownVariable { .. } => Code::UnknownVariable,
            Error::RingMismatch | Error::ArityMismatch { .. } => Code::ShapeError,
            Error::DegreeMismatch { .. } | Error::Inhomogeneous { .. } | Error::ZeroInput => {
                Code::DegreeMismatch
            }
            Error::CommonZero { .. } => Code::CommonZero,
            Error::DependentSections => Code::DependentSections,
            Error::NonSpanningSections => Code::NonSpanningSections,
            Error::NotGenerating => Code::NotGenerating,
            Error::ConicRank { .. } => Code::NotOnSecantMinusV,
            Error::InvalidSecantLine(_) => Code::InvalidSecantLine,
            Error::ResourceLimit { .. } => Code::ResourceLimit,
            Error::UnstableFiber => Code::UnstableFiber,
            Error::DimensionMismatch { .. } | Error::Unsupported(_) => Code::ShapeError,
            Error::VerificationFailed { .. } => Code::VerificationFailed,
            Error::Internal(_) => Code::Internal,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: Code,
    pub message: String,
}

impl CliError {
    pub fn new(code: Code, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn from_core_error(e: Error) -> CliError {
        CliError {
            code: Code::from_core(&e),
            message: e.to_string(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.code.as_str(), self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::from_core_error(e)
    }
}
