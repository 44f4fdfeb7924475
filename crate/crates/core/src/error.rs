use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("the zero exponent generates the unit ideal")]
    UnitIdeal,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension {dim} exceeds the supported bound {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("the zero polynomial has no finite order")]
    ZeroPolynomial,
    #[error("ideal is not primary for the maximal ideal")]
    NotPrimary,
    #[error("ideal is not contained in the radical of the reference ideal")]
    ContainmentViolated,
    #[error("no dependence relation found with m <= {m_max}")]
    NotFound { m_max: u32 },
    #[error("element is not integral over the requested power")]
    NotIntegral,
    #[error("a monomial was expected")]
    NotMonomial,
    #[error("arc weights must be positive")]
    NonPositiveWeight,
    #[error("arc components carry different truncations")]
    TruncationMismatch,
    #[error("truncation {truncation} is too small: every term has order at least {bound}")]
    TruncationTooSmall { truncation: u32, bound: u64 },
    #[error("order is only known up to the truncation")]
    IndeterminateOrder,
    #[error("no centered monomial arc realizes the certificate valuation")]
    NoCenteredArc,
    #[error("polygon extraction needs exactly two variables, got {dim}")]
    PolygonUnsupportedDimension { dim: usize },
    #[error("polygon has no compact side")]
    NoCompactSide,
    #[error("invalid elementary polygon")]
    InvalidPolygon,
    #[error("invalid characteristic sequence: {0}")]
    InvalidCharSequence(String),
    #[error("smooth branch has no double-point polygon")]
    SmoothBranch,
    #[error("exponent {0} is below 2")]
    InvalidExponent(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Stable machine-readable code, used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGeneratorSet => "EmptyGeneratorSet",
            Error::UnitIdeal => "UnitIdeal",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DimensionTooLarge { .. } => "DimensionTooLarge",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotPrimary => "NotPrimary",
            Error::ContainmentViolated => "ContainmentViolated",
            Error::NotFound { .. } => "NotFound",
            Error::NotIntegral => "NotIntegral",
            Error::NotMonomial => "NotMonomial",
            Error::NonPositiveWeight => "NonPositiveWeight",
            Error::TruncationMismatch => "TruncationMismatch",
            Error::TruncationTooSmall { .. } => "TruncationTooSmall",
            Error::IndeterminateOrder => "IndeterminateOrder",
            Error::NoCenteredArc => "NoCenteredArc",
            Error::PolygonUnsupportedDimension { .. } => "PolygonUnsupportedDimension",
            Error::NoCompactSide => "NoCompactSide",
            Error::InvalidPolygon => "InvalidPolygon",
            Error::InvalidCharSequence(_) => "InvalidCharSequence",
            Error::SmoothBranch => "SmoothBranch",
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
