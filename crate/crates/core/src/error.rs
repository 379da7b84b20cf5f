use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("r must be odd ≥ 3 (got {0})")]
    InvalidOrder(u32),
    #[error("quantum factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("expected {expected} coefficients, found {found}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
}

/// Position in diagram source text (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("syntax error at {span}: {message}")]
    Syntax { span: Span, message: String },
    #[error("boundary mismatch at {span}: slice outputs [{below}] but next slice expects [{above}]")]
    BoundaryMismatch { span: Span, below: String, above: String },
    #[error("red strand not allowed in coupon {0}")]
    RedInCoupon(String),
    #[error("unknown coupon {0}")]
    UnknownCoupon(String),
    #[error("invalid coupon {name}: {message}")]
    InvalidCoupon { name: String, message: String },
    #[error("label out of range: {0}")]
    LabelOutOfRange(String),
    #[error("module index {index} out of range for r={r}")]
    ModuleIndex { index: u32, r: u32 },
    #[error("diagram is not closed")]
    OpenDiagram,
    #[error("red strands are not allowed here")]
    UnexpectedRed,
    #[error("inadmissible cut: {0}")]
    InadmissibleCut(String),
    #[error("inadmissible graph: no projective label")]
    InadmissibleGraph,
    #[error("representation is not projective")]
    NotProjective,
    #[error("decomposition did not exhaust the module ({0} dimensions left)")]
    Decomposition(usize),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
