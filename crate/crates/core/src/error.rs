use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),
    #[error("cell ({row},{col}) not in partition")]
    CellNotInPartition { row: usize, col: usize },
    #[error("incomparable weights: {0} != {1}")]
    IncomparableWeights(usize, usize),
    #[error("negative argument: {0}")]
    Negative(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bivariate: rational function still depends on t")]
    Bivariate,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("mixed families in a single-family inner product")]
    MixedFamilies,
    #[error("L-family content present; project first")]
    ProjectFirst,
    #[error("M-family content present where only L-families are allowed")]
    UnexpectedMFamily,
    #[error("not a vertical strip: {0} / {1}")]
    NotVerticalStrip(String, String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("transvection needs n>=2")]
    TransvectionTooSmall,
    #[error("unsupported basis conversion: {0}")]
    UnsupportedBasis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
