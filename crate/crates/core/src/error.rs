use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("smooth point")]
    SmoothPoint,
    #[error("curve is not reduced (repeated component through the point)")]
    NonReduced,
    #[error("truncation cap of t-order {cap} exceeded while separating {detail}")]
    TruncationCap { cap: u64, detail: String },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("representative construction failed: {0}")]
    Construction(String),
    #[error("catalog data: {0}")]
    Catalog(String),
}
