use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("evaluation produced a non-finite value at x = {x}")]
    NonFinite { x: f64 },

    #[error("accuracy not reached: requested tol {tol:e}, best estimate {best:e} with error {err:e}")]
    Accuracy { tol: f64, best: f64, err: f64 },

    #[error("summation matrix has no row {n}")]
    MissingRow { n: usize },

    #[error("partial sum order {n} exceeds coefficient truncation {k}")]
    Truncation { n: usize, k: usize },

    #[error("psi weight vanishes at active harmonic k = {k}")]
    PsiZero { k: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("optimization failed: {0}")]
    Optimization(String),

    #[error("rank deficiency: {0}")]
    Rank(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
