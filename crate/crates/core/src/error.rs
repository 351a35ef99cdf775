use thiserror::Error;

/// Errors raised by the toolkit. Display strings are stable short tokens
/// so callers (and the CLI) can match on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bad-dims: {0}")]
    BadDims(String),
    #[error("not-normalized: norm {0}")]
    NotNormalized(f64),
    #[error("not-a-density: {0}")]
    NotADensity(String),
    #[error("not-unitary: {0}")]
    NotUnitary(String),
    #[error("bad-overlap: |gamma| = {0}")]
    BadOverlap(f64),
    #[error("bloch-norm: |u0| = {0}")]
    BlochNorm(f64),
    #[error("too-few-samples: {0} < 8")]
    TooFewSamples(usize),
    #[error("projector-asymmetry: {plus} vs {minus}")]
    ProjectorAsymmetry { plus: f64, minus: f64 },
    #[error("alpha-too-large: |alpha|^2 = {0}")]
    AlphaTooLarge(f64),
    #[error("no-root: {0}")]
    NoRoot(String),
    #[error("normalization-broken: {0}")]
    NormalizationBroken(String),
    #[error("out-of-range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
