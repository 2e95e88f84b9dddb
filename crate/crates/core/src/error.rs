use thiserror::Error;

/// Errors raised by the symbolic and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the empty word has no Lyndon structure")]
    EmptyWord,

    #[error("configuration error: {0}")]
    InvalidConfig(String),

    #[error("letter x({0}) is not a point of the configuration")]
    UnknownLetter(String),

    #[error("Mobius map is degenerate (ps - qr = 0)")]
    DegenerateMap,

    #[error("map is not a symmetry: {0} is sent outside the singular set")]
    NotASymmetry(String),

    #[error("map does not exchange a and b")]
    NotASwap,

    #[error("map is not an involution")]
    NotInvolutive,

    #[error("word {0} does not lie in A^b")]
    NotInAb(String),

    #[error("word {0} does not lie in A^ab")]
    NotInAab(String),

    #[error("a is not a nearest point to b")]
    NotNearest,

    #[error("a and b are not mutually nearest points")]
    NotMutuallyNearest,

    #[error("evaluation point lies outside the convergence disk: {0}")]
    OutOfDisk(String),

    #[error("series does not converge: {0}")]
    NotConvergent(String),

    #[error("Divergent: {0}")]
    Divergent(String),

    #[error("tail estimate {estimate:e} exceeds tolerance {tol:e} at truncation {truncation}")]
    TailTooLarge {
        estimate: f64,
        tol: f64,
        truncation: u64,
    },

    #[error("modulus {0} is not supported (only 1, 2, 4 have exact Gaussian roots of unity)")]
    UnsupportedModulus(u32),

    #[error("precision error: {0}")]
    Precision(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
