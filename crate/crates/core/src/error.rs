use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter #{0} is not part of the alphabet")]
    ForeignVariable(usize),

    #[error("variable `{0}` has no adjoint partner")]
    NoAdjoint(String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("letter `{0}` labels no edge of the quiver")]
    UnlabelledLetter(String),

    #[error("generator index {index} out of range ({len} generators)")]
    GeneratorIndex { index: usize, len: usize },

    #[error("degree bound {bound} is below the degree {degree} of the target")]
    DegreeTooSmall { bound: usize, degree: usize },

    #[error("input is not a reduced Groebner basis: {0}")]
    NotReduced(String),

    #[error("variable `{0}` has no row in the grading matrix")]
    Ungraded(String),

    #[error("grading matrix: {0}")]
    Grading(String),

    #[error("split hypothesis violated by `{0}`")]
    SplitHypothesis(String),

    #[error("unsupported (open problem): {0}")]
    Unsupported(String),

    #[error("invalid order: {0}")]
    Order(String),

    #[error("{line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("{0}")]
    Input(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
