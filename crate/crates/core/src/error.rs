use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("division by a constant that vanishes in {0}")]
    DivisionByZero(String),
    #[error("polynomials live in different rings")]
    AmbientMismatch,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("polynomial is not bihomogeneous: {0}")]
    NotBihomogeneous(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("generator {0} lies in J (zero in the quotient)")]
    DegenerateGenerator(String),
    #[error("the ideal I is zero in A = S/J")]
    ZeroIdeal,
    #[error("J contains a linear form ({0}); pass allow_linear to proceed")]
    LinearGenerator(String),
    #[error("generator is not a squarefree monomial: {0}")]
    NotSquarefreeMonomial(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("J does not split along the variables of I")]
    NotSplit,
    #[error("I is not generated by variable images")]
    NotVariableGenerated,
    #[error("split witness is inconsistent with J")]
    InconsistentWitness,
    #[error("cohomology window too narrow: {0}")]
    WindowUnderflow(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
}

impl Error {
    /// True for errors raised by configured size limits rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::BoundExceeded(_) | Error::WindowUnderflow(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
