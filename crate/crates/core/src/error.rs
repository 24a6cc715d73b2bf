use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero: division by the zero scalar")]
    DivisionByZero,
    #[error("NotInvertible: {0}")]
    NotInvertible(String),
    #[error("NotInSubalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("NotClassifiable: {0}")]
    NotClassifiable(String),
    #[error("NotAutomorphism: center exponent {center_exponent}")]
    NotAutomorphism { center_exponent: i64 },
    #[error("NotADerivation: {0}")]
    NotADerivation(String),
    #[error("InternalError: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
