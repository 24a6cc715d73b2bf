pub mod derivation;
pub mod error;
pub mod linalg;
pub mod morphism;
pub mod pbw;
pub mod sample;
pub mod scalar;
pub mod torus;

pub use error::{Error, Result};
pub use pbw::{BasisWord, DownUp, Element};
pub use scalar::{Case, Param, Scalar};
