pub mod check;
pub mod coideal;
pub mod error;
pub mod eval;
pub mod expr;
pub mod hecke;
pub mod scalar;
pub mod schur;
pub mod suite;
pub mod tensor;
pub mod weyl;

pub use coideal::Variant;
pub use error::{Error, Result};
pub use hecke::{HeckeAlgebra, HeckeElt};
pub use scalar::{Params, Scalar, Specialization};
pub use tensor::{TensorModule, TensorVec};
pub use weyl::WeylElt;
