//! Exact symbolic algebra for the parabosonic algebra and its Hopf
//! structures, with a truncated Fock-space matrix oracle.

pub mod bosonization;
pub mod braided_hopf;
pub mod report;
pub mod representations;
pub mod rewriting;
pub mod sampling;
pub mod scalar;
pub mod tensor;
pub mod terms;

pub use rewriting::{AlgebraContext, AlgebraKind, RewriteError};
pub use scalar::{Coefficient, Scalar};
pub use tensor::{Braiding, Tensor, TensorElement, TripleTensor};
pub use terms::{parse_element, Element, Generator, Ladder, ParseError, Sign, Word};

/// Elements with exact Gaussian-rational coefficients.
pub type ExactElement = Element<Scalar>;
pub type ExactTensor = TensorElement<Scalar>;
