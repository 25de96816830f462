//! Exact computation of bias, analytic rank, partition rank, Gowers norms
//! and the associated additive-combinatorial machinery for tensors and
//! polynomials over prime fields, at desk scale.
//!
//! Everything here is exact: biases are integer kernel counts over the
//! enumeration denominator, rank inequalities are checked in integer
//! arithmetic, and every search result carries a certificate that is
//! re-verified by summation. Exhaustive sweeps are guarded by a configurable
//! [`Budget`] (default 2^24 enumerated objects per sweep).

pub mod additive;
pub mod arank;
pub mod budget;
pub mod census;
pub mod error;
pub mod field;
pub mod forcing;
pub mod poly;
pub mod prank;
pub mod tensor;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::{FMatrix, FVector, FieldSpec, Subspace};
pub use tensor::{ModeSet, PureTensor, Shape, Tensor};
