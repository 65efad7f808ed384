//! Copositivity of 4th-order symmetric tensors in dimensions 2 and 3.
//!
//! - [`tensor`]: canonical sparse storage, evaluation of `T x^m`, principal
//!   subtensors and the zero-diagonal necessary condition.
//! - [`binary`]: exact criteria for 2x2 matrices, binary cubics and binary
//!   quartics.
//! - [`sign`]: decision tables for tensors with entries in `{-1, 0, 1}` and
//!   the rule dispatcher.
//! - [`oracle`]: exact brute-force minimization over the simplex lattice.
//! - [`enumeration`]: the built-in sign-tensor families and the harness that
//!   checks every classifier against the oracle.

pub mod binary;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod sign;
pub mod tensor;
pub mod verdict;

pub use error::{Error, Result};
pub use scalar::{NumericMode, Scalar};
pub use tensor::{MultiIndex, SymTensor};
pub use verdict::{Verdict, Witness, WitnessKind};
