//! Max-plus supereigenvector spaces.
//!
//! For a square matrix `A` over ℝ ∪ {−∞} this crate computes the unique
//! scaled basis of `{x : A ⊗ x ≥ x}` by generating extremals from the
//! nonnegative elementary cycles of the matrix digraph and from the maximum
//! paths entering them, and cross-checks the result against a cycle/path
//! generating set and against the tropical double description method.
//!
//! ```
//! use maxplus::fixtures::example_matrix;
//! use maxplus::supereig::{scaled_basis, Config};
//!
//! let report = scaled_basis(&example_matrix(), &Config::default()).unwrap();
//! assert_eq!(report.basis.len(), 10);
//! ```

pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod supereig;
pub mod vector;

pub use error::{Error, Result};
pub use matrix::MpMatrix;
pub use scalar::ExtReal;
pub use supereig::{BasisReport, Config, ScaledBasis};
pub use vector::MpVector;
