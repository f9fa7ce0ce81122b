//! Reference matrices shared by tests, examples and the CLI documentation.

use crate::matrix::MpMatrix;

const N: Option<i64> = None;

/// A 5×5 matrix with four nonnegative elementary cycles, all passing through
/// node 2, and a ten-element scaled basis for `A ⊗ x ≥ x`.
pub fn example_matrix() -> MpMatrix {
    MpMatrix::from_ints(&[
        &[Some(-3), Some(1), N, N, N],
        &[Some(1), Some(1), Some(1), N, N],
        &[N, Some(0), N, Some(2), N],
        &[Some(1), N, Some(-5), N, Some(-7)],
        &[Some(-2), Some(-2), Some(-7), Some(1), N],
    ])
    .expect("rows have equal length")
}
