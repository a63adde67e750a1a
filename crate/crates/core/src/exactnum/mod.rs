//! Exact arithmetic over Q(sqrt5) and exact 4-vector linear algebra.

mod elimination;
mod golden;
mod lattice;
mod vector;

pub use elimination::{rank_and_kernel, RankKernel};
pub use golden::GoldenNumber;
pub use lattice::{cross3, integerize, IntGolden, IntVector4, ScaledVectors};
pub use vector::{Point4, Vector4};
