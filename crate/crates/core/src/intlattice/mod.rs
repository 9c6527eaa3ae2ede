//! Exact integer linear algebra: row-style Hermite normal form, saturated
//! kernels, lattice content and coordinates in a basis.

mod hnf;
mod lattice;
mod matrix;

pub use hnf::{hnf, kernel_basis, rank};
pub use lattice::{content, express_in_basis, min_content, primitive_witness, LatticeBasis};
pub use matrix::IntMatrix;
