//! Degenerate Clifford algebra Cl(1,0,3) and the geometry built on top of it:
//! the Galilei group with its double cover, Newton-Cartan tensor calculus,
//! the lifted spinor connection and the Levy-Leblond operator.
//!
//! The crate is `no_std` (with `alloc`); all IO, configuration and the
//! command-line solver live in the companion `ll-cli` crate.

#![no_std]
#![deny(unsafe_code)]
// Indexed loops mirror the tensor index notation; `!(x > 0)` guards reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod clifford;
pub mod error;
pub mod linalg;
pub mod nc;
pub mod spin;
pub mod spinor;
pub mod tol;

pub use clifford::{blade_mul, BladeMask, Multivector, Signature};
pub use error::Error;
pub use spin::{GalileiMatrix, So103Element, Spin103AlgebraElement, Spin103Element, Spin3Element};
