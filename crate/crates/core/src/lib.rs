//! Spectral theory of the half-line Schrödinger operator `−∂_r² + (α − ¼) r^{−2}`
//! and its self-adjoint realizations, in `no_std` with `alloc`.
#![no_std]
// negated comparisons are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod bessel;
mod dd;
pub mod entire;
pub mod error;
pub mod gamma;
mod plane;
pub mod quad;
pub mod solutions;
pub mod spectral;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use plane::CutPlanePoint;
