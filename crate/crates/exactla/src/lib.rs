//! Exact linear algebra over commutative rings.
//!
//! Determinant and characteristic-polynomial algorithms written once against
//! the [`ring::Ring`] trait, fast multiplication kernels, modular (CRT)
//! computation over the integers, generalized Moore-Penrose inverses, and a
//! benchmark harness. Every ring operation can be counted through
//! [`ring::Counted`] and [`ring::with_counting`].

pub mod bench;
pub mod charpoly;
pub mod elimination;
pub mod error;
pub mod matrix;
pub mod modular;
pub mod pinv;
pub mod poly;
pub mod ring;
pub mod sequences;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use ring::{Counted, OpStats, Ring, RingSpec};
