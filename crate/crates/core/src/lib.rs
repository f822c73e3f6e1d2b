//! Exact enumeration of integral binary forms up to unimodular equivalence,
//! weighted class numbers, and machine checks of reflection identities.
//!
//! The crate is `no_std` and only needs `alloc`. All counting paths use
//! arbitrary-precision integers and exact rationals. Floating point appears in
//! one place, [`numeric`], where it proposes candidate matrices that are then
//! verified exactly.
//!
//! # Action convention
//!
//! A matrix `[[p, q], [r, s]]` acts on a form on the right:
//! `(f . M)(x, y) = f(p x + q y, r x + s y)`, so `(f . A) . B = f . (A B)`.
//! A root `z` of `f . M` satisfies `M(z) = (p z + q) / (r z + s)` being a root
//! of `f`.

#![no_std]

extern crate alloc;

pub mod boxes;
pub mod classgroup;
pub mod cubic;
pub mod error;
pub mod fourier;
pub mod forms;
pub mod numeric;
pub mod quad;
pub mod quartic;
pub mod subring;

pub use error::{Error, Result};
pub use forms::{BinaryForm, SplittingType, UnimodularMatrix, WeightedCount};
