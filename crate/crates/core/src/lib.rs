//! Exact combinatorics for refined dual stable Grothendieck polynomials.
//!
//! The crate computes truncations of
//!
//! ```text
//! g̃_{λ/μ}(x; t) = Σ_{T rpp of shape λ/μ} t^{ceq(T)} x^{ircont(T)}
//! ```
//!
//! over skew shapes, and implements the generalized Bender-Knuth involutions
//! `B_i` on reverse plane partitions. `B_i` is built from a descent-resolution
//! rewriting system on `{1,2}`-tables whose normal forms are unique, which the
//! [`bkengine`] module both uses and checks. The [`structure`] module covers
//! the classification of `{1,2}`-rpps by their seplist-partition and the
//! closed form of the two-variable coefficients `Q_α`.
//!
//! # `no_std` support
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the companion `bkrpp` crate.
//!
//! # Conventions
//!
//! Cells are 1-based `(row, col)` pairs in English (matrix) notation: `(1,1)`
//! is the top-left box and `(2,1)` sits directly below it. Column intervals
//! in the API are half-open `[a, b)`.
//!
//! # Example
//!
//! ```
//! use bkrpp_core::{gseries, shapes::SkewShape};
//!
//! let shape: SkewShape = "2,1".parse().unwrap();
//! let g = gseries::gtilde(&shape, 2);
//! assert_eq!(g.to_string(), "x1^2*x2 + x1*x2^2 + t1*x1^2 + t1*x1*x2 + t1*x2^2");
//! assert!(gseries::check_symmetry(&shape, 2));
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bkengine;
pub mod error;
pub mod fixtures;
pub mod gseries;
pub mod polynomial;
pub mod shapes;
pub mod structure;
pub mod tableaux;

pub use error::{Error, Result};
