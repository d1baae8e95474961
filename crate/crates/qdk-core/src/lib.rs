//! Exact combinatorics over finite fields.
//!
//! This crate constructs and verifies the classical objects of q-analog
//! combinatorics at desk scale, with every counting claim backed by an
//! enumeration path:
//!
//! - [`gf`]: finite fields GF(p^m) in a polynomial basis with a canonical
//!   deterministic modulus, element orders, Frobenius, minimal polynomials.
//! - [`poly`]: univariate polynomial algebra, cyclotomic cosets,
//!   factorization of x^n - 1, falling factorials and Stirling numbers.
//! - [`grassmann`]: canonical (RREF) subspaces, Grassmannian enumeration,
//!   the Gaussian binomial, and the subspace (injection) metric.
//! - [`group`]: matrix groups acting on the Grassmannian by right
//!   multiplication: closures, Singer cycles, symmetric powers, orbits,
//!   invariant subspaces.
//! - [`design`]: q-ary t-design verification, splitting subspaces, the
//!   projective-line Steiner system, and design reports for group-invariant
//!   block sets.
//! - [`code`]: cyclic codes from root sets, Reed-Solomon evaluation codes
//!   on the normal rational curve, brute-force minimum distance, arcs.
//!
//! All arithmetic is exact (machine integers, big integers, or big
//! rationals). Operations that enumerate take an explicit `cap` so callers
//! control the blow-up budget; the `DEFAULT_*` constants give the desk-scale
//! defaults. Every value is immutable once built and safe to share across
//! threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod code;
pub mod design;
pub mod gf;
pub mod grassmann;
pub mod group;
mod mat;
pub mod poly;

pub use error::{Error, Result};

/// Default cap on field size `p^m` for [`gf::FieldSpec::new`].
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// Default cap on the number of subspaces an enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Default cap on candidate polynomials / codewords in brute-force counts.
pub const DEFAULT_SEARCH_CAP: u64 = 1 << 24;

/// Default cap on group closure size.
pub const DEFAULT_CLOSURE_CAP: u64 = 1_000_000;
