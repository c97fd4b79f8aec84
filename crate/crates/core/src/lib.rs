//! p-Frobenius vectors of affine semigroups `S ⊆ ℕ^q`.
//!
//! `F_p(S)` is the largest element of `S`, under a graded order, having at
//! least one and at most `p` factorizations over the minimal generators.
//! The crate decides when it is finite, computes it with several
//! algorithms built on binomial Gröbner bases of the semigroup ideal, and
//! studies its behaviour under gluing with `ℕ^q`. A brute-force [`oracle`]
//! independent of the Gröbner machinery cross-checks every algorithm.

pub mod cone;
pub mod error;
pub mod factorization;
pub mod frobenius;
pub mod gluing;
pub mod groebner;
pub mod io;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{compare_graded, minimalize_generators, ExpVec, FrobeniusResult, OrderKind, OrderSpec, Point, Semigroup};
