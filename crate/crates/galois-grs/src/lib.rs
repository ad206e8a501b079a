//! Exact algebraic coding over GF(p^h): Galois inner products, duals and
//! hulls, self-orthogonal (extended) generalized Reed-Solomon constructions,
//! hull-tracking puncture/shorten transforms, and quantum MDS parameter
//! derivation.
//!
//! Start with [`field::Field`] to build a field, `constructions::build` to
//! produce a certified self-orthogonal code, and the `derive` module to
//! transform it. The `examples/` directory contains one runnable example per
//! capability; a thin `ggrs` binary exposes the same operations on the
//! command line.

pub mod codes;
pub mod constructions;
pub mod conway;
pub mod derive;
pub mod export;
pub mod field;
pub mod grs;
pub mod linalg;
pub mod provenance;
pub mod quantum;
pub mod tables;

pub use codes::{galois_inner, LinearCode};
pub use field::{Felt, Field};
pub use grs::{CertificatePoly, GrsSpec};
