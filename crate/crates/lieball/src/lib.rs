//! Exact-arithmetic construction and analysis of real matrix Lie algebras:
//! certified irreducibility decisions, representation-type classification,
//! invariant forms with exact signatures, and the geometry of totally
//! geodesic submanifolds of the Lie ball, including the explicit
//! biholomorphism with the bounded domain of type IV.
//!
//! Everything is computed over Q, Q(sqrt D), or their Gaussian extensions;
//! there is no floating point and every verdict ships with an independently
//! re-checkable witness.

// index loops read better than iterator chains in dense elimination code
#![allow(clippy::needless_range_loop)]

pub mod battery;
pub mod builtins;
pub mod domainiv;
pub mod error;
pub mod exhaustive;
pub mod input;
pub mod liealg;
pub mod matrix;
pub mod poly;
pub mod repcheck;
pub mod report;
pub mod scalar;
pub mod symspace;

pub use error::{Error, Result};
pub use liealg::{LieAlgebra, SignatureForm};
pub use matrix::{Matrix, Subspace};
pub use scalar::{Field, Scalar};
