//! Exact weight-space combinatorics of affine Kac–Moody algebras at the
//! critical level.
//!
//! The crate covers affine root data and the Weyl group dot action, the
//! linkage relations and their classes inside finite windows, subgeneric
//! critical chains with their multiplicity and Hom tables, truncated Verma
//! characters, and the path algebra of the line quiver with zigzag
//! relations that presents the endomorphism algebra of a projective
//! generator of a subgeneric restricted block.
//!
//! All arithmetic is exact ([`rational::Q`] is an arbitrary precision
//! rational). The invariant form is normalized by `(θ, θ) = 2`.

pub mod affine_weights;
pub mod characters;
pub mod cli;
pub mod error;
pub mod linkage;
pub mod rational;
pub mod root_data;
pub mod subgeneric;
pub mod weyl;
pub mod zigzag;

pub use affine_weights::{AffineRoot, AffineSystem, AffineWeight};
pub use error::{Error, Result};
pub use linkage::{BlockClass, Relation, Window};
pub use rational::Q;
pub use root_data::FiniteRootSystem;
pub use subgeneric::{SubgenericDatum, Verdict};
pub use weyl::{Reflection, ReflectionWord};
