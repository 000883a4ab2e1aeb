//! Exact-arithmetic Hurwitz transformations on Cayley-Dickson algebras.
//!
//! This crate implements the 2-, 4- and 8-dimensional Cayley-Dickson
//! algebras `A(c)` over exact rational scalars, the Hurwitz matrix
//! `H(u;c)` and its Clifford decomposition, the transformation family
//! `T[N;c;eps]` with its A/B/C type classification, the induced
//! quadratic and nonquadratic forms, the associated differential
//! identities, integer solutions of the related Diophantine equations,
//! and the Schrodinger potential-duality map.
//!
//! All core arithmetic is exact (arbitrary-precision rationals);
//! floating point appears only in the finite-difference fallbacks of
//! the [`calculus`] module.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the CLI
//! live in the companion `hurwitz-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod calculus;
pub mod dio;
pub mod dynamics;
pub mod fibration;
pub mod matrix;
pub mod poly;
pub mod selfcheck;
pub mod transform;

use core::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

pub use algebra::{AlgebraSignature, Element, Metric, SignVector};
pub use matrix::{GammaSet, HurwitzBasis, RatMat};
pub use transform::{QuadraticFormMap, TransformSpec, TransformType};

/// Errors shared by all modules.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An element, sign vector or matrix does not match the signature's
    /// dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A signature or sign vector failed a construction invariant.
    InvalidInput(&'static str),
    /// Division required at a point of the null cone `u' eta u = 0`.
    NullCone,
    /// An exact identity that must hold by construction failed;
    /// indicates an implementation bug, never expected.
    IdentityViolation(&'static str),
    /// The transform falls outside the classified fibration cases.
    UnclassifiedSpec,
    /// A Diophantine tuple has the wrong number of components.
    ArityMismatch { expected: usize, got: usize },
    /// `(alpha, N)` does not satisfy the exponent condition of the
    /// potential-duality map.
    InadmissiblePair,
    /// A supplied differential does not lie in the constraint kernel.
    ConstraintViolation,
    /// A finite-difference check exceeded its relative tolerance.
    ToleranceExceeded { lhs: f64, rhs: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NullCone => write!(f, "null-cone element: u' eta u = 0"),
            Error::IdentityViolation(what) => write!(f, "identity violation: {what}"),
            Error::UnclassifiedSpec => write!(f, "transform is not a classified fibration case"),
            Error::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected}, got {got}")
            }
            Error::InadmissiblePair => write!(f, "(alpha, N) fails 2N - alpha(N+1) = 0"),
            Error::ConstraintViolation => write!(f, "differential violates a constraint one-form"),
            Error::ToleranceExceeded { lhs, rhs } => {
                write!(f, "tolerance exceeded: lhs = {lhs}, rhs = {rhs}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
