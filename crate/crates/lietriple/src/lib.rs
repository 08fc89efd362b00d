//! Exact-arithmetic computational algebra for Lie-Yamaguti algebras (also known
//! as Lie triple algebras or general Lie triple systems).
//!
//! The crate provides:
//!
//! - [`exactla`]: arbitrary-precision rational linear algebra (rank, kernel,
//!   solve) with deterministic pivoting,
//! - [`lya`]: Lie-Yamaguti algebras as structure constants, axiom checkers,
//!   and the standard constructions (Lie algebras, Leibniz algebras,
//!   reductive decompositions, omni-Lie algebras),
//! - [`rep`]: representations `(rho, D, theta)`, the adjoint representation,
//!   actions and semidirect products,
//! - [`cochain`]: cochain spaces with pair-skew signatures and the coboundary
//!   operators `delta`, `Delta_2`, `Delta_3` as exact matrices,
//! - [`cohomology`]: cocycle/coboundary membership and cohomology dimensions,
//!   including the `(3,4,4,5)` group,
//! - [`twoterm`]: 2-term L-infinity-triple algebras, homomorphisms, and the
//!   skeletal correspondence,
//! - [`crossed`]: crossed modules, the strict correspondence, constructions
//!   from Leibniz and reductive Lie crossed modules, and cocycle extraction
//!   from crossed-module extensions.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals, and
//! every identity check is an exact zero test. The linear algebra kernel is
//! generic over the scalar type; the rest of the crate works over [`Q`].

pub mod cochain;
pub mod cohomology;
pub mod crossed;
pub mod exactla;
pub mod fixtures;
pub mod lya;
pub mod random;
pub mod rep;
pub mod report;
pub mod tensor;
pub mod twoterm;

/// The scalar type used throughout the crate: arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

pub use exactla::{Matrix, Subspace};
pub use report::{AxiomCheck, AxiomReport, Witness, WitnessMode};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Dimension or shape mismatch between inputs.
    #[error("dimension mismatch: {0}")]
    Dim(String),
    /// A construction-time skew-symmetry requirement was violated.
    #[error("skew-symmetry violation: {0}")]
    Skew(String),
    /// A precondition check failed on otherwise well-formed input.
    #[error("invalid input: {check} failed{}", detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default())]
    Invalid {
        /// Name of the failed check.
        check: String,
        /// Optional witness description.
        detail: Option<String>,
    },
    /// An internal consistency assertion failed. This indicates a bug or a
    /// violated theorem, never bad user input.
    #[error("internal consistency violation: {0}")]
    Internal(String),
    /// A resource guard tripped.
    #[error("codomain size {needed} exceeds limit {cap}")]
    SizeLimit {
        /// Required size.
        needed: usize,
        /// Configured cap.
        cap: usize,
    },
}

impl Error {
    pub(crate) fn invalid(check: impl Into<String>) -> Self {
        Error::Invalid { check: check.into(), detail: None }
    }

    pub(crate) fn invalid_with(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Invalid { check: check.into(), detail: Some(detail.into()) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
