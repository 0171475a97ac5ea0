//! Exact-arithmetic toolkit for generalized Kirchhoff analysis on signed
//! graphs.
//!
//! The crate models signed graphs as oriented incidence structures, builds
//! their exact integer matrices (Laplacian, incidence, degree, adjacency,
//! signless Laplacian), enumerates contributors (incidence-based cycle
//! covers) and their Boolean activation classes, counts 2-arborescences,
//! and cross-validates transpedance values computed along four independent
//! routes:
//!
//! * signed contributor sums ([`contributor`]),
//! * activation-class maxima ([`activation`]),
//! * degree-2 coefficients of the total minor polynomial ([`matrix`]),
//! * rooted 2-arborescence counts ([`arborescence`]).
//!
//! The [`laws`] module turns those routes into machine-checkable verdicts
//! for each Kirchhoff-type law (degeneracy, energy reversal, cycle and
//! vertex conservation, path property, Boolean class structure, permanent
//! counts, parity-polarity reversal).
//!
//! All arithmetic is exact: matrix kernels run on arbitrary-precision
//! integers and enumeration sums never round.

#![forbid(unsafe_code)]

pub mod activation;
pub mod arborescence;
pub mod contributor;
pub mod error;
pub mod incidence;
pub mod io;
pub mod laws;
pub mod matrix;

pub use error::Error;
pub use incidence::{Edge, Incidence, IncidenceStructure, SignedGraphView};
pub use matrix::IntMatrix;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
